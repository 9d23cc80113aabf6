#pragma once

#include <optional>
#include <span>
#include <vector>

#include "proyden/graph.hpp"

namespace proyden {

/// Throws InvalidArgument unless p > 1 and finite.
void require_exponent(double p);

/// Edgewise minimal upper gradient |u(x) - u(y)| / length.
EdgeField grad(const WeightedGraph& g, std::span<const double> u);

/// Sum over edges of conductance * |u(x) - u(y)|^p.
double p_energy(const WeightedGraph& g, std::span<const double> u, double p);

/// Sum over edges of conductance * ((u(x) - u(y))^2 + eps^2)^(p/2). Equals
/// p_energy when eps = 0.
double regularized_energy(const WeightedGraph& g, std::span<const double> u, double p, double eps);

/// Gradient of regularized_energy with respect to the vertex values:
/// p * sum_y c_xy ((u(x) - u(y))^2 + eps^2)^((p-2)/2) (u(x) - u(y)).
GraphFunction energy_gradient(const WeightedGraph& g, std::span<const double> u, double p,
                              double eps = 0.0);

/// (sum_x mu(x) |u(x)|^p + E_p(u))^(1/p).
double n1p_norm(const WeightedGraph& g, std::span<const double> u, double p);

/// sum_x mu(x) |u(x)|^p.
double lp_mass(const WeightedGraph& g, std::span<const double> u, double p);

double sup_norm(std::span<const double> u);

/// ||u||_inf grad(v) + ||v||_inf grad(u); dominates grad(u v) edgewise.
EdgeField product_upper_gradient(const WeightedGraph& g, std::span<const double> u,
                                 std::span<const double> v);

/// Pointwise truncation to [lo, hi]. Throws InvalidArgument if lo > hi.
GraphFunction clamp(std::span<const double> u, double lo, double hi);

struct ConvergenceReport {
  /// sup_deviation[n][k] = max over compacts[k] of |u_n - limit|.
  std::vector<std::vector<double>> sup_deviation;
  /// energy_of_difference[n] = E_p(u_n - limit).
  std::vector<double> energy_of_difference;
  std::vector<double> sup_norms;
  double bound = 0.0;
  bool uniformly_bounded = true;
};

/// Local-uniform and energy convergence of a sequence towards `limit`.
///
/// The sequence counts as uniformly bounded when every sup norm stays within
/// `bound`; without an explicit bound, 2 * max(||limit||, ||u_1||, 1e-300) is used.
ConvergenceReport bdp_convergence(const WeightedGraph& g,
                                  const std::vector<GraphFunction>& sequence,
                                  std::span<const double> limit,
                                  const std::vector<VertexSet>& compacts, double p,
                                  std::optional<double> bound = std::nullopt);

}  // namespace proyden
