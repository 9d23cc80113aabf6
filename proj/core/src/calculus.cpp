#include "proyden/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "proyden/power.hpp"

namespace proyden {

namespace {

void check_size(const WeightedGraph& g, std::span<const double> u) {
  if (u.size() != g.num_vertices()) {
    throw InvalidArgument("function has " + std::to_string(u.size()) + " values but graph has " +
                          std::to_string(g.num_vertices()) + " vertices");
  }
}

}  // namespace

void require_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw InvalidArgument("exponent p must be a finite real > 1, got " + std::to_string(p));
  }
}

EdgeField grad(const WeightedGraph& g, std::span<const double> u) {
  check_size(g, u);
  EdgeField out(g.num_edges());
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    out[e] = std::abs(u[ed.u] - u[ed.v]) / ed.length;
  }
  return out;
}

double p_energy(const WeightedGraph& g, std::span<const double> u, double p) {
  require_exponent(p);
  check_size(g, u);
  const PowerLaw law(p);
  double total = 0.0;
  for (const Edge& ed : g.edges()) total += ed.conductance * law.abs_pow(u[ed.u] - u[ed.v]);
  return total;
}

double regularized_energy(const WeightedGraph& g, std::span<const double> u, double p,
                          double eps) {
  if (eps == 0.0) return p_energy(g, u, p);
  require_exponent(p);
  check_size(g, u);
  double total = 0.0;
  for (const Edge& ed : g.edges()) {
    const double d = u[ed.u] - u[ed.v];
    total += ed.conductance * std::pow(d * d + eps * eps, 0.5 * p);
  }
  return total;
}

GraphFunction energy_gradient(const WeightedGraph& g, std::span<const double> u, double p,
                              double eps) {
  require_exponent(p);
  check_size(g, u);
  if (eps < 0.0) throw InvalidArgument("energy_gradient: eps must be nonnegative");
  const PowerLaw law(p);
  GraphFunction out(g.num_vertices(), 0.0);
  for (const Edge& ed : g.edges()) {
    const double d = u[ed.u] - u[ed.v];
    const double phi = eps == 0.0 ? law.psi(d) : std::pow(d * d + eps * eps, 0.5 * (p - 2.0)) * d;
    const double term = p * ed.conductance * phi;
    out[ed.u] += term;
    out[ed.v] -= term;
  }
  return out;
}

double lp_mass(const WeightedGraph& g, std::span<const double> u, double p) {
  check_size(g, u);
  const PowerLaw law(p);
  double total = 0.0;
  for (Vertex x = 0; x < g.num_vertices(); ++x) total += g.measure(x) * law.abs_pow(u[x]);
  return total;
}

double n1p_norm(const WeightedGraph& g, std::span<const double> u, double p) {
  require_exponent(p);
  return std::pow(lp_mass(g, u, p) + p_energy(g, u, p), 1.0 / p);
}

double sup_norm(std::span<const double> u) {
  double m = 0.0;
  for (double x : u) m = std::max(m, std::abs(x));
  return m;
}

EdgeField product_upper_gradient(const WeightedGraph& g, std::span<const double> u,
                                 std::span<const double> v) {
  const double nu = sup_norm(u);
  const double nv = sup_norm(v);
  EdgeField gu = grad(g, u);
  const EdgeField gv = grad(g, v);
  for (EdgeIndex e = 0; e < gu.size(); ++e) gu[e] = nu * gv[e] + nv * gu[e];
  return gu;
}

GraphFunction clamp(std::span<const double> u, double lo, double hi) {
  if (lo > hi) throw InvalidArgument("clamp: lower bound exceeds upper bound");
  GraphFunction out(u.begin(), u.end());
  for (double& x : out) x = std::clamp(x, lo, hi);
  return out;
}

ConvergenceReport bdp_convergence(const WeightedGraph& g,
                                  const std::vector<GraphFunction>& sequence,
                                  std::span<const double> limit,
                                  const std::vector<VertexSet>& compacts, double p,
                                  std::optional<double> bound) {
  require_exponent(p);
  if (sequence.empty()) throw InvalidArgument("bdp_convergence: empty sequence");
  check_size(g, limit);
  ConvergenceReport report;
  GraphFunction diff(limit.size());
  for (const auto& un : sequence) {
    check_size(g, un);
    for (std::size_t x = 0; x < diff.size(); ++x) diff[x] = un[x] - limit[x];
    std::vector<double> devs;
    devs.reserve(compacts.size());
    for (const VertexSet& k : compacts) {
      double m = 0.0;
      for (Vertex x : k) m = std::max(m, std::abs(diff[x]));
      devs.push_back(m);
    }
    report.sup_deviation.push_back(std::move(devs));
    report.energy_of_difference.push_back(p_energy(g, diff, p));
    report.sup_norms.push_back(sup_norm(un));
  }
  report.bound = bound ? *bound
                       : 2.0 * std::max({sup_norm(limit), report.sup_norms.front(), 1e-300});
  report.uniformly_bounded =
      std::all_of(report.sup_norms.begin(), report.sup_norms.end(),
                  [&](double s) { return s <= report.bound; });
  return report;
}

}  // namespace proyden
