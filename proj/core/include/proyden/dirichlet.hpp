#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "proyden/graph.hpp"

namespace proyden {

struct SolverOptions {
  double tol_update = 1e-10;
  double tol_residual = 1e-8;
  std::size_t max_sweeps = 1'000'000;
  /// Interleave each relaxation sweep with a weighted-Laplacian correction
  /// step (exact line search, energy nonincreasing). Disabling it leaves plain
  /// nonlinear Gauss-Seidel.
  bool subspace_correction = true;
};

/// Minimize the p-energy over the free vertices with all other values pinned.
struct DirichletProblem {
  std::vector<bool> free;
  /// Pinned values; entries at free vertices are ignored.
  GraphFunction data;
  double p = 2.0;
  SolverOptions options{};
  /// Starting values for the free vertices (clamped into the pinned range).
  /// Defaults to the mean of the pinned values.
  std::optional<GraphFunction> initial{};
};

/// Free = every vertex without a pin.
DirichletProblem pinned_problem(const WeightedGraph& g,
                                const std::vector<std::pair<Vertex, double>>& pins, double p,
                                const SolverOptions& options = {});

struct SolveReport {
  std::size_t sweeps = 0;
  double max_update = 0.0;
  double residual = 0.0;
  /// Total p-energy before the first sweep and after every sweep.
  std::vector<double> energy;
  bool converged = false;
  SolverOptions options{};
  std::size_t free_vertices = 0;
  std::vector<std::string> warnings;
};

struct DirichletSolution {
  GraphFunction values;
  SolveReport report;
};

/// Unique energy minimizer with the given pinned values.
///
/// Throws SolveError if some free vertex cannot reach pinned data through
/// free vertices. Non-convergence within max_sweeps is reported, not thrown.
DirichletSolution solve_dirichlet(const WeightedGraph& g, const DirichletProblem& problem);

/// max over free x of |sum_y c_xy |u(y) - u(x)|^(p-2) (u(y) - u(x))|.
double residual(const WeightedGraph& g, std::span<const double> u, double p,
                const std::vector<bool>& free);
double residual(const WeightedGraph& g, std::span<const double> u, double p,
                const VertexSet& free);

struct ComparisonCertificate {
  /// max over vertices of (h1 - h2)^+.
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool holds = false;
  DirichletSolution lower;
  DirichletSolution upper;
};

/// Solves both problems and certifies h1 <= h2 + 2 tol_update everywhere.
/// Requires identical free sets and exponents and data1 <= data2 on pins.
ComparisonCertificate compare(const WeightedGraph& g, const DirichletProblem& lower,
                              const DirichletProblem& upper);

}  // namespace proyden
