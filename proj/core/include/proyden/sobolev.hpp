#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "proyden/graph.hpp"

namespace proyden {

struct SobolevOptions {
  /// One all-ones start plus (starts - 1) seeded random positive starts.
  std::size_t starts = 4;
  std::uint64_t seed = 0x5eed;
  /// Relative change of the quotient between outer iterations.
  double tolerance = 1e-13;
  std::size_t max_iterations = 20'000;
  /// Sweep cap of each inner p-Poisson solve.
  std::size_t max_inner_sweeps = 200'000;
};

struct SobolevResult {
  /// Best quotient E_p(u) / sum mu |u|^p found: an upper bound on the infimum.
  double value = 0.0;
  /// value^(-1/p), the matching lower bound for the inequality constant.
  double constant = 0.0;
  /// Minimizing function, zero outside the interior, normalized sum mu |u|^p = 1.
  GraphFunction minimizer;
  /// max over interior x of |sum_y c_xy psi(u(x) - u(y)) - value mu(x) psi(u(x))|.
  double residual = 0.0;
  std::vector<double> per_start;
  std::size_t iterations = 0;
  bool converged = false;
};

/// inf of E_p(u) / sum_x mu(x) |u(x)|^p over u supported in `interior`.
///
/// Nonlinear inverse iteration: each step solves the p-Poisson problem with
/// source mu psi(u) by coordinate relaxation, then renormalizes. The quotient
/// is nonconvex for p != 2, so the result is the best over several starts.
/// Throws InvalidArgument if `interior` is empty or covers every vertex.
SobolevResult sobolev_constant(const WeightedGraph& g, const VertexSet& interior, double p,
                               const SobolevOptions& options = {});

}  // namespace proyden
