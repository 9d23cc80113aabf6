#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "proyden/dirichlet.hpp"
#include "proyden/family.hpp"

namespace proyden {

struct ParabolicityThresholds {
  /// Parabolic needs a fitted log-log slope <= -slope.
  double slope = 0.1;
  /// Parabolic needs final capacity < eps_par; hyperbolic needs >= eps_par.
  double eps_par = 1e-2;
  /// Hyperbolic needs relative change over the last `window` levels < delta.
  double delta = 1e-2;
  std::size_t window = 3;
};

enum class Classification { parabolic, hyperbolic, undetermined };

struct ParabolicityResult {
  std::vector<std::size_t> sizes;
  /// capacity({o}, frontier) of each truncation.
  std::vector<double> capacities;
  std::vector<SolveReport> reports;
  double slope = 0.0;
  double relative_change = 0.0;
  bool nonincreasing = true;
  Classification classification = Classification::undetermined;
  ParabolicityThresholds thresholds{};
};

/// Decision rule alone, on an already computed capacity sequence.
ParabolicityResult classify(std::vector<std::size_t> sizes, std::vector<double> capacities,
                            const ParabolicityThresholds& thresholds = {});

/// Capacities from the family's basepoint to each truncation's frontier.
/// Requires at least 3 strictly increasing sizes. Levels are solved in
/// parallel; a failed or non-converged level throws SolveError naming it.
ParabolicityResult parabolicity(const FamilySpec& family, const std::vector<std::size_t>& sizes,
                                double p, const ParabolicityThresholds& thresholds = {},
                                const SolverOptions& options = {});

std::string to_string(Classification c);

}  // namespace proyden
