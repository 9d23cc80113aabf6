#include "proyden/parabolicity.hpp"

#include <cmath>
#include <string>

#include "proyden/capacity.hpp"
#include "proyden/parallel.hpp"

namespace proyden {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::parabolic: return "parabolic";
    case Classification::hyperbolic: return "hyperbolic";
    default: return "undetermined";
  }
}

ParabolicityResult classify(std::vector<std::size_t> sizes, std::vector<double> capacities,
                            const ParabolicityThresholds& thresholds) {
  if (sizes.size() != capacities.size())
    throw InvalidArgument("classify: sizes and capacities differ in length");
  if (sizes.size() < 3) throw InvalidArgument("parabolicity: at least 3 truncation sizes required");
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1])
      throw InvalidArgument("parabolicity: truncation sizes must be strictly increasing");
  if (thresholds.window < 2) throw InvalidArgument("parabolicity: window must be at least 2");

  ParabolicityResult out;
  out.thresholds = thresholds;
  const std::size_t k = sizes.size();
  for (std::size_t i = 1; i < k; ++i)
    if (capacities[i] > capacities[i - 1] * (1.0 + 1e-9)) out.nonincreasing = false;

  // Least-squares slope of log cap against log size.
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    mx += std::log(static_cast<double>(sizes[i]));
    my += std::log(capacities[i]);
  }
  mx /= static_cast<double>(k);
  my /= static_cast<double>(k);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double dx = std::log(static_cast<double>(sizes[i])) - mx;
    sxy += dx * (std::log(capacities[i]) - my);
    sxx += dx * dx;
  }
  out.slope = sxy / sxx;

  const std::size_t first = k - std::min(thresholds.window, k);
  const double last = capacities.back();
  out.relative_change = std::abs(capacities[first] - last) / last;

  if (out.slope <= -thresholds.slope && last < thresholds.eps_par)
    out.classification = Classification::parabolic;
  else if (out.relative_change < thresholds.delta && last >= thresholds.eps_par)
    out.classification = Classification::hyperbolic;

  out.sizes = std::move(sizes);
  out.capacities = std::move(capacities);
  return out;
}

ParabolicityResult parabolicity(const FamilySpec& family, const std::vector<std::size_t>& sizes,
                                double p, const ParabolicityThresholds& thresholds,
                                const SolverOptions& options) {
  if (sizes.size() < 3) throw InvalidArgument("parabolicity: at least 3 truncation sizes required");
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1])
      throw InvalidArgument("parabolicity: truncation sizes must be strictly increasing");

  std::vector<double> caps(sizes.size());
  std::vector<SolveReport> reports(sizes.size());
  parallel_for(sizes.size(), [&](std::size_t i) {
    const Truncation t = truncate(family, sizes[i]);
    CapacityResult cap;
    try {
      cap = capacity(t.graph, VertexSet({t.basepoint}), t.frontier, p, options);
    } catch (const Error& e) {
      throw SolveError("parabolicity: level " + std::to_string(i) + " (size " +
                       std::to_string(sizes[i]) + "): " + e.what());
    }
    if (!cap.report.converged)
      throw SolveError("parabolicity: level " + std::to_string(i) + " (size " +
                       std::to_string(sizes[i]) + ") did not converge");
    caps[i] = cap.value;
    reports[i] = std::move(cap.report);
  });

  auto out = classify(sizes, std::move(caps), thresholds);
  out.reports = std::move(reports);
  return out;
}

}  // namespace proyden
