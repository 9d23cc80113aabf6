#include "proyden/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace proyden {

std::string to_string(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::empty: return "empty";
    case BoundaryKind::trivial: return "trivial";
    default: return "rich";
  }
}

std::vector<double> default_radii(std::size_t start, std::size_t last, std::size_t levels) {
  if (start == 0 || last < start) throw InvalidArgument("default_radii: need 0 < start <= last");
  std::vector<double> radii;
  if (last - start + 1 <= levels || levels < 2) {
    for (std::size_t r = start; r <= last; ++r) radii.push_back(static_cast<double>(r));
    return radii;
  }
  const double ratio = static_cast<double>(last) / static_cast<double>(start);
  for (std::size_t i = 0; i < levels; ++i) {
    const double r = std::round(static_cast<double>(start) *
                                std::pow(ratio, static_cast<double>(i) / static_cast<double>(levels - 1)));
    if (radii.empty() || r > radii.back()) radii.push_back(r);
  }
  return radii;
}

std::vector<std::size_t> default_probe_sizes(InfiniteFamily kind) {
  switch (kind) {
    case InfiniteFamily::halfline:
    case InfiniteFamily::line: return {64, 128, 256, 512};
    case InfiniteFamily::tree: return {4, 5, 6, 7, 8, 9, 10};
    case InfiniteFamily::grid: return {4, 8, 16};
  }
  return {};
}

ProbeResult boundary_cardinality_probe(const FamilySpec& family, double p,
                                       const ProbeOptions& options) {
  ProbeResult out;
  const auto sizes = options.sizes.empty() ? default_probe_sizes(family.kind) : options.sizes;
  out.parabolicity = parabolicity(family, sizes, p, options.thresholds, options.exhaustion.solver);
  out.truncation_size = sizes.back();
  if (out.parabolicity.classification == Classification::parabolic) {
    out.kind = BoundaryKind::empty;
    return out;
  }

  const Truncation t = truncate(family, sizes.back());
  const auto profile = group_ends(t.graph, t.basepoint, t.group_radius, t.end_groups, t.frontier);
  const auto dist = distances_from(t.graph, t.basepoint);
  const double reach = *std::max_element(dist.begin(), dist.end());
  const auto first = static_cast<std::size_t>(std::floor(t.group_radius)) + 1;
  const auto last = static_cast<std::size_t>(std::max(std::ceil(reach) - 1.0, 1.0));
  std::vector<double> radii;
  for (double r : default_radii(first, std::max(first, last)))
    if (metric_ball(t.graph, t.basepoint, r).size() < t.graph.num_vertices()) radii.push_back(r);
  if (radii.empty()) throw InvalidArgument("probe: truncation too small for an exhaustion");
  const auto ex = exhaustion(t.graph, t.basepoint, radii);

  const double threshold = 10.0 * options.exhaustion.solver.tol_update;
  std::vector<bool> told_apart(profile.ends.size(), false);
  for (std::size_t i = 0; i < profile.ends.size(); ++i) {
    for (std::size_t j = i + 1; j < profile.ends.size(); ++j) {
      std::vector<double> data(profile.ends.size(), 0.0);
      data[i] = 1.0;
      auto sol = dirichlet_at_infinity(t.graph, profile, data, ex, p, options.exhaustion);
      ProbeWitness w{profile.ends[i].name, profile.ends[j].name, std::move(sol.solution)};
      const auto [lo, hi] = std::minmax_element(w.solution.begin(), w.solution.end());
      w.oscillation = *hi - *lo;
      w.nonconstant = w.oscillation > threshold;
      if (w.nonconstant) told_apart[i] = told_apart[j] = true;
      out.witnesses.push_back(std::move(w));
    }
  }
  out.distinguished = static_cast<std::size_t>(std::count(told_apart.begin(), told_apart.end(), true));
  out.kind = out.distinguished >= 2 ? BoundaryKind::rich : BoundaryKind::trivial;
  return out;
}

}  // namespace proyden
