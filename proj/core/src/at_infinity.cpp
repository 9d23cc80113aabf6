#include "proyden/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace proyden {

AtInfinityResult dirichlet_at_infinity(const WeightedGraph& g, const EndProfile& profile,
                                       const std::vector<double>& data, const Exhaustion& ex,
                                       double p, const ExhaustionOptions& options) {
  if (!profile.stable)
    throw InvalidArgument("dirichlet_at_infinity: end profile is unstable; group the ends first");
  if (profile.ends.empty()) throw InvalidArgument("dirichlet_at_infinity: no ends");
  if (data.size() != profile.ends.size())
    throw InvalidArgument("dirichlet_at_infinity: expected " +
                          std::to_string(profile.ends.size()) + " end values, got " +
                          std::to_string(data.size()));
  for (double v : data)
    if (!std::isfinite(v)) throw InvalidArgument("dirichlet_at_infinity: end data not finite");
  if (ex.levels.empty() || ex.radii.back() <= profile.probe_radius())
    throw InvalidArgument("dirichlet_at_infinity: exhaustion must reach beyond the probe radius");
  if (ex.basepoint != profile.basepoint)
    throw InvalidArgument("dirichlet_at_infinity: exhaustion and ends use different basepoints");

  const std::size_t n = g.num_vertices();
  AtInfinityResult out;

  // Extension: end values on the far regions, harmonic interpolation elsewhere.
  DirichletProblem extension;
  extension.free.assign(n, false);
  extension.data.assign(n, 0.0);
  extension.p = p;
  extension.options = options.solver;
  bool any_free = false;
  for (Vertex x = 0; x < n; ++x) {
    const auto e = profile.assignment[x];
    if (e < 0) {
      extension.free[x] = true;
      any_free = true;
    } else {
      extension.data[x] = data[static_cast<std::size_t>(e)];
    }
  }
  if (any_free) {
    auto sol = solve_dirichlet(g, extension);
    if (!sol.report.converged)
      throw SolveError("dirichlet_at_infinity: extension solve did not converge");
    out.extension = std::move(sol.values);
    out.extension_report = std::move(sol.report);
  } else {
    out.extension = extension.data;
  }

  out.exhaustion = exhaustion_solve(g, out.extension, ex, p, options);
  if (!out.exhaustion.cauchy)
    throw NotCauchyError("dirichlet_at_infinity: exhaustion is not Cauchy", std::move(out.exhaustion));
  out.solution = out.exhaustion.limit;

  const auto dist = distances_from(g, ex.basepoint);
  const auto deepest = ex.levels[out.exhaustion.selected.back()].mask(n);
  for (std::size_t e = 0; e < profile.ends.size(); ++e) {
    EndTrace trace;
    trace.end = profile.ends[e].name;
    trace.data = data[e];
    trace.ray = canonical_ray(g, ex.basepoint, profile.ends[e].region);
    for (Vertex x : trace.ray) {
      trace.depth.push_back(dist[x]);
      trace.deviation.push_back(std::abs(out.solution[x] - data[e]));
      trace.free.push_back(deepest[x]);
      if (deepest[x]) trace.deepest_free_deviation = trace.deviation.back();
    }
    out.traces.push_back(std::move(trace));
  }
  return out;
}

}  // namespace proyden
