#include "proyden/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "proyden/calculus.hpp"

namespace proyden {

RoydenDecomposition royden_decompose(const WeightedGraph& g, const GraphFunction& f,
                                     const Exhaustion& ex, double p,
                                     const ExhaustionOptions& options, const EndProfile* profile) {
  auto result = exhaustion_solve(g, f, ex, p, options);
  if (!result.cauchy)
    throw NotCauchyError("royden_decompose: exhaustion is not Cauchy on the witness family",
                         std::move(result));

  RoydenDecomposition out;
  out.f = f;
  out.harmonic = result.limit;
  out.potential.resize(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out.potential[x] = f[x] - out.harmonic[x];

  const std::size_t deepest = result.selected.back();
  out.interior = ex.levels[deepest];
  out.interior_residual = residual(g, out.harmonic, p, out.interior);

  const auto dist = distances_from(g, ex.basepoint);
  double reach = 0.0;
  for (Vertex x : out.interior) reach = std::max(reach, dist[x]);
  std::vector<Vertex> sphere;
  for (Vertex x : out.interior)
    if (dist[x] >= reach - 1e-12 * std::max(1.0, reach)) sphere.push_back(x);
  out.outer_sphere = VertexSet(std::move(sphere));
  for (Vertex x : out.outer_sphere)
    out.outer_max = std::max(out.outer_max, std::abs(out.potential[x]));

  if (profile) {
    for (std::size_t e = 0; e < profile->ends.size(); ++e) {
      EndMaximum m{profile->ends[e].name, 0.0};
      for (Vertex x : out.outer_sphere)
        if (profile->assignment[x] == static_cast<std::ptrdiff_t>(e))
          m.value = std::max(m.value, std::abs(out.potential[x]));
      out.outer_max_by_end.push_back(m);
    }
  }

  out.potential_norm = std::pow(lp_mass(g, out.potential, p), 1.0 / p);
  out.exhaustion = std::move(result);
  return out;
}

}  // namespace proyden
