#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "proyden/graph.hpp"

namespace proyden {

/// Shortest-path distances from o, summing edge lengths.
std::vector<double> distances_from(const WeightedGraph& g, Vertex o);

/// Closed ball {x : d(o, x) <= r}.
VertexSet metric_ball(const WeightedGraph& g, Vertex o, double r);

/// Nested metric balls around a basepoint.
struct Exhaustion {
  Vertex basepoint = 0;
  std::vector<double> radii;
  std::vector<VertexSet> levels;
  std::vector<std::string> warnings;

  std::size_t size() const { return levels.size(); }
};

/// Throws InvalidArgument on an empty or non-increasing schedule. Adds a
/// warning when the final level does not cover the (finite) graph.
Exhaustion exhaustion(const WeightedGraph& g, Vertex o, std::vector<double> radii);

/// One end (or group of ends): the far vertices it owns at the probe radius.
struct End {
  std::string name;
  VertexSet region;
};

/// Unbounded components of the far region {x : d(o, x) >= R}, tracked over
/// increasing probe radii.
///
/// On a finite truncation "unbounded" means the component reaches the
/// frontier: the truncation's outer boundary, by default the vertices at
/// maximal distance from o. The profile is stable when the component count
/// agrees over the last two probe radii. `ends` always describes the last
/// radius; consumers that need boundary data must check `stable`.
struct EndProfile {
  Vertex basepoint = 0;
  std::vector<double> probe_radii;
  std::vector<std::size_t> counts;
  /// parents[i][j]: index at radius i of the component containing component j
  /// at radius i + 1.
  std::vector<std::vector<std::size_t>> parents;
  bool stable = false;
  bool grouped = false;
  std::vector<End> ends;
  /// End index per vertex, or -1 for vertices outside every end.
  std::vector<std::ptrdiff_t> assignment;

  double probe_radius() const { return probe_radii.back(); }
  std::size_t find(const std::string& name) const;
};

/// Components of {d(o, x) >= R} that meet the frontier, ordered by least vertex.
std::vector<VertexSet> far_components(const WeightedGraph& g, Vertex o, double radius,
                                      const std::optional<VertexSet>& frontier = std::nullopt);

/// Requires at least two probe radii, strictly increasing.
EndProfile ends(const WeightedGraph& g, Vertex o, std::vector<double> probe_radii,
                const std::optional<VertexSet>& frontier = std::nullopt);

/// Groups the far components at `radius` into named ends. Every component
/// index must appear in exactly one group. The result is stable by declaration.
EndProfile group_ends(const WeightedGraph& g, Vertex o, double radius,
                      const std::vector<std::pair<std::string, std::vector<std::size_t>>>& groups,
                      const std::optional<VertexSet>& frontier = std::nullopt);

/// Lexicographically least geodesic from o to the least-index vertex of
/// `region` at maximal distance from o.
std::vector<Vertex> canonical_ray(const WeightedGraph& g, Vertex o, const VertexSet& region);

/// Vertices at maximal distance from o.
VertexSet outer_sphere(const WeightedGraph& g, Vertex o);

}  // namespace proyden
