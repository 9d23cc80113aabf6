#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "proyden/generate.hpp"
#include "proyden/graph.hpp"

namespace proyden {

/// Infinite spaces studied through finite truncations of growing size.
enum class InfiniteFamily {
  halfline,  // N, basepoint 0; truncation k is path(k)
  line,      // Z, basepoint at the center; truncation k is path(2k)
  tree,      // rooted b-ary tree; truncation k is tree(b, k)
  grid,      // Z^2, basepoint at the center; truncation k is grid(2k+1, 2k+1)
};

struct FamilySpec {
  InfiniteFamily kind = InfiniteFamily::halfline;
  std::size_t b = 2;
  WeightOverrides weights{};
};

using EndGrouping = std::vector<std::pair<std::string, std::vector<std::size_t>>>;

/// One finite truncation. `frontier` is the outer boundary standing in for
/// infinity; `end_groups` names the far components at `group_radius`.
struct Truncation {
  WeightedGraph graph;
  Vertex basepoint;
  VertexSet frontier;
  double group_radius;
  EndGrouping end_groups;
  std::size_t size;
};

Truncation truncate(const FamilySpec& family, std::size_t size);

InfiniteFamily parse_infinite_family(const std::string& name);
std::string to_string(InfiniteFamily kind);

}  // namespace proyden
