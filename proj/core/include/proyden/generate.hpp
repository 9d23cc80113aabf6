#pragma once

#include <cstddef>
#include <string>

#include "proyden/graph.hpp"

namespace proyden {

enum class GraphFamily { path, halfline, cycle, tree, grid };

/// Canonical graph family with its size parameters.
///
/// path(n) and halfline(n) both have n edges; they differ only in the
/// basepoint used by asymptotic operations (center vs. endpoint 0).
/// tree(b, depth) is rooted at vertex 0 with children of i at b*i+1..b*i+b.
/// grid(w, h) numbers vertex (x, y) as y*w + x.
struct FamilyParams {
  GraphFamily family = GraphFamily::path;
  std::size_t n = 1;       // path, halfline, cycle; grid width; tree depth
  std::size_t b = 2;       // tree branching
  std::size_t height = 1;  // grid height
};

struct WeightOverrides {
  double measure = 1.0;
  double conductance = 1.0;
  double length = 1.0;
};

/// Refuses to build anything larger than this many vertices.
inline constexpr std::size_t kDefaultSizeGuard = std::size_t{1} << 24;

WeightedGraph generate(const FamilyParams& params, const WeightOverrides& weights = {},
                       std::size_t size_guard = kDefaultSizeGuard);

WeightedGraph make_path(std::size_t n, const WeightOverrides& weights = {});
WeightedGraph make_cycle(std::size_t n, const WeightOverrides& weights = {});
WeightedGraph make_tree(std::size_t b, std::size_t depth, const WeightOverrides& weights = {},
                        std::size_t size_guard = kDefaultSizeGuard);
WeightedGraph make_grid(std::size_t w, std::size_t h, const WeightOverrides& weights = {},
                        std::size_t size_guard = kDefaultSizeGuard);

/// Number of vertices of tree(b, depth), or 0 if it exceeds `limit`.
std::size_t tree_size(std::size_t b, std::size_t depth, std::size_t limit);

GraphFamily parse_family(const std::string& name);
std::string to_string(GraphFamily family);

}  // namespace proyden
