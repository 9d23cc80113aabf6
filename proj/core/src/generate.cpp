#include "proyden/generate.hpp"

#include <string>
#include <utility>
#include <vector>

namespace proyden {

namespace {

WeightedGraph assemble(std::size_t n, std::vector<std::pair<Vertex, Vertex>> pairs,
                       const WeightOverrides& w) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v, w.conductance, w.length});
  return WeightedGraph(std::vector<double>(n, w.measure), std::move(edges));
}

void guard(std::size_t count, std::size_t limit) {
  if (count == 0 || count > limit) {
    throw InvalidArgument("requested graph exceeds the size guard of " + std::to_string(limit) +
                          " vertices");
  }
}

}  // namespace

std::size_t tree_size(std::size_t b, std::size_t depth, std::size_t limit) {
  std::size_t total = 1;
  std::size_t level = 1;
  for (std::size_t d = 0; d < depth; ++d) {
    if (level > limit / b) return 0;
    level *= b;
    if (total > limit - level) return 0;
    total += level;
  }
  return total;
}

WeightedGraph make_path(std::size_t n, const WeightOverrides& weights) {
  if (n == 0) throw InvalidArgument("path(n) needs n >= 1");
  guard(n + 1, kDefaultSizeGuard);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(n);
  for (Vertex k = 0; k < n; ++k) pairs.emplace_back(k, k + 1);
  return assemble(n + 1, std::move(pairs), weights);
}

WeightedGraph make_cycle(std::size_t n, const WeightOverrides& weights) {
  if (n < 3) throw InvalidArgument("cycle(n) needs n >= 3");
  guard(n, kDefaultSizeGuard);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex k = 0; k < n; ++k) pairs.emplace_back(k, (k + 1) % n);
  return assemble(n, std::move(pairs), weights);
}

WeightedGraph make_tree(std::size_t b, std::size_t depth, const WeightOverrides& weights,
                        std::size_t size_guard) {
  if (b < 2) throw InvalidArgument("tree(b, depth) needs b >= 2");
  if (depth == 0) throw InvalidArgument("tree(b, depth) needs depth >= 1");
  const std::size_t n = tree_size(b, depth, size_guard);
  guard(n, size_guard);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(n - 1);
  for (Vertex child = 1; child < n; ++child) pairs.emplace_back((child - 1) / b, child);
  return assemble(n, std::move(pairs), weights);
}

WeightedGraph make_grid(std::size_t w, std::size_t h, const WeightOverrides& weights,
                        std::size_t size_guard) {
  if (w == 0 || h == 0) throw InvalidArgument("grid(w, h) needs positive sides");
  if (w > size_guard / h) guard(0, size_guard);
  guard(w * h, size_guard);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const Vertex v = y * w + x;
      if (x + 1 < w) pairs.emplace_back(v, v + 1);
      if (y + 1 < h) pairs.emplace_back(v, v + w);
    }
  }
  return assemble(w * h, std::move(pairs), weights);
}

WeightedGraph generate(const FamilyParams& params, const WeightOverrides& weights,
                       std::size_t size_guard) {
  switch (params.family) {
    case GraphFamily::path:
    case GraphFamily::halfline:
      if (params.n + 1 > size_guard) guard(0, size_guard);
      return make_path(params.n, weights);
    case GraphFamily::cycle:
      if (params.n > size_guard) guard(0, size_guard);
      return make_cycle(params.n, weights);
    case GraphFamily::tree:
      return make_tree(params.b, params.n, weights, size_guard);
    case GraphFamily::grid:
      return make_grid(params.n, params.height, weights, size_guard);
  }
  throw InvalidArgument("unknown graph family");
}

GraphFamily parse_family(const std::string& name) {
  if (name == "path") return GraphFamily::path;
  if (name == "halfline") return GraphFamily::halfline;
  if (name == "cycle") return GraphFamily::cycle;
  if (name == "tree") return GraphFamily::tree;
  if (name == "grid") return GraphFamily::grid;
  throw InvalidArgument("unknown family '" + name + "' (expected path, halfline, cycle, tree, grid)");
}

std::string to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::path: return "path";
    case GraphFamily::halfline: return "halfline";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::tree: return "tree";
    case GraphFamily::grid: return "grid";
  }
  return "unknown";
}

}  // namespace proyden
