#include "proyden/family.hpp"

#include <string>

namespace proyden {

Truncation truncate(const FamilySpec& family, std::size_t size) {
  if (size == 0) throw InvalidArgument("truncation size must be positive");
  switch (family.kind) {
    case InfiniteFamily::halfline: {
      auto g = make_path(size, family.weights);
      return {std::move(g), 0, VertexSet({size}), 1.0, {{"far", {0}}}, size};
    }
    case InfiniteFamily::line: {
      auto g = make_path(2 * size, family.weights);
      return {std::move(g), size, VertexSet({0, 2 * size}), 1.0,
              {{"left", {0}}, {"right", {1}}}, size};
    }
    case InfiniteFamily::tree: {
      auto g = make_tree(family.b, size, family.weights);
      const std::size_t n = g.num_vertices();
      const std::size_t first_leaf = (n - 1) / family.b + ((n - 1) % family.b ? 1 : 0);
      std::vector<Vertex> leaves;
      for (Vertex x = first_leaf; x < n; ++x) leaves.push_back(x);
      EndGrouping groups;
      for (std::size_t c = 0; c < family.b; ++c) {
        std::string name = family.b == 2 ? (c == 0 ? "left" : "right") : "c" + std::to_string(c);
        groups.push_back({name, {c}});
      }
      return {std::move(g), 0, VertexSet(std::move(leaves)), 1.0, std::move(groups), size};
    }
    case InfiniteFamily::grid: {
      const std::size_t side = 2 * size + 1;
      auto g = make_grid(side, side, family.weights);
      std::vector<Vertex> boundary;
      for (std::size_t y = 0; y < side; ++y)
        for (std::size_t x = 0; x < side; ++x)
          if (x == 0 || y == 0 || x + 1 == side || y + 1 == side) boundary.push_back(y * side + x);
      return {std::move(g), size * side + size, VertexSet(std::move(boundary)), 1.0,
              {{"all", {0}}}, size};
    }
  }
  throw InvalidArgument("unknown infinite family");
}

InfiniteFamily parse_infinite_family(const std::string& name) {
  if (name == "halfline") return InfiniteFamily::halfline;
  if (name == "line" || name == "z" || name == "Z" || name == "path") return InfiniteFamily::line;
  if (name == "tree") return InfiniteFamily::tree;
  if (name == "grid") return InfiniteFamily::grid;
  throw InvalidArgument("unknown family '" + name + "' (expected halfline, z, tree, grid)");
}

std::string to_string(InfiniteFamily kind) {
  switch (kind) {
    case InfiniteFamily::halfline: return "halfline";
    case InfiniteFamily::line: return "z";
    case InfiniteFamily::tree: return "tree";
    case InfiniteFamily::grid: return "grid";
  }
  return "unknown";
}

}  // namespace proyden
