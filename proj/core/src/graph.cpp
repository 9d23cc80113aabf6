#include "proyden/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

namespace proyden {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

WeightedGraph::WeightedGraph(std::vector<double> measures, std::vector<Edge> edges,
                             std::vector<std::int64_t> ids)
    : measures_(std::move(measures)), edges_(std::move(edges)), ids_(std::move(ids)) {
  const std::size_t n = measures_.size();
  if (n < 2) {
    throw GraphError("graph needs at least two vertices, got " + std::to_string(n));
  }
  if (ids_.empty()) {
    ids_.resize(n);
    std::iota(ids_.begin(), ids_.end(), std::int64_t{0});
  } else if (ids_.size() != n) {
    throw GraphError("id list size does not match vertex count");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!positive_finite(measures_[x])) {
      throw GraphError("vertex " + std::to_string(ids_[x]) +
                       ": measure must be positive and finite");
    }
  }

  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u >= n || ed.v >= n) {
      throw GraphError("edge " + std::to_string(e) + ": endpoint out of range");
    }
    if (ed.u == ed.v) {
      throw GraphError("edge " + std::to_string(e) + ": self-loop at vertex " +
                       std::to_string(ids_[ed.u]));
    }
    if (!positive_finite(ed.conductance)) {
      throw GraphError("edge " + std::to_string(e) + ": conductance must be positive and finite");
    }
    if (!positive_finite(ed.length)) {
      throw GraphError("edge " + std::to_string(e) + ": length must be positive and finite");
    }
    auto key = std::minmax(ed.u, ed.v);
    if (!seen.insert({key.first, key.second}).second) {
      throw GraphError("duplicate edge between vertices " + std::to_string(ids_[ed.u]) + " and " +
                       std::to_string(ids_[ed.v]));
    }
    ++degree[ed.u];
    ++degree[ed.v];
  }

  offsets_.assign(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) offsets_[x + 1] = offsets_[x] + degree[x];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    adjacency_[fill[edges_[e].u]++] = {edges_[e].v, e};
    adjacency_[fill[edges_[e].v]++] = {edges_[e].u, e};
  }
  for (std::size_t x = 0; x < n; ++x) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[x]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[x + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }

  std::vector<bool> reached(n, false);
  std::queue<Vertex> queue;
  queue.push(0);
  reached[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    for (const Neighbor& nb : neighbors(x)) {
      if (!reached[nb.vertex]) {
        reached[nb.vertex] = true;
        ++count;
        queue.push(nb.vertex);
      }
    }
  }
  if (count != n) {
    throw GraphError("graph is disconnected: " + std::to_string(count) + " of " +
                     std::to_string(n) + " vertices reachable from vertex " +
                     std::to_string(ids_[0]));
  }
}

Vertex WeightedGraph::index_of(std::int64_t id) const {
  // ids_ is ascending for graphs built through build_graph; fall back to a scan otherwise.
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it != ids_.end() && *it == id) return static_cast<Vertex>(it - ids_.begin());
  auto lin = std::find(ids_.begin(), ids_.end(), id);
  if (lin == ids_.end()) throw InvalidArgument("unknown vertex id " + std::to_string(id));
  return static_cast<Vertex>(lin - ids_.begin());
}

double WeightedGraph::total_measure() const {
  return std::accumulate(measures_.begin(), measures_.end(), 0.0);
}

WeightedGraph build_graph(const GraphSpec& spec) {
  const std::size_t n = spec.vertices.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return spec.vertices[a].id < spec.vertices[b].id;
  });

  std::vector<std::int64_t> ids(n);
  std::vector<double> measures(n);
  std::unordered_map<std::int64_t, Vertex> index;
  index.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& entry = spec.vertices[order[k]];
    if (!index.emplace(entry.id, k).second) {
      throw GraphError("duplicate vertex id " + std::to_string(entry.id));
    }
    ids[k] = entry.id;
    measures[k] = entry.measure;
  }

  std::vector<Edge> edges;
  edges.reserve(spec.edges.size());
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    const auto& entry = spec.edges[e];
    auto iu = index.find(entry.u);
    auto iv = index.find(entry.v);
    if (iu == index.end() || iv == index.end()) {
      throw GraphError("edge " + std::to_string(e) + " references unknown vertex id " +
                       std::to_string(iu == index.end() ? entry.u : entry.v));
    }
    edges.push_back({iu->second, iv->second, entry.conductance, entry.length});
  }
  return WeightedGraph(std::move(measures), std::move(edges), std::move(ids));
}

GraphSpec to_spec(const WeightedGraph& g) {
  GraphSpec spec;
  spec.vertices.reserve(g.num_vertices());
  for (Vertex x = 0; x < g.num_vertices(); ++x) spec.vertices.push_back({g.id(x), g.measure(x)});
  spec.edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    spec.edges.push_back({g.id(e.u), g.id(e.v), e.conductance, e.length});
  }
  return spec;
}

VertexSet::VertexSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

VertexSet VertexSet::from_mask(const std::vector<bool>& mask) {
  std::vector<Vertex> v;
  for (Vertex x = 0; x < mask.size(); ++x)
    if (mask[x]) v.push_back(x);
  VertexSet s;
  s.vertices_ = std::move(v);
  return s;
}

VertexSet VertexSet::all(std::size_t n) {
  VertexSet s;
  s.vertices_.resize(n);
  std::iota(s.vertices_.begin(), s.vertices_.end(), Vertex{0});
  return s;
}

bool VertexSet::contains(Vertex x) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), x);
}

std::vector<bool> VertexSet::mask(std::size_t n) const {
  std::vector<bool> m(n, false);
  for (Vertex x : vertices_) {
    if (x >= n) throw InvalidArgument("vertex set is not a subset of the graph");
    m[x] = true;
  }
  return m;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

VertexSet VertexSet::complement(std::size_t n) const {
  auto m = mask(n);
  m.flip();
  return from_mask(m);
}

}  // namespace proyden
