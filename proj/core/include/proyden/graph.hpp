#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "proyden/error.hpp"

namespace proyden {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;

/// Real value per vertex, aligned to dense vertex indices.
using GraphFunction = std::vector<double>;
/// Nonnegative value per edge, aligned to edge indices.
using EdgeField = std::vector<double>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double conductance = 1.0;
  double length = 1.0;
};

/// Input description of a graph; ids are arbitrary integers.
struct GraphSpec {
  struct VertexEntry {
    std::int64_t id = 0;
    double measure = 1.0;
  };
  struct EdgeEntry {
    std::int64_t u = 0;
    std::int64_t v = 0;
    double conductance = 1.0;
    double length = 1.0;
  };
  std::vector<VertexEntry> vertices;
  std::vector<EdgeEntry> edges;
};

struct Neighbor {
  Vertex vertex;
  EdgeIndex edge;
};

/// Connected, locally finite weighted graph with at least two vertices.
///
/// Vertex measures, edge conductances and edge lengths are strictly positive
/// and finite. Instances are immutable; every query is safe to run from
/// several threads at once.
class WeightedGraph {
 public:
  /// Validates and builds. Throws GraphError on any violated invariant.
  WeightedGraph(std::vector<double> measures, std::vector<Edge> edges,
                std::vector<std::int64_t> ids = {});

  std::size_t num_vertices() const { return measures_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  double measure(Vertex x) const { return measures_[x]; }
  std::span<const double> measures() const { return measures_; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Neighbors of x, sorted by neighbor index.
  std::span<const Neighbor> neighbors(Vertex x) const {
    return {adjacency_.data() + offsets_[x], adjacency_.data() + offsets_[x + 1]};
  }
  std::size_t degree(Vertex x) const { return offsets_[x + 1] - offsets_[x]; }

  /// External id of dense index x.
  std::int64_t id(Vertex x) const { return ids_[x]; }
  std::span<const std::int64_t> ids() const { return ids_; }
  /// Dense index of an external id; throws InvalidArgument if unknown.
  Vertex index_of(std::int64_t id) const;

  double total_measure() const;

 private:
  std::vector<double> measures_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> ids_;
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

/// Normalizes ids to dense indices (ascending id order) and validates.
WeightedGraph build_graph(const GraphSpec& spec);

/// Inverse of build_graph: the description with original ids.
GraphSpec to_spec(const WeightedGraph& g);

/// Subset of a graph's vertices, kept sorted and duplicate free.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> vertices);

  static VertexSet from_mask(const std::vector<bool>& mask);
  static VertexSet all(std::size_t n);

  bool contains(Vertex x) const;
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  std::span<const Vertex> vertices() const { return vertices_; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  std::vector<bool> mask(std::size_t n) const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  VertexSet complement(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> vertices_;
};

}  // namespace proyden
