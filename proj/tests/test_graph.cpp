#include <algorithm>

#include "doctest.h"
#include "proyden/family.hpp"
#include "proyden/generate.hpp"
#include "proyden/graph.hpp"
#include "proyden/topology.hpp"

using namespace proyden;

namespace {

GraphSpec spec_of(std::vector<std::int64_t> ids,
                  std::vector<GraphSpec::EdgeEntry> edges) {
  GraphSpec s;
  for (auto id : ids) s.vertices.push_back({id, 1.0});
  s.edges = std::move(edges);
  return s;
}

}  // namespace

TEST_CASE("build_graph accepts the minimal graph") {
  auto g = build_graph(spec_of({0, 1}, {{0, 1, 1.0, 1.0}}));
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
}

TEST_CASE("build_graph rejects invalid descriptions") {
  CHECK_THROWS_AS(build_graph(spec_of({0, 1, 2, 3}, {{0, 1, 1, 1}, {2, 3, 1, 1}})), GraphError);
  CHECK_THROWS_WITH_AS(build_graph(spec_of({0, 1, 2, 3}, {{0, 1, 1, 1}, {2, 3, 1, 1}})),
                       doctest::Contains("disconnected"), GraphError);
  CHECK_THROWS_AS(build_graph(spec_of({0}, {})), GraphError);
  CHECK_THROWS_AS(build_graph(spec_of({0, 1}, {{0, 1, 0.0, 1.0}})), GraphError);
  CHECK_THROWS_AS(build_graph(spec_of({0, 1}, {{0, 1, 1.0, -1.0}})), GraphError);
  CHECK_THROWS_AS(build_graph(spec_of({0, 1}, {{0, 1, 1, 1}, {1, 0, 1, 1}})), GraphError);

  auto bad = spec_of({0, 1}, {{0, 1, 1, 1}});
  bad.vertices[0].measure = 0.0;
  CHECK_THROWS_AS(build_graph(bad), GraphError);
}

TEST_CASE("ids are normalized in ascending order and survive a round trip") {
  auto g = build_graph(spec_of({40, 7, 12}, {{40, 7, 2.0, 1.0}, {7, 12, 1.0, 3.0}}));
  CHECK(g.id(0) == 7);
  CHECK(g.id(2) == 40);
  CHECK(g.index_of(12) == 1);
  CHECK_THROWS_AS(g.index_of(5), InvalidArgument);

  const auto back = to_spec(g);
  REQUIRE(back.edges.size() == 2);
  auto again = build_graph(back);
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    CHECK(again.edge(e).u == g.edge(e).u);
    CHECK(again.edge(e).conductance == g.edge(e).conductance);
    CHECK(again.edge(e).length == g.edge(e).length);
  }
}

TEST_CASE("distances use edge lengths, not conductances") {
  auto g = build_graph(spec_of({0, 1, 2, 3}, {{0, 1, 1, 1}, {1, 2, 2, 1}, {2, 3, 3, 1}}));
  CHECK(distances_from(g, 0)[3] == doctest::Approx(3.0));

  WeightOverrides w;
  w.length = 2.5;
  auto p = make_path(4, w);
  CHECK(distances_from(p, 0)[4] == doctest::Approx(10.0));
}

TEST_CASE("generated families have the expected sizes") {
  auto path = generate({GraphFamily::path, 2});
  CHECK(path.num_vertices() == 3);
  CHECK(path.num_edges() == 2);

  auto tree = generate({GraphFamily::tree, 2, 2});
  CHECK(tree.num_vertices() == 7);
  CHECK(tree.num_edges() == 6);

  auto grid = generate({GraphFamily::grid, 3, 2, 3});
  CHECK(grid.num_vertices() == 9);
  CHECK(grid.num_edges() == 12);

  auto cycle = make_cycle(5);
  CHECK(cycle.num_edges() == 5);

  CHECK_THROWS(make_tree(2, 40, {}, 1000));
  CHECK(tree_size(3, 2, 100) == 13);
  CHECK(tree_size(2, 40, 1000) == 0);
}

TEST_CASE("path endpoints are n apart") {
  for (std::size_t n : {1, 5, 17}) CHECK(distances_from(make_path(n), 0)[n] == doctest::Approx(n));
}

TEST_CASE("metric balls") {
  auto path = make_path(3);
  CHECK(metric_ball(path, 1, 1.0) == VertexSet({0, 1, 2}));
  CHECK(metric_ball(path, 2, 0.0) == VertexSet({2}));

  auto tree = make_tree(2, 3);
  CHECK(metric_ball(tree, 0, 2.0).size() == 7);

  auto grid = make_grid(5, 5);
  for (double r : {0.0, 1.0, 2.0, 3.0}) CHECK(metric_ball(grid, 12, r).is_subset_of(metric_ball(grid, 12, r + 1.0)));
}

TEST_CASE("exhaustions") {
  auto path = make_path(6);
  auto ex = exhaustion(path, 3, {1, 2, 3});
  REQUIRE(ex.size() == 3);
  CHECK(ex.levels[0].size() == 3);
  CHECK(ex.levels[1].size() == 5);
  CHECK(ex.levels[2].size() == 7);
  CHECK(ex.warnings.empty());

  CHECK_THROWS_WITH_AS(exhaustion(path, 3, {1, 1}), doctest::Contains("strictly increasing"),
                       InvalidArgument);
  CHECK_THROWS_AS(exhaustion(path, 3, {}), InvalidArgument);

  auto tree = exhaustion(make_tree(2, 4), 0, {1, 2});
  CHECK(tree.levels[0].size() == 3);
  CHECK(tree.levels[1].size() == 7);
  CHECK_FALSE(tree.warnings.empty());
}

TEST_CASE("end counts on halfline, line and tree") {
  auto half = ends(make_path(100), 0, {5, 10});
  CHECK(half.stable);
  CHECK(half.ends.size() == 1);

  auto line = ends(make_path(100), 50, {5, 10});
  CHECK(line.stable);
  CHECK(line.ends.size() == 2);

  auto tree = ends(make_tree(2, 10), 0, {1, 2});
  CHECK_FALSE(tree.stable);
  CHECK(tree.counts == std::vector<std::size_t>{2, 4});

  CHECK_THROWS_AS(ends(make_path(10), 0, {5}), InvalidArgument);
}

TEST_CASE("ends partition the unbounded part of the far region") {
  auto g = make_grid(9, 9);
  const Vertex o = 40;
  auto prof = ends(g, o, {1, 2});
  const auto comps = far_components(g, o, 2.0);
  REQUIRE(prof.ends.size() == comps.size());
  std::size_t assigned = 0;
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (prof.assignment[x] < 0) continue;
    ++assigned;
    CHECK(prof.ends[static_cast<std::size_t>(prof.assignment[x])].region.contains(x));
  }
  std::size_t total = 0;
  for (const auto& c : comps) total += c.size();
  CHECK(assigned == total);
  for (std::size_t i = 0; i < prof.ends.size(); ++i)
    for (std::size_t j = i + 1; j < prof.ends.size(); ++j)
      CHECK_FALSE(prof.ends[i].region.intersects(prof.ends[j].region));
}

TEST_CASE("grouped tree ends and canonical rays") {
  auto t = truncate({InfiniteFamily::tree, 2, {}}, 5);
  auto prof = group_ends(t.graph, t.basepoint, t.group_radius, t.end_groups, t.frontier);
  CHECK(prof.stable);
  REQUIRE(prof.ends.size() == 2);
  CHECK(prof.find("left") == 0);
  CHECK_THROWS_AS(prof.find("middle"), InvalidArgument);

  const auto ray = canonical_ray(t.graph, t.basepoint, prof.ends[1].region);
  REQUIRE(ray.size() == 6);
  CHECK(ray.front() == 0);
  CHECK(ray[1] == 2);
  for (std::size_t i = 1; i < ray.size(); ++i) CHECK(ray[i] == 2 * ray[i - 1] + 1 + (i == 1));
}

TEST_CASE("vertex sets") {
  VertexSet s({3, 1, 3, 2});
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK(s.complement(5) == VertexSet({0, 4}));
  CHECK(VertexSet::from_mask({true, false, true}) == VertexSet({0, 2}));
  CHECK(VertexSet({1}).is_subset_of(s));
  CHECK_FALSE(VertexSet({0}).intersects(s));
}
