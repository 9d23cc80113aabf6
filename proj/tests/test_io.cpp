#include "doctest.h"
#include "io.hpp"
#include "proyden/capacity.hpp"
#include "proyden/generate.hpp"

using namespace proyden;

TEST_CASE("graph JSON round trip") {
  const auto text = R"({
    "vertices": [{"id": 5, "measure": 2.0}, {"id": 9}, {"id": 1}],
    "edges": [{"u": 5, "v": 9, "conductance": 0.5, "length": 3.0}, {"u": 9, "v": 1}]
  })";
  const auto g = build_graph(io::graph_spec_from_json(io::parse_json(text)));
  CHECK(g.num_vertices() == 3);
  CHECK(g.measure(g.index_of(5)) == 2.0);

  const auto j = io::graph_to_json(g);
  const auto again = build_graph(io::graph_spec_from_json(j));
  CHECK(io::dump(io::graph_to_json(again)) == io::dump(j));
  CHECK(again.edge(0).length == 3.0);
}

TEST_CASE("syntax errors report line and column") {
  CHECK_THROWS_WITH_AS(io::parse_json("{\n  \"a\": [1, 2,\n}"), doctest::Contains("line 3"),
                       io::ParseError);
}

TEST_CASE("field errors report a path") {
  CHECK_THROWS_WITH_AS(io::graph_spec_from_json(io::parse_json(R"({"vertices": [{"id": 0}]})")),
                       doctest::Contains("$.edges"), io::ParseError);
  CHECK_THROWS_WITH_AS(
      io::graph_spec_from_json(io::parse_json(
          R"({"vertices": [{"id": 0}, {"id": 1}], "edges": [{"u": 0, "v": 1, "conductance": "x"}]})")),
      doctest::Contains("$.edges[0].conductance"), io::ParseError);
}

TEST_CASE("functions and option lists") {
  CHECK(io::function_from_json(io::parse_json("[1, 2, 3]"), 3) == GraphFunction{1, 2, 3});
  CHECK(io::function_from_json(io::parse_json(R"({"values": [0.5, 1]})"), 2) ==
        GraphFunction{0.5, 1});
  CHECK_THROWS_AS(io::function_from_json(io::parse_json("[1, 2]"), 3), io::ParseError);

  const auto pins = io::parse_pins("0=0, 5=1.5");
  REQUIRE(pins.size() == 2);
  CHECK(pins[1].first == 5);
  CHECK(pins[1].second == 1.5);
  CHECK_THROWS_AS(io::parse_pins("0:1"), io::ParseError);

  const auto named = io::parse_named_values("left=0,right=1");
  CHECK(named[0].first == "left");
  CHECK(io::parse_id_list("3,1,2") == std::vector<std::int64_t>{3, 1, 2});
  CHECK(io::parse_real_list("0.5,2") == std::vector<double>{0.5, 2});
}

TEST_CASE("result serialization is deterministic") {
  auto g = make_path(4);
  const auto a = io::dump(io::to_json(capacity(g, VertexSet({0}), VertexSet({4}), 1.5)));
  const auto b = io::dump(io::to_json(capacity(g, VertexSet({0}), VertexSet({4}), 1.5)));
  CHECK(a == b);
  CHECK(a.back() == '\n');
}
