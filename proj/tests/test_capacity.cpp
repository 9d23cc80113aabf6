#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "proyden/calculus.hpp"
#include "proyden/capacity.hpp"
#include "proyden/generate.hpp"

using namespace proyden;

namespace {

VertexSet tree_level(std::size_t level) {
  std::vector<Vertex> out;
  for (Vertex x = (std::size_t{1} << level) - 1; x < (std::size_t{2} << level) - 1; ++x)
    out.push_back(x);
  return VertexSet(std::move(out));
}

}  // namespace

TEST_CASE("path capacities") {
  for (double p : {1.5, 2.0, 3.0})
    for (std::size_t n : {1, 2, 4, 8, 16}) {
      const auto r = capacity(make_path(n), VertexSet({0}), VertexSet({n}), p);
      CHECK(r.value == doctest::Approx(oracle::path_capacity(n, p)).epsilon(1e-8));
    }
  CHECK(capacity(make_path(4), VertexSet({0}), VertexSet({4}), 2.0).value ==
        doctest::Approx(0.25));
}

TEST_CASE("triangle capacity") {
  CHECK(capacity(oracle::triangle(), VertexSet({0}), VertexSet({1}), 2.0).value ==
        doctest::Approx(1.5));
}

TEST_CASE("tree capacities") {
  CHECK(capacity(make_tree(2, 2), VertexSet({0}), tree_level(2), 2.0).value ==
        doctest::Approx(4.0 / 3.0));
  for (double p : {1.5, 2.0, 3.0})
    for (std::size_t n : {2, 3, 4}) {
      const auto r = capacity(make_tree(2, n), VertexSet({0}), tree_level(n), p);
      CHECK(r.value == doctest::Approx(oracle::tree_capacity(2, n, p)).epsilon(1e-7));
    }
}

TEST_CASE("potential invariants") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 15; ++i) {
    const double p = 1.5 + 0.25 * (i % 7);
    auto g = oracle::random_graph(rng, 12, 0.25);
    const VertexSet a({0, 1}), b({10, 11});
    const auto r = capacity(g, a, b, p);
    for (Vertex x : a) CHECK(r.potential[x] == 1.0);
    for (Vertex x : b) CHECK(r.potential[x] == 0.0);
    for (double v : r.potential) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    CHECK(r.value == doctest::Approx(p_energy(g, r.potential, p)).epsilon(1e-10));
    CHECK(r.report.residual <= r.report.options.tol_residual);

    // Bigger source, no smaller capacity.
    const auto bigger = capacity(g, VertexSet({0, 1, 2}), b, p);
    CHECK(bigger.value >= r.value * (1.0 - 1e-10));
  }
}

TEST_CASE("capacity to a farther sink never grows") {
  auto g = make_grid(9, 9);
  double last = 1e300;
  for (std::size_t r : {1, 2, 3, 4}) {
    std::vector<Vertex> ring;
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
      const long dx = long(x % 9) - 4, dy = long(x / 9) - 4;
      if (std::max(std::abs(dx), std::abs(dy)) == long(r)) ring.push_back(x);
    }
    const double c = capacity(g, VertexSet({40}), VertexSet(ring), 2.0).value;
    CHECK(c <= last);
    last = c;
  }
}

TEST_CASE("capacity preconditions") {
  auto g = make_path(3);
  CHECK_THROWS_AS(capacity(g, VertexSet({0, 1}), VertexSet({1, 3}), 2.0), InvalidArgument);
  CHECK_THROWS_AS(capacity(g, VertexSet(), VertexSet({3}), 2.0), InvalidArgument);
  CHECK_THROWS_AS(capacity(g, VertexSet({0}), VertexSet({3}), 1.0), InvalidArgument);
}
