#include <array>
#include <cmath>
#include <string>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "proyden/capacity.hpp"
#include "proyden/generate.hpp"
#include "proyden/modulus.hpp"

using namespace proyden;

TEST_CASE("single edge") {
  auto g = make_path(1);
  for (auto route : {ModulusRoute::dual, ModulusRoute::direct}) {
    const auto r = modulus(g, VertexSet({0}), VertexSet({1}), 2.5, route);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
    REQUIRE(r.density.size() == 1);
    CHECK(r.density[0] == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("path modulus equals n^(1-p) on both routes") {
  for (double p : {1.5, 2.0, 3.0})
    for (std::size_t n : {2, 5}) {
      const double expect = oracle::path_capacity(n, p);
      auto g = make_path(n);
      CHECK(modulus_dual(g, VertexSet({0}), VertexSet({n}), p).value ==
            doctest::Approx(expect).epsilon(1e-8));
      CHECK(modulus_direct(g, VertexSet({0}), VertexSet({n}), p).value ==
            doctest::Approx(expect).epsilon(1e-6));
    }
}

TEST_CASE("triangle: both routes give 1.5 at p = 2") {
  auto g = oracle::triangle();
  const auto direct = modulus_direct(g, VertexSet({0}), VertexSet({1}), 2.0);
  const auto dual = modulus_dual(g, VertexSet({0}), VertexSet({1}), 2.0);
  CHECK(direct.value == doctest::Approx(1.5).epsilon(1e-4));
  CHECK(dual.value == doctest::Approx(1.5).epsilon(1e-8));
  CHECK(direct.paths.size() == 2);
  CHECK(direct.converged);
  CHECK(direct.lower_bound <= direct.upper_bound);
}

TEST_CASE("direct route density is admissible and brackets the value") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = 4 + i % 4;
    auto g = oracle::random_graph(rng, n, 0.4);
    const double p = std::array{1.5, 2.0, 3.0}[i % 3];
    const VertexSet a({0}), b({n - 1});
    const auto r = modulus_direct(g, a, b, p);
    CHECK(r.converged);
    CHECK(r.lower_bound <= r.value);
    CHECK(r.value <= r.upper_bound);
    CHECK((r.upper_bound - r.lower_bound) <= 1e-8 * r.upper_bound);
    for (std::size_t k = 0; k < r.paths.size(); ++k) {
      double len = 0.0;
      for (EdgeIndex e : r.paths[k]) len += g.edge(e).length * r.density[e];
      CHECK(len >= 1.0 - 1e-9);
      CHECK(r.slack[k] == doctest::Approx(len - 1.0));
    }
    const double cap = capacity(g, a, b, p).value;
    CHECK(r.value == doctest::Approx(cap).epsilon(1e-4));
  }
}

TEST_CASE("duality holds with non-unit lengths") {
  std::mt19937_64 rng(42);
  auto g = oracle::random_graph(rng, 6, 0.5);
  for (double p : {1.5, 3.0}) {
    const double cap = capacity(g, VertexSet({0}), VertexSet({5}), p).value;
    CHECK(modulus_direct(g, VertexSet({0}), VertexSet({5}), p).value ==
          doctest::Approx(cap).epsilon(1e-4));
    CHECK(modulus_dual(g, VertexSet({0}), VertexSet({5}), p).value ==
          doctest::Approx(cap).epsilon(1e-10));
  }
}

TEST_CASE("path enumeration") {
  auto c4 = oracle::four_cycle_with_chord();
  const auto paths = connecting_paths(c4, VertexSet({1}), VertexSet({3}), 100);
  CHECK(paths.size() == 4);
  CHECK(connecting_paths(c4, VertexSet({1}), VertexSet({3}), 100) == paths);

  auto grid = make_grid(5, 5);
  CHECK_THROWS_AS(connecting_paths(grid, VertexSet({0}), VertexSet({24}), 50), PathCapExceeded);
  ModulusOptions tight;
  tight.path_cap = 50;
  try {
    modulus_direct(grid, VertexSet({0}), VertexSet({24}), 2.0, tight);
    FAIL("expected PathCapExceeded");
  } catch (const PathCapExceeded& e) {
    CHECK(e.cap() == 50);
    CHECK(std::string(e.what()).find("50") != std::string::npos);
  }
  // The dual route never enumerates.
  CHECK(modulus(grid, VertexSet({0}), VertexSet({24}), 2.0, ModulusRoute::dual, tight).value > 0);
}
