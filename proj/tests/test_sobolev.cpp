#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "proyden/calculus.hpp"
#include "proyden/generate.hpp"
#include "proyden/sobolev.hpp"

using namespace proyden;

namespace {

VertexSet interior_of_path(std::size_t n) {
  std::vector<Vertex> in;
  for (Vertex x = 1; x < n; ++x) in.push_back(x);
  return VertexSet(std::move(in));
}

}  // namespace

TEST_CASE("one free vertex gives exactly 2") {
  for (double p : {1.5, 2.0, 3.0, 4.0}) {
    const auto r = sobolev_constant(make_path(2), VertexSet({1}), p);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.constant == doctest::Approx(std::pow(2.0, -1.0 / p)).epsilon(1e-12));
  }
}

TEST_CASE("p = 2 matches the generalized eigenvalue") {
  for (std::size_t n : {2, 3, 5, 8}) {
    auto g = make_path(n);
    const auto in = interior_of_path(n);
    const auto r = sobolev_constant(g, in, 2.0);
    CHECK(r.value == doctest::Approx(oracle::dirichlet_eigenvalue(g, in.mask(n + 1))).epsilon(1e-6));
    CHECK(r.value == doctest::Approx(2.0 - 2.0 * std::cos(M_PI / double(n))).epsilon(1e-6));
  }
  std::mt19937_64 rng(51);
  auto g = oracle::random_graph(rng, 9, 0.3);
  const VertexSet in({1, 2, 3, 4, 5});
  CHECK(sobolev_constant(g, in, 2.0).value ==
        doctest::Approx(oracle::dirichlet_eigenvalue(g, in.mask(9))).epsilon(1e-6));
}

TEST_CASE("minimizer is normalized, supported inside, and attains the value") {
  std::mt19937_64 rng(52);
  auto g = oracle::random_graph(rng, 10, 0.3);
  const VertexSet in({0, 2, 4, 6});
  for (double p : {1.5, 3.0}) {
    const auto r = sobolev_constant(g, in, p);
    CHECK(lp_mass(g, r.minimizer, p) == doctest::Approx(1.0).epsilon(1e-10));
    for (Vertex x = 0; x < 10; ++x)
      if (!in.contains(x)) CHECK(r.minimizer[x] == 0.0);
    CHECK(p_energy(g, r.minimizer, p) == doctest::Approx(r.value).epsilon(1e-10));
    CHECK(r.residual < 1e-6);
    CHECK(r.per_start.size() == 4);
    for (double v : r.per_start) CHECK(r.value <= v);
  }
}

TEST_CASE("value never increases as the interior grows") {
  for (double p : {1.5, 2.0, 3.0}) {
    double last = 1e300;
    for (std::size_t n : {4, 8, 16, 32}) {
      const double v = sobolev_constant(make_path(n), interior_of_path(n), p).value;
      CHECK(v < last);
      last = v;
    }
  }
  std::mt19937_64 rng(53);
  auto g = oracle::random_graph(rng, 12, 0.3);
  std::vector<Vertex> in;
  double last = 1e300;
  for (Vertex x = 0; x < 11; ++x) {
    in.push_back(x);
    const double v = sobolev_constant(g, VertexSet(in), 2.5).value;
    CHECK(v <= last * (1.0 + 1e-9));
    last = v;
  }
}

TEST_CASE("halfline truncations with the far end pinned") {
  double last = 1e300;
  for (std::size_t n : {4, 8, 16, 32}) {
    std::vector<Vertex> in;
    for (Vertex x = 0; x < n; ++x) in.push_back(x);
    const double v = sobolev_constant(make_path(n), VertexSet(in), 2.0).value;
    CHECK(v < last);
    CHECK(v > 0.0);
    last = v;
  }
  CHECK(last < 0.01);
}

TEST_CASE("deterministic for a fixed seed") {
  std::mt19937_64 rng(54);
  auto g = oracle::random_graph(rng, 10, 0.3);
  const VertexSet in({1, 3, 5, 7});
  const auto a = sobolev_constant(g, in, 1.5);
  const auto b = sobolev_constant(g, in, 1.5);
  CHECK(a.value == b.value);
  CHECK(a.minimizer == b.minimizer);
}

TEST_CASE("sobolev preconditions") {
  auto g = make_path(3);
  CHECK_THROWS_AS(sobolev_constant(g, VertexSet(), 2.0), InvalidArgument);
  CHECK_THROWS_AS(sobolev_constant(g, VertexSet::all(4), 2.0), InvalidArgument);
}
