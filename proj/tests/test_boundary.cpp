#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "proyden/boundary.hpp"
#include "proyden/calculus.hpp"
#include "proyden/generate.hpp"

using namespace proyden;

namespace {

struct TreeSetup {
  Truncation t;
  EndProfile profile;
  Exhaustion ex;
};

TreeSetup tree_setup(std::size_t depth) {
  auto t = truncate({InfiniteFamily::tree, 2, {}}, depth);
  auto profile = group_ends(t.graph, t.basepoint, t.group_radius, t.end_groups, t.frontier);
  auto ex = exhaustion(t.graph, t.basepoint, default_radii(2, depth - 1));
  return {std::move(t), std::move(profile), std::move(ex)};
}

double oscillation(const GraphFunction& u) {
  const auto [lo, hi] = std::minmax_element(u.begin(), u.end());
  return *hi - *lo;
}

}  // namespace

TEST_CASE("default radii") {
  CHECK(default_radii(1, 5) == std::vector<double>{1, 2, 3, 4, 5});
  const auto r = default_radii(1, 999);
  CHECK(r.front() == 1);
  CHECK(r.back() == 999);
  CHECK(r.size() <= 13);
  for (std::size_t i = 1; i < r.size(); ++i) {
    CHECK(r[i] > r[i - 1]);
    CHECK(r[i] == std::round(r[i]));
  }
}

TEST_CASE("harmonic data is a fixed point of the exhaustion") {
  auto g = make_path(20);
  GraphFunction f(21);
  for (Vertex x = 0; x <= 20; ++x) f[x] = 0.1 * double(x) - 0.5;
  const auto ex = exhaustion(g, 10, {2, 4, 6, 8});
  for (double p : {1.5, 2.0, 3.0}) {
    const auto r = exhaustion_solve(g, f, ex, p);
    for (const auto& h : r.levels)
      for (Vertex x = 0; x <= 20; ++x) CHECK(h[x] == doctest::Approx(f[x]).epsilon(1e-9));
    for (const auto& row : r.deviations)
      for (double d : row) CHECK(d < 1e-9);
    CHECK(r.cauchy);
    CHECK(r.tail_cauchy);
  }
}

TEST_CASE("endpoint indicator on a path: each level is affine between its pins") {
  auto g = make_path(20);
  GraphFunction f(21, 0.0);
  f[20] = 1.0;
  const auto ex = exhaustion(g, 10, {3, 6, 9});
  const auto r = exhaustion_solve(g, f, ex, 2.0);
  for (Vertex x = 0; x <= 20; ++x) CHECK(r.levels[0][x] == doctest::Approx(f[x]));
  for (Vertex x = 0; x <= 20; ++x)
    CHECK(r.levels[2][x] == doctest::Approx(double(x) / 20.0).epsilon(1e-9));
}

TEST_CASE("exhaustion invariants on random data") {
  std::mt19937_64 rng(61);
  auto g = make_grid(9, 9);
  std::uniform_real_distribution<double> d(-1, 1);
  GraphFunction f(81);
  for (auto& v : f) v = d(rng);
  const auto ex = exhaustion(g, 40, {1, 2, 3});
  for (double p : {1.5, 3.0}) {
    const auto r = exhaustion_solve(g, f, ex, p);
    REQUIRE(r.levels.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
      for (Vertex x = 0; x < 81; ++x)
        if (!ex.levels[k].contains(x)) CHECK(r.levels[k][x] == f[x]);
      CHECK(r.energies[k] <= r.data_energy);
    }
    CHECK(r.energy_bounded);
    CHECK(r.range_bounded);
    CHECK(r.limit == r.levels.back());
    CHECK(r.tolerance == doctest::Approx(0.1 * oscillation(f)));
    CHECK(std::is_sorted(r.selected.begin(), r.selected.end()));
  }
}

TEST_CASE("oscillating data on Z truncations still yields a limit") {
  const std::size_t k = 40;
  auto t = truncate({InfiniteFamily::line, 2, {}}, k);
  GraphFunction f(2 * k + 1);
  for (Vertex x = 0; x < f.size(); ++x) {
    const long m = std::labs(long(x) - long(k));
    f[x] = (m % 2 == 0 ? 1.0 : 0.0);
  }
  const auto ex = exhaustion(t.graph, t.basepoint, {1, 2, 3, 4, 5, 6, 7, 8});
  const auto r = exhaustion_solve(t.graph, f, ex, 2.0);
  CHECK_FALSE(r.selected.empty());
  CHECK(r.selected.back() == ex.size() - 1);
  CHECK(r.limit == r.levels.back());
  if (r.cauchy) CHECK(r.selected.size() >= 2);
}

TEST_CASE("a level that covers the graph is refused with its index") {
  auto g = make_path(6);
  const auto ex = exhaustion(g, 3, {1, 2, 3});
  CHECK_THROWS_WITH_AS(exhaustion_solve(g, GraphFunction(7, 0.0), ex, 2.0),
                       doctest::Contains("level 2"), SolveError);
}

TEST_CASE("Royden decomposition") {
  SUBCASE("harmonic input has no potential part") {
    auto g = make_path(12);
    GraphFunction f(13);
    for (Vertex x = 0; x <= 12; ++x) f[x] = double(x);
    const auto rd = royden_decompose(g, f, exhaustion(g, 6, {1, 3, 5}), 2.0);
    for (double v : rd.potential) CHECK(std::abs(v) < 1e-9);
  }
  SUBCASE("f = g + h exactly, residual small on the interior") {
    const auto ts = tree_setup(6);
    GraphFunction f(ts.t.graph.num_vertices(), 0.0);
    for (Vertex x = 0; x < f.size(); ++x)
      if (ts.profile.assignment[x] == 1) f[x] = 1.0;
    for (double p : {1.5, 2.0, 3.0}) {
      const auto rd = royden_decompose(ts.t.graph, f, exhaustion(ts.t.graph, 0, {1, 3, 5}), p,
                                       {}, &ts.profile);
      for (Vertex x = 0; x < f.size(); ++x) CHECK(rd.f[x] == rd.potential[x] + rd.harmonic[x]);
      CHECK(rd.interior_residual <= 1e-8);
      CHECK(rd.outer_max_by_end.size() == 2);
      CHECK(rd.potential_norm >= 0.0);
    }
  }
  SUBCASE("outer-sphere max |g| shrinks with depth on the tree") {
    std::vector<double> outer;
    for (std::size_t d : {4, 6, 8}) {
      const auto ts = tree_setup(d);
      GraphFunction f(ts.t.graph.num_vertices(), 0.0);
      for (Vertex x = 0; x < f.size(); ++x)
        if (ts.profile.assignment[x] == 1) f[x] = 1.0;
      auto ex = exhaustion(ts.t.graph, 0, default_radii(1, d - 1));
      outer.push_back(royden_decompose(ts.t.graph, f, ex, 2.0).outer_max);
    }
    CHECK(outer[1] < outer[0]);
    CHECK(outer[2] < outer[1]);
  }
  SUBCASE("p = 2 harmonic part is linear in f") {
    const auto ts = tree_setup(5);
    const std::size_t n = ts.t.graph.num_vertices();
    GraphFunction f1(n), f2(n), sum(n);
    for (Vertex x = 0; x < n; ++x) {
      f1[x] = std::sin(0.7 * double(x));
      f2[x] = ts.profile.assignment[x] == 0 ? 1.0 : 0.0;
      sum[x] = f1[x] + f2[x];
    }
    const auto ex = exhaustion(ts.t.graph, 0, {1, 2, 3, 4});
    ExhaustionOptions loose;
    loose.cauchy_tolerance = 1.0;
    const auto h1 = royden_decompose(ts.t.graph, f1, ex, 2.0, loose).harmonic;
    const auto h2 = royden_decompose(ts.t.graph, f2, ex, 2.0, loose).harmonic;
    const auto hs = royden_decompose(ts.t.graph, sum, ex, 2.0, loose).harmonic;
    for (Vertex x = 0; x < n; ++x) CHECK(hs[x] == doctest::Approx(h1[x] + h2[x]).epsilon(1e-8));
  }
  SUBCASE("non-Cauchy exhaustion carries the partial result") {
    auto g = make_path(20);
    GraphFunction f(21, 0.0);
    f[20] = 1.0;
    f[0] = -1.0;
    ExhaustionOptions strict;
    strict.cauchy_tolerance = 1e-300;
    try {
      royden_decompose(g, f, exhaustion(g, 10, {2, 5, 9}), 2.0, strict);
      FAIL("expected NotCauchyError");
    } catch (const NotCauchyError& e) {
      CHECK(e.partial().levels.size() == 3);
      CHECK_FALSE(e.partial().cauchy);
    }
  }
}

TEST_CASE("Dirichlet problem at infinity on the binary tree") {
  const auto ts = tree_setup(8);
  for (double p : {1.5, 2.0, 3.0}) {
    const auto r = dirichlet_at_infinity(ts.t.graph, ts.profile, {0.0, 1.0}, ts.ex, p);
    CHECK(r.solution[0] == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(r.solution[1] == doctest::Approx(1.0 - r.solution[2]).epsilon(1e-8));
    REQUIRE(r.traces.size() == 2);
    for (const auto& tr : r.traces) {
      CHECK(tr.ray.front() == 0);
      CHECK(tr.deepest_free_deviation < 0.1);
    }
  }
  const auto r2 = dirichlet_at_infinity(ts.t.graph, ts.profile, {0.0, 1.0}, ts.ex, 2.0);
  CHECK(r2.solution[2] == doctest::Approx(oracle::tree_right_child(8)).epsilon(1e-8));
}

TEST_CASE("constant end data gives a constant solution") {
  const auto ts = tree_setup(6);
  const auto r = dirichlet_at_infinity(ts.t.graph, ts.profile, {0.3, 0.3}, ts.ex, 1.5);
  for (double v : r.solution) CHECK(v == doctest::Approx(0.3));
}

TEST_CASE("end-data perturbations move the solution by at most epsilon") {
  const auto ts = tree_setup(7);
  for (double p : {1.5, 2.0, 3.0}) {
    const auto a = dirichlet_at_infinity(ts.t.graph, ts.profile, {0.0, 1.0}, ts.ex, p);
    const auto b = dirichlet_at_infinity(ts.t.graph, ts.profile, {0.01, 0.995}, ts.ex, p);
    double gap = 0.0;
    for (Vertex x = 0; x < a.solution.size(); ++x)
      gap = std::max(gap, std::abs(a.solution[x] - b.solution[x]));
    CHECK(gap <= 0.01 + 2e-10);
  }
}

TEST_CASE("at-infinity preconditions") {
  const auto ts = tree_setup(6);
  CHECK_THROWS_AS(dirichlet_at_infinity(ts.t.graph, ts.profile, {0.0}, ts.ex, 2.0),
                  InvalidArgument);
  auto unstable = ends(ts.t.graph, 0, {1, 2});
  REQUIRE_FALSE(unstable.stable);
  CHECK_THROWS_AS(dirichlet_at_infinity(ts.t.graph, unstable, {0, 1, 0, 1}, ts.ex, 2.0),
                  InvalidArgument);
  const auto shallow = exhaustion(ts.t.graph, 0, {0.5});
  CHECK_THROWS_AS(dirichlet_at_infinity(ts.t.graph, ts.profile, {0, 1}, shallow, 2.0),
                  InvalidArgument);
}

TEST_CASE("harmonic boundary probe") {
  const auto half = boundary_cardinality_probe({InfiniteFamily::halfline, 2, {}}, 2.0);
  CHECK(half.kind == BoundaryKind::empty);
  CHECK(half.parabolicity.classification == Classification::parabolic);

  const auto line = boundary_cardinality_probe({InfiniteFamily::line, 2, {}}, 2.0);
  CHECK(line.kind == BoundaryKind::empty);

  ProbeOptions small;
  small.sizes = {5, 6, 7, 8};
  small.thresholds.delta = 0.05;
  const auto tree = boundary_cardinality_probe({InfiniteFamily::tree, 2, {}}, 2.0, small);
  CHECK(tree.kind == BoundaryKind::rich);
  CHECK(tree.distinguished == 2);
  REQUIRE(tree.witnesses.size() == 1);
  CHECK(tree.witnesses[0].nonconstant);
  CHECK(tree.witnesses[0].solution[0] == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(to_string(BoundaryKind::rich) == "rich");
}
