#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "proyden/parabolicity.hpp"

using namespace proyden;

TEST_CASE("halfline capacities are k^(1-p)") {
  for (double p : {1.5, 2.0, 3.0}) {
    const std::vector<std::size_t> sizes{128, 256, 512, 1024};
    const auto r = parabolicity({InfiniteFamily::halfline, 2, {}}, sizes, p);
    CHECK(r.nonincreasing);
    for (std::size_t i = 0; i < sizes.size(); ++i)
      CHECK(r.capacities[i] == doctest::Approx(std::pow(double(sizes[i]), 1 - p)).epsilon(1e-6));
    CHECK(r.slope == doctest::Approx(1 - p).epsilon(1e-6));
    // At p = 1.5 the capacity is still above eps_par at these sizes.
    CHECK(r.classification ==
          (p == 1.5 ? Classification::undetermined : Classification::parabolic));
  }
}

TEST_CASE("line capacities are two half-lines in parallel") {
  const auto r = parabolicity({InfiniteFamily::line, 2, {}}, {8, 16, 32}, 2.0);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(r.capacities[i] == doctest::Approx(2.0 / double(r.sizes[i])).epsilon(1e-8));
}

TEST_CASE("binary tree is hyperbolic and p = 2 capacities approach 1 from above") {
  const auto r = parabolicity({InfiniteFamily::tree, 2, {}}, {6, 7, 8, 9, 10}, 2.0);
  CHECK(r.classification == Classification::hyperbolic);
  for (std::size_t i = 0; i < r.sizes.size(); ++i) {
    CHECK(r.capacities[i] == doctest::Approx(oracle::tree_capacity(2, r.sizes[i], 2.0)));
    CHECK(r.capacities[i] > 1.0);
  }
  CHECK(r.capacities.back() < 1.02);
}

TEST_CASE("grid capacities decrease") {
  const auto r = parabolicity({InfiniteFamily::grid, 2, {}}, {4, 8, 16}, 3.0);
  CHECK(r.nonincreasing);
  CHECK(r.capacities[2] < r.capacities[1]);
  CHECK(r.classification != Classification::hyperbolic);
}

TEST_CASE("decision rule") {
  SUBCASE("parabolic") {
    auto r = classify({1, 2, 4, 8}, {1.0, 0.5, 0.25, 0.005});
    CHECK(r.classification == Classification::parabolic);
  }
  SUBCASE("hyperbolic") {
    auto r = classify({1, 2, 3, 4}, {2.0, 1.2002, 1.2001, 1.2});
    CHECK(r.classification == Classification::hyperbolic);
    CHECK(r.relative_change == doctest::Approx(0.0002 / 1.2));
  }
  SUBCASE("undetermined: decaying but still large") {
    auto r = classify({1, 2, 4}, {1.0, 0.7, 0.5});
    CHECK(r.classification == Classification::undetermined);
  }
  SUBCASE("thresholds are honoured and echoed") {
    ParabolicityThresholds t;
    t.eps_par = 0.6;
    auto r = classify({1, 2, 4}, {1.0, 0.7, 0.5}, t);
    CHECK(r.classification == Classification::parabolic);
    CHECK(r.thresholds.eps_par == 0.6);
  }
  SUBCASE("increase is flagged") {
    auto r = classify({1, 2, 3}, {1.0, 0.5, 0.6});
    CHECK_FALSE(r.nonincreasing);
  }
}

TEST_CASE("parabolicity preconditions") {
  CHECK_THROWS_AS(parabolicity({InfiniteFamily::halfline, 2, {}}, {4, 8}, 2.0), InvalidArgument);
  CHECK_THROWS_AS(parabolicity({InfiniteFamily::halfline, 2, {}}, {4, 8, 8}, 2.0),
                  InvalidArgument);
  CHECK(to_string(Classification::hyperbolic) == "hyperbolic");
}

TEST_CASE("a failed level names itself") {
  SolverOptions starved;
  starved.max_sweeps = 1;
  starved.subspace_correction = false;
  CHECK_THROWS_WITH_AS(
      parabolicity({InfiniteFamily::halfline, 2, {}}, {8, 16, 32}, 2.0, {}, starved),
      doctest::Contains("8"), SolveError);
}
