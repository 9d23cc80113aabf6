#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "proyden/calculus.hpp"
#include "proyden/dirichlet.hpp"
#include "proyden/generate.hpp"

using namespace proyden;

namespace {

struct Instance {
  WeightedGraph graph;
  DirichletProblem problem;
};

Instance random_instance(std::mt19937_64& rng, std::size_t n, double p) {
  auto g = oracle::random_graph(rng, n, 3.0 / static_cast<double>(n));
  DirichletProblem prob;
  prob.p = p;
  prob.free.assign(n, true);
  prob.data.assign(n, 0.0);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  for (std::size_t i = 0; i < std::max<std::size_t>(2, n / 4); ++i) {
    const Vertex x = (i * 7919) % n;
    prob.free[x] = false;
    prob.data[x] = value(rng);
  }
  return {std::move(g), std::move(prob)};
}

double sup_diff(const GraphFunction& a, const GraphFunction& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("affine solution on a path for every p") {
  for (double p : {1.5, 2.0, 3.0, 4.5}) {
    for (std::size_t n : {2, 3, 7, 20}) {
      auto g = make_path(n);
      auto sol = solve_dirichlet(g, pinned_problem(g, {{0, 0.0}, {n, 1.0}}, p));
      CHECK(sol.report.converged);
      for (std::size_t k = 0; k <= n; ++k)
        CHECK(sol.values[k] == doctest::Approx(double(k) / double(n)).epsilon(1e-8));
    }
  }
}

TEST_CASE("path(3) solution agrees with brute-force minimization") {
  auto g = make_path(3);
  for (double p : {1.5, 2.0, 3.0}) {
    auto prob = pinned_problem(g, {{0, 0.0}, {3, 1.0}}, p);
    const auto brute = oracle::brute_force_minimizer(g, prob.free, prob.data, p);
    const auto sol = solve_dirichlet(g, prob);
    CHECK(sup_diff(sol.values, brute) < 1e-6);
  }
}

TEST_CASE("weighted path agrees with brute force") {
  std::mt19937_64 rng(21);
  auto g = oracle::random_graph(rng, 5, 0.5);
  std::vector<bool> free{false, true, true, false, true};
  GraphFunction data{0.3, 0, 0, -0.6, 0};
  for (double p : {1.5, 3.0}) {
    DirichletProblem prob{free, data, p};
    const auto sol = solve_dirichlet(g, prob);
    const auto brute = oracle::brute_force_minimizer(g, free, data, p);
    CHECK(p_energy(g, sol.values, p) <= p_energy(g, brute, p) + 1e-10);
    CHECK(sup_diff(sol.values, brute) < 1e-5);
  }
}

TEST_CASE("constant data gives a constant solution") {
  auto g = make_grid(4, 4);
  auto sol = solve_dirichlet(g, pinned_problem(g, {{0, 2.5}, {15, 2.5}, {5, 2.5}}, 1.5));
  for (double v : sol.values) CHECK(v == doctest::Approx(2.5));
}

TEST_CASE("star with pins 0, 0, 1") {
  auto g = oracle::star(3);
  auto sol = solve_dirichlet(g, pinned_problem(g, {{1, 0.0}, {2, 0.0}, {3, 1.0}}, 2.0));
  CHECK(sol.values[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("residual") {
  auto g = make_path(2);
  const std::vector<bool> middle{false, true, false};
  CHECK(residual(g, GraphFunction{0, 0.9, 1}, 2.0, middle) == doctest::Approx(0.8));
  CHECK(residual(g, GraphFunction{3, 3, 3}, 1.5, middle) == 0.0);
  CHECK(residual(g, GraphFunction{0, 0.9, 1}, 2.0, VertexSet({1})) == doctest::Approx(0.8));
}

TEST_CASE("p = 2 matches the dense linear oracle") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 20; ++i) {
    auto inst = random_instance(rng, 10 + 2 * i, 2.0);
    const auto sol = solve_dirichlet(inst.graph, inst.problem);
    const auto ref = oracle::dense_harmonic(inst.graph, inst.problem.free, inst.problem.data);
    CHECK(sup_diff(sol.values, ref) < 1e-8);
  }
}

TEST_CASE("solver contract on random instances") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    const double p = std::array{1.5, 2.0, 3.0}[i % 3];
    auto inst = random_instance(rng, 6 + i, p);
    const auto sol = solve_dirichlet(inst.graph, inst.problem);
    const auto& rep = sol.report;
    CAPTURE(i);
    CHECK(rep.converged);
    CHECK(rep.residual <= rep.options.tol_residual);
    CHECK(residual(inst.graph, sol.values, p, inst.problem.free) <= rep.options.tol_residual);

    // Energy trajectory: nonincreasing up to rounding of the total.
    REQUIRE(rep.energy.size() == rep.sweeps + 1);
    for (std::size_t k = 1; k < rep.energy.size(); ++k)
      CHECK(rep.energy[k] <= rep.energy[k - 1] * (1.0 + 1e-12));

    double lo = 1e300, hi = -1e300, mean = 0.0, pins = 0.0;
    for (Vertex x = 0; x < sol.values.size(); ++x) {
      if (inst.problem.free[x]) continue;
      lo = std::min(lo, inst.problem.data[x]);
      hi = std::max(hi, inst.problem.data[x]);
      mean += inst.problem.data[x];
      pins += 1.0;
      CHECK(sol.values[x] == inst.problem.data[x]);
    }
    for (double v : sol.values) {
      CHECK(v >= lo - rep.options.tol_update);
      CHECK(v <= hi + rep.options.tol_update);
    }

    // Beats the constant-at-mean extension.
    auto ext = inst.problem.data;
    for (Vertex x = 0; x < ext.size(); ++x)
      if (inst.problem.free[x]) ext[x] = mean / pins;
    CHECK(p_energy(inst.graph, sol.values, p) <= p_energy(inst.graph, ext, p) + 1e-12);
  }
}

TEST_CASE("uniqueness from different starting points") {
  std::mt19937_64 rng(24);
  for (double p : {1.5, 2.0, 3.0}) {
    auto inst = random_instance(rng, 25, p);
    auto a = inst.problem;
    auto b = inst.problem;
    a.initial = GraphFunction(25, -1.0);
    b.initial = GraphFunction(25, 1.0);
    const auto sa = solve_dirichlet(inst.graph, a);
    const auto sb = solve_dirichlet(inst.graph, b);
    CHECK(sup_diff(sa.values, sb.values) <= 10 * a.options.tol_update);
  }
}

TEST_CASE("affine covariance") {
  std::mt19937_64 rng(25);
  for (double p : {1.5, 2.0, 3.0}) {
    auto inst = random_instance(rng, 20, p);
    const auto base = solve_dirichlet(inst.graph, inst.problem);
    for (double a : {2.0, -0.5}) {
      auto prob = inst.problem;
      for (auto& v : prob.data) v = a * v + 0.25;
      const auto sol = solve_dirichlet(inst.graph, prob);
      for (Vertex x = 0; x < sol.values.size(); ++x)
        CHECK(sol.values[x] == doctest::Approx(a * base.values[x] + 0.25).epsilon(1e-8));
    }
  }
}

TEST_CASE("plain Gauss-Seidel reaches the same minimizer") {
  std::mt19937_64 rng(26);
  auto inst = random_instance(rng, 12, 3.0);
  auto plain = inst.problem;
  plain.options.subspace_correction = false;
  const auto a = solve_dirichlet(inst.graph, inst.problem);
  const auto b = solve_dirichlet(inst.graph, plain);
  CHECK(b.report.converged);
  CHECK(sup_diff(a.values, b.values) < 1e-8);
}

TEST_CASE("non-convergence is reported, not thrown") {
  auto g = make_path(50);
  auto prob = pinned_problem(g, {{0, 0.0}, {50, 1.0}}, 2.0);
  prob.options.max_sweeps = 2;
  prob.options.subspace_correction = false;
  const auto sol = solve_dirichlet(g, prob);
  CHECK_FALSE(sol.report.converged);
  CHECK(sol.report.sweeps == 2);
  CHECK(sol.values.size() == 51);
}

TEST_CASE("ill-posed and malformed problems") {
  auto g = make_path(3);
  DirichletProblem all_free{std::vector<bool>(4, true), GraphFunction(4, 0.0), 2.0};
  CHECK_THROWS_AS(solve_dirichlet(g, all_free), SolveError);
  DirichletProblem short_data{std::vector<bool>(4, false), GraphFunction(2, 0.0), 2.0};
  CHECK_THROWS_AS(solve_dirichlet(g, short_data), InvalidArgument);
  CHECK_THROWS_AS(solve_dirichlet(g, pinned_problem(g, {{0, 0.0}}, 0.5)), InvalidArgument);
}

TEST_CASE("p close to one carries a warning") {
  auto g = make_path(4);
  const auto sol = solve_dirichlet(g, pinned_problem(g, {{0, 0.0}, {4, 1.0}}, 1.05));
  CHECK_FALSE(sol.report.warnings.empty());
}

TEST_CASE("comparison principle") {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 30; ++i) {
    const double p = std::array{1.5, 2.0, 3.0}[i % 3];
    auto inst = random_instance(rng, 8 + i % 10, p);
    auto upper = inst.problem;
    std::uniform_real_distribution<double> bump(0.0, 0.4);
    for (auto& v : upper.data) v += bump(rng);
    const auto cert = compare(inst.graph, inst.problem, upper);
    CHECK(cert.holds);
    CHECK(cert.max_violation <= cert.tolerance);
  }

  std::mt19937_64 rng2(28);
  auto inst = random_instance(rng2, 15, 1.5);
  CHECK(compare(inst.graph, inst.problem, inst.problem).max_violation <= 2e-10);

  auto shifted = inst.problem;
  for (auto& v : shifted.data) v += 1.0;
  const auto cert = compare(inst.graph, inst.problem, shifted);
  for (Vertex x = 0; x < 15; ++x)
    CHECK(cert.upper.values[x] == doctest::Approx(cert.lower.values[x] + 1.0).epsilon(1e-9));

  auto wrong = inst.problem;
  for (auto& v : wrong.data) v -= 1.0;
  CHECK_THROWS_AS(compare(inst.graph, inst.problem, wrong), InvalidArgument);
  auto other_p = inst.problem;
  other_p.p = 2.0;
  CHECK_THROWS_AS(compare(inst.graph, inst.problem, other_p), InvalidArgument);
}
