#include <benchmark/benchmark.h>

#include <random>

#include "oracles.hpp"
#include "proyden/dirichlet.hpp"
#include "proyden/generate.hpp"

using namespace proyden;

namespace {

// Grid with the left column at 0 and the right column at 1.
DirichletProblem grid_problem(const WeightedGraph& g, std::size_t side, double p,
                              bool correction) {
  std::vector<std::pair<Vertex, double>> pins;
  for (std::size_t y = 0; y < side; ++y) {
    pins.emplace_back(y * side, 0.0);
    pins.emplace_back(y * side + side - 1, 1.0);
  }
  SolverOptions o;
  o.subspace_correction = correction;
  return pinned_problem(g, pins, p, o);
}

void BM_GridDirichlet(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const double p = static_cast<double>(state.range(1)) / 2.0;
  const auto g = make_grid(side, side);
  const auto prob = grid_problem(g, side, p, true);
  std::size_t sweeps = 0;
  for (auto _ : state) {
    auto sol = solve_dirichlet(g, prob);
    sweeps = sol.report.sweeps;
    benchmark::DoNotOptimize(sol.values.data());
  }
  state.counters["sweeps"] = static_cast<double>(sweeps);
  state.counters["vertices"] = static_cast<double>(g.num_vertices());
}
// Second argument is 2p.
BENCHMARK(BM_GridDirichlet)
    ->ArgsProduct({{8, 16, 32}, {3, 4, 6}})
    ->Unit(benchmark::kMillisecond);

void BM_GridPlainGaussSeidel(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto g = make_grid(side, side);
  const auto prob = grid_problem(g, side, 3.0, false);
  std::size_t sweeps = 0;
  for (auto _ : state) {
    auto sol = solve_dirichlet(g, prob);
    sweeps = sol.report.sweeps;
    benchmark::DoNotOptimize(sol.values.data());
  }
  state.counters["sweeps"] = static_cast<double>(sweeps);
}
BENCHMARK(BM_GridPlainGaussSeidel)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_RandomDirichlet(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  const auto g = oracle::random_graph(rng, n, 3.0 / static_cast<double>(n));
  std::vector<std::pair<Vertex, double>> pins;
  std::uniform_real_distribution<double> value(-1, 1);
  for (Vertex x = 0; x < n; x += 5) pins.emplace_back(x, value(rng));
  const auto prob = pinned_problem(g, pins, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_dirichlet(g, prob).values.data());
}
BENCHMARK(BM_RandomDirichlet)->Arg(50)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
