#include <benchmark/benchmark.h>

#include <random>

#include "oracles.hpp"
#include "proyden/modulus.hpp"

using namespace proyden;

namespace {

void BM_ModulusDirect(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  const auto g = oracle::random_graph(rng, n, 0.4);
  std::size_t paths = 0;
  for (auto _ : state) {
    auto r = modulus_direct(g, VertexSet({0}), VertexSet({n - 1}), 2.5);
    paths = r.paths.size();
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["paths"] = static_cast<double>(paths);
}
BENCHMARK(BM_ModulusDirect)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ModulusDual(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  const auto g = oracle::random_graph(rng, n, 0.4);
  for (auto _ : state)
    benchmark::DoNotOptimize(modulus_dual(g, VertexSet({0}), VertexSet({n - 1}), 2.5).value);
}
BENCHMARK(BM_ModulusDual)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace
