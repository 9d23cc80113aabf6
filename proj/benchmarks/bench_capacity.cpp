#include <benchmark/benchmark.h>

#include "proyden/capacity.hpp"
#include "proyden/generate.hpp"
#include "proyden/parabolicity.hpp"

using namespace proyden;

namespace {

void BM_PathCapacity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = make_path(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(capacity(g, VertexSet({0}), VertexSet({n}), 1.5).value);
}
BENCHMARK(BM_PathCapacity)->RangeMultiplier(8)->Range(64, 32768)->Unit(benchmark::kMillisecond);

void BM_TreeCapacity(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  const auto t = truncate({InfiniteFamily::tree, 2, {}}, depth);
  for (auto _ : state)
    benchmark::DoNotOptimize(capacity(t.graph, VertexSet({0}), t.frontier, 3.0).value);
}
BENCHMARK(BM_TreeCapacity)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_ParabolicityTree(benchmark::State& state) {
  for (auto _ : state) {
    auto r = parabolicity({InfiniteFamily::tree, 2, {}}, {6, 7, 8, 9, 10}, 2.0);
    benchmark::DoNotOptimize(r.capacities.data());
  }
}
BENCHMARK(BM_ParabolicityTree)->Unit(benchmark::kMillisecond);

}  // namespace
