#include <benchmark/benchmark.h>

#include "weylgray/counting.hpp"
#include "weylgray/hamilton_search.hpp"
#include "weylgray/optimal_codes.hpp"
#include "weylgray/recursive_codes.hpp"

namespace {

using namespace weylgray;

void BM_Gca(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gca(n));
}
BENCHMARK(BM_Gca)->DenseRange(5, 11, 2);

void BM_Gcb(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gcb(n));
}
BENCHMARK(BM_Gcb)->DenseRange(4, 8, 2);

void BM_GcdCode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gcd_code(n));
}
BENCHMARK(BM_GcdCode)->DenseRange(4, 8, 2);

void BM_Ogcb(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ogcb(n));
}
BENCHMARK(BM_Ogcb)->DenseRange(3, 7, 1)->Unit(benchmark::kMillisecond);

void BM_BuildD(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_d_distance2(n));
}
BENCHMARK(BM_BuildD)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(GroupType::B, n));
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 7, 2);

void BM_FindHamilton(benchmark::State& state) {
  const auto graph = distance2_graph(GroupType::D, static_cast<int>(state.range(0)));
  const auto object = state.range(1) == 0 ? HamiltonObject::Cycle : HamiltonObject::Path;
  SearchOptions options;
  options.threads = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(find_hamilton(graph, object, options));
}
BENCHMARK(BM_FindHamilton)
    ->Args({3, 0, 1})
    ->Args({3, 1, 1})
    ->Args({4, 0, 1})
    ->Args({4, 0, 4})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
