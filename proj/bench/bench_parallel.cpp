// OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include "hca/catalog.hpp"
#include "hca/generator.hpp"
#include "hca/recognition.hpp"

namespace {

// Minimal non-HCA graphs on 8..12 vertices: the obstacle search has to
// scan every core before it can report a miss, and hit late otherwise.
std::vector<hca::Graph> search_inputs() {
  std::vector<hca::Graph> out;
  for (const auto& c : hca::enumerate_essential(4)) {
    if (c.obstacle.graph.order() >= 10) out.push_back(c.obstacle.graph);
  }
  for (int k = 7; k <= 11; ++k) out.push_back(hca::with_isolated_vertex(hca::cycle_graph(k)));
  return out;
}

void BM_obstacle_search_omp(benchmark::State& state) {
  auto inputs = search_inputs();
  for (auto _ : state) {
    for (const auto& g : inputs) benchmark::DoNotOptimize(hca::find_obstacle_enumeration(g));
  }
}

void BM_obstacle_search_serial(benchmark::State& state) {
  auto inputs = search_inputs();
  for (auto _ : state) {
    for (const auto& g : inputs) benchmark::DoNotOptimize(hca::find_obstacle_enumeration_serial(g));
  }
}

void BM_enumerate_omp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hca::enumerate_essential(static_cast<int>(state.range(0))));
}

void BM_enumerate_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hca::enumerate_essential_serial(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_obstacle_search_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_obstacle_search_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_omp)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_serial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
