#include <benchmark/benchmark.h>

#include "chromaplex/colored_graph.hpp"
#include "chromaplex/digraph.hpp"
#include "chromaplex/models.hpp"
#include "chromaplex/permutation.hpp"
#include "chromaplex/predictions.hpp"
#include "chromaplex/ribbon.hpp"

using namespace chromaplex;

static void BM_CycleCount(benchmark::State& state) {
  Rng rng(1);
  const auto a = sample_uniform_permutation(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(cycle_count(a));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CycleCount)->Range(1 << 10, 1 << 20);

static void BM_QuotientCycleCount(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = sample_uniform_permutation(n, rng);
  const auto b = sample_uniform_permutation(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(quotient_cycle_count(a, b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_QuotientCycleCount)->Range(1 << 10, 1 << 20);

static void BM_UniformFaces(benchmark::State& state) {
  Rng rng(3);
  for (auto _ : state) {
    const auto g = sample_uniform_model(3, static_cast<std::size_t>(state.range(0)), rng);
    benchmark::DoNotOptimize(face_count(g));
  }
}
BENCHMARK(BM_UniformFaces)->Arg(1000)->Arg(10000);

static void BM_QuarticIBubbles(benchmark::State& state) {
  Rng rng(4);
  for (auto _ : state) {
    const auto s = sample_quartic_model(3, static_cast<std::size_t>(state.range(0)), rng);
    benchmark::DoNotOptimize(analyze(quotient_digraph(s.graph, 1)).component_count);
  }
}
BENCHMARK(BM_QuarticIBubbles)->Arg(2000);

static void BM_RibbonGenus(benchmark::State& state) {
  Rng rng(5);
  for (auto _ : state) {
    const auto m = sample_ribbon_map(static_cast<std::size_t>(state.range(0)), rng);
    benchmark::DoNotOptimize(ribbon_genus(m));
  }
}
BENCHMARK(BM_RibbonGenus)->Arg(3000);

static void BM_Harmonic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(harmonic(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Harmonic)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
