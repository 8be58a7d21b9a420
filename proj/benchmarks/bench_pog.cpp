#include <benchmark/benchmark.h>

#include "pog/colorings.hpp"
#include "pog/decompose.hpp"
#include "pog/generators.hpp"

using namespace pog;

static void BM_PoEdgeColorQn(benchmark::State& state) {
  auto d = gen_qn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(po_edge_color(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PoEdgeColorQn)->RangeMultiplier(2)->Range(2, 64)->Complexity();

static void BM_PoEdgeColorRandom(benchmark::State& state) {
  auto d = gen_random_po(static_cast<int>(state.range(0)), 7, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(po_edge_color(d));
}
BENCHMARK(BM_PoEdgeColorRandom)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

static void BM_LinearArboricityEven(benchmark::State& state) {
  // dense random drawings; keep the ones whose max degree is even and >= 6
  Diagram d = gen_random_po(static_cast<int>(state.range(0)), 1, 0.95);
  for (std::uint64_t seed = 2; d.graph.max_degree() < 6 || d.graph.max_degree() % 2; ++seed)
    d = gen_random_po(static_cast<int>(state.range(0)), seed, 0.95);
  for (auto _ : state) benchmark::DoNotOptimize(po_linear_arboricity(d));
}
BENCHMARK(BM_LinearArboricityEven)->Arg(16)->Arg(32)->Arg(64);

static void BM_Recognize(benchmark::State& state) {
  Graph g = gen_random_po(static_cast<int>(state.range(0)), 3, 0.6).graph;
  for (auto _ : state) benchmark::DoNotOptimize(recognize(g));
}
BENCHMARK(BM_Recognize)->DenseRange(6, 10, 2);

static void BM_TwoForestsPlusMatching(benchmark::State& state) {
  auto d = gen_qn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(two_forests_plus_matching(d));
}
BENCHMARK(BM_TwoForestsPlusMatching)->RangeMultiplier(2)->Range(2, 32);

static void BM_CoverStarForest(benchmark::State& state) {
  auto d = gen_random_po(static_cast<int>(state.range(0)), 11, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(cover_outerplanar_plus(d, PartKind::StarForest));
}
BENCHMARK(BM_CoverStarForest)->Arg(20)->Arg(40)->Arg(80);

static void BM_CoverLinearForest(benchmark::State& state) {
  auto d = gen_random_po(static_cast<int>(state.range(0)), 11, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(cover_outerplanar_plus(d, PartKind::LinearForest));
}
BENCHMARK(BM_CoverLinearForest)->Arg(20)->Arg(40)->Arg(80);
BENCHMARK_MAIN();
