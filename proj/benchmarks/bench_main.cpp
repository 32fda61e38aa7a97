#include <benchmark/benchmark.h>

#include "mbook/constructions.hpp"
#include "mbook/solver.hpp"

namespace {

using namespace mbook;

void BM_ValidateKpcq(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const BookEmbedding emb = std::get<ConstructionOutcome>(kpcq_embedding(p, 7)).embedding;
  for (auto _ : state) benchmark::DoNotOptimize(validate(emb).valid);
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(emb.graph().edge_count()));
}
BENCHMARK(BM_ValidateKpcq)->Arg(5)->Arg(10)->Arg(20)->Arg(40);

void BM_KpcqConstruction(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int q = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kpcq_embedding(p, q));
}
BENCHMARK(BM_KpcqConstruction)->Args({5, 3})->Args({8, 8})->Args({20, 9})->Args({20, 10});

void BM_FeasiblePagesSnake(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const Graph g = kpcq(p, 3);
  const std::vector<int> spine = snake_spine(p, 3);
  for (auto _ : state) benchmark::DoNotOptimize(feasible_pages(g, spine, p + 2).status);
}
BENCHMARK(BM_FeasiblePagesSnake)->Arg(4)->Arg(5)->Arg(6);

void BM_ExactMbt(benchmark::State& state, Graph g, int start) {
  SolveOptions opts;
  opts.start_pages = start;
  for (auto _ : state) benchmark::DoNotOptimize(exact_mbt(g, opts).value);
}
BENCHMARK_CAPTURE(BM_ExactMbt, K4_from_1, complete(4), 1);
BENCHMARK_CAPTURE(BM_ExactMbt, Q3_from_1, hypercube(3), 1);
BENCHMARK_CAPTURE(BM_ExactMbt, K3xC3_from_4, kpcq(3, 3), 4)->Unit(benchmark::kMillisecond);

void BM_LowerBound(benchmark::State& state, Graph g) {
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound(g).value);
}
BENCHMARK_CAPTURE(BM_LowerBound, K5xC3, kpcq(5, 3));
BENCHMARK_CAPTURE(BM_LowerBound, K5_minus_e, delete_edge(complete(5), {0, 1}));

}  // namespace

BENCHMARK_MAIN();
