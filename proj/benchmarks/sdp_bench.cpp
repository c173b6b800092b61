#include <benchmark/benchmark.h>

#include "abelcut/cuts.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/sdp_advice.hpp"

using namespace abelcut;

static void BM_AdviceSdpCycle(benchmark::State& state) {
  const Graph g = cycle_graph(state.range(0));
  const Cut q = brute_force_sparsest(g, Objective::kSparsity).cut;
  for (auto _ : state) benchmark::DoNotOptimize(advice_cut(g, q, 0.05));
}
BENCHMARK(BM_AdviceSdpCycle)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_AdviceSdpHypercube(benchmark::State& state) {
  const Graph g = hypercube_graph(static_cast<int>(state.range(0)));
  const Cut q = brute_force_sparsest(g, Objective::kSparsity).cut;
  for (auto _ : state) benchmark::DoNotOptimize(advice_cut(g, q, 0.05));
}
BENCHMARK(BM_AdviceSdpHypercube)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
