#include <benchmark/benchmark.h>

#include "abelcut/cuts.hpp"
#include "abelcut/graph.hpp"
#include "abelcut/pipeline.hpp"
#include "abelcut/spectral.hpp"

using namespace abelcut;

static void BM_BruteForce(benchmark::State& state) {
  const Graph g = cycle_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_sparsest(g, Objective::kConductance));
}
BENCHMARK(BM_BruteForce)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_FiedlerCut(benchmark::State& state) {
  const Graph g = cycle_graph(state.range(0));
  const Spectrum s = graph_spectrum(g);
  for (auto _ : state) benchmark::DoNotOptimize(fiedler_cut(g, s));
}
BENCHMARK(BM_FiedlerCut)->Arg(64)->Arg(256);

static void BM_PipelineThresholdOnly(benchmark::State& state) {
  // Above the SDP vertex limit, so this times the net and threshold stage.
  const Graph g = cycle_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(abelian_sparsest_cut(g, 0.05, g.size()));
}
BENCHMARK(BM_PipelineThresholdOnly)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);
