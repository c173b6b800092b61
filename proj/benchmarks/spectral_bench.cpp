#include <benchmark/benchmark.h>

#include "abelcut/graph.hpp"
#include "abelcut/spectral.hpp"
#include "abelcut/walks.hpp"

using namespace abelcut;

static void BM_CharacterSpectrum(benchmark::State& state) {
  const Graph g = hypercube_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graph_spectrum(g));
  state.SetComplexityN(g.size());
}
BENCHMARK(BM_CharacterSpectrum)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

static void BM_DenseSpectrum(benchmark::State& state) {
  const Graph g = hypercube_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dense_spectrum(g));
  state.SetComplexityN(g.size());
}
BENCHMARK(BM_DenseSpectrum)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

static void BM_CharacterEigenvaluesOnly(benchmark::State& state) {
  const AbelianGroup grp = AbelianGroup::power(2, static_cast<int>(state.range(0)));
  const auto gens = GeneratorMultiset::standard(grp);
  for (auto _ : state) benchmark::DoNotOptimize(character_eigenvalues(grp, gens));
}
BENCHMARK(BM_CharacterEigenvaluesOnly)->DenseRange(6, 14, 2);

static void BM_CollisionSpectral(benchmark::State& state) {
  const Graph g = cycle_graph(state.range(0));
  const Spectrum s = graph_spectrum(g);
  for (auto _ : state) benchmark::DoNotOptimize(collision_profile_spectral(g, s, 64));
}
BENCHMARK(BM_CollisionSpectral)->Arg(64)->Arg(512);

static void BM_CollisionDirect(benchmark::State& state) {
  const Graph g = cycle_graph(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(collision_profile_direct(g, 64));
}
BENCHMARK(BM_CollisionDirect)->Arg(64)->Arg(512);
