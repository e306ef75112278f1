#include <benchmark/benchmark.h>

#include "hamlab/analysis.hpp"
#include "hamlab/canonical.hpp"
#include "hamlab/cycles.hpp"
#include "hamlab/enumerate.hpp"
#include "hamlab/families.hpp"
#include "hamlab/invariants.hpp"
#include "hamlab/theorems.hpp"

using namespace hamlab;

static void BM_CircumferencePetersen(benchmark::State& state) {
  Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(circumference(g));
}
BENCHMARK(BM_CircumferencePetersen);

static void BM_CircumferenceHub(benchmark::State& state) {
  Graph g = hub_family(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(circumference(g));
}
BENCHMARK(BM_CircumferenceHub)->Arg(2)->Arg(4);

static void BM_ToughnessGn15(benchmark::State& state) {
  Graph g = g_n(15, 5);
  for (auto _ : state) benchmark::DoNotOptimize(toughness(g));
}
BENCHMARK(BM_ToughnessGn15);

static void BM_IndependenceNumberGn15(benchmark::State& state) {
  Graph g = g_n(15, 5);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_IndependenceNumberGn15);

static void BM_VertexConnectivityPetersen(benchmark::State& state) {
  Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
}
BENCHMARK(BM_VertexConnectivityPetersen);

static void BM_CanonicalFormPetersen(benchmark::State& state) {
  Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormPetersen);

static void BM_Enumerate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_graphs(n, true).size());
}
BENCHMARK(BM_Enumerate)->Arg(5)->Arg(6)->Arg(7);

static void BM_CheckAllT15Graph(benchmark::State& state) {
  Graph g = t15_graph();
  for (auto _ : state) {
    GraphAnalysis a(g);
    benchmark::DoNotOptimize(check_all(a, all_tags(), {1, 4}));
  }
}
BENCHMARK(BM_CheckAllT15Graph);

BENCHMARK_MAIN();
