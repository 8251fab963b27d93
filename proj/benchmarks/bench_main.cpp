#include <benchmark/benchmark.h>

#include "circuit21/canonical.hpp"
#include "circuit21/catalog.hpp"
#include "circuit21/engine.hpp"
#include "circuit21/enumerate.hpp"
#include "circuit21/sparsity.hpp"

using namespace c21;

static void BM_PebbleIndependent(benchmark::State& state) {
  Graph g = remove_edge(base_graphs(BaseFamily::g_simple).back().graph, 0, 1);  // S5 - e
  for (auto _ : state) benchmark::DoNotOptimize(pebble_independent(g));
}
BENCHMARK(BM_PebbleIndependent);

static void BM_BruteSparsity(benchmark::State& state) {
  Graph g = remove_edge(base_graphs(BaseFamily::g_simple).back().graph, 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_sparse_bruteforce(g));
}
BENCHMARK(BM_BruteSparsity);

static void BM_IsCircuit(benchmark::State& state) {
  Graph g = base_graphs(BaseFamily::g_simple).back().graph;  // S5
  for (auto _ : state) benchmark::DoNotOptimize(is_circuit(g));
}
BENCHMARK(BM_IsCircuit);

static void BM_CanonicalForm(benchmark::State& state) {
  Graph g = octahedron();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm);

static void BM_CensusN6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_exhaustive(6));
}
BENCHMARK(BM_CensusN6);

static void BM_CensusN7(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_exhaustive(7));
}
BENCHMARK(BM_CensusN7);

static void BM_DecomposeS5(benchmark::State& state) {
  Graph g = base_graphs(BaseFamily::g_simple).back().graph;
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(BM_DecomposeS5);

BENCHMARK_MAIN();
