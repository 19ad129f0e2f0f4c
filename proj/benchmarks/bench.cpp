// Micro-benchmarks for the hot paths: graphicality, greedy realization,
// labeled/nonisomorphic enumeration, canonical keys, the forcibly oracle,
// the closed-form classifier, and the full cross-check sweep.

#include <benchmark/benchmark.h>

#include <vector>

#include "forcibly/classifier.hpp"
#include "forcibly/degree_sequence.hpp"
#include "forcibly/enumeration.hpp"
#include "forcibly/graph.hpp"
#include "forcibly/witness.hpp"

using namespace forcibly;

namespace {

DegreeSequence cycle_sequence(int n) { return DegreeSequence(std::vector<int>(n, 2)); }

// Deterministic graphic sequence of length n: degrees of a path plus extra
// edges folded in by a fixed pattern (kept graphic by construction from an
// actual graph).
DegreeSequence big_sequence(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i + 7 < n; i += 3) g.add_edge(i, i + 7);
  return degree_sequence(g);
}

void BM_IsGraphic(benchmark::State& state) {
  const DegreeSequence d = big_sequence(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_graphic(d));
}
BENCHMARK(BM_IsGraphic)->Arg(64)->Arg(1024)->Arg(16384);

void BM_HavelHakimi(benchmark::State& state) {
  const DegreeSequence d = big_sequence(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(havel_hakimi_realize(d));
}
BENCHMARK(BM_HavelHakimi)->Arg(16)->Arg(128)->Arg(1024);

void BM_EnumerateLabeled(benchmark::State& state) {
  const DegreeSequence d = cycle_sequence(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_realizations(d, EnumerationMode::labeled, 16));
}
BENCHMARK(BM_EnumerateLabeled)->Arg(6)->Arg(8)->Arg(9);

void BM_EnumerateNoniso(benchmark::State& state) {
  const DegreeSequence d = cycle_sequence(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_realizations(d, EnumerationMode::nonisomorphic, 16));
}
BENCHMARK(BM_EnumerateNoniso)->Arg(5)->Arg(6)->Arg(8);

void BM_CanonicalKey(benchmark::State& state) {
  const Graph g = make_sandglass(4, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_adjacency_key(g));
}
BENCHMARK(BM_CanonicalKey)->Arg(2)->Arg(5);

void BM_OracleHolds(benchmark::State& state) {
  // Positive sequence: the oracle must enumerate every realization.
  const DegreeSequence d = parse_sequence("7,2,2,2,1,1,1,1,1");
  for (auto _ : state) benchmark::DoNotOptimize(oracle_forcibly_unicyclic(d));
}
BENCHMARK(BM_OracleHolds);

void BM_OracleRefuted(benchmark::State& state) {
  // Negative sequence: the oracle exits at the first disconnected realization.
  const DegreeSequence d = cycle_sequence(9);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_forcibly_unicyclic(d));
}
BENCHMARK(BM_OracleRefuted);

void BM_Classify(benchmark::State& state) {
  std::vector<int> entries{48, 3, 2, 2, 2};
  entries.insert(entries.end(), 45, 1);
  const DegreeSequence d(entries);
  for (auto _ : state) benchmark::DoNotOptimize(classify_forcibly_bicyclic(d));
}
BENCHMARK(BM_Classify);

void BM_WitnessGadget(benchmark::State& state) {
  const DegreeSequence d = parse_sequence("4,2,2,2,2,1,1");
  for (auto _ : state) benchmark::DoNotOptimize(disconnected_witness(d));
}
BENCHMARK(BM_WitnessGadget);

void BM_WitnessEnumeration(benchmark::State& state) {
  const DegreeSequence d = parse_sequence("2,2,2,1,1");
  for (auto _ : state) benchmark::DoNotOptimize(disconnected_witness(d));
}
BENCHMARK(BM_WitnessEnumeration);

void BM_CrossCheckSweep(benchmark::State& state) {
  const int max_n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(cross_check_sweep(SweepClass::unicyclic, max_n, 1));
}
BENCHMARK(BM_CrossCheckSweep)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
