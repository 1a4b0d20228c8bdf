#include <benchmark/benchmark.h>

#include "powham/constructions.hpp"
#include "powham/solver.hpp"

using namespace powham;

static void BM_FindHamPowerCirculant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Digraph g = power_cycle(2, n);
  for (auto _ : state) benchmark::DoNotOptimize(find_ham_power(g, 2, PowerMode::cycle));
}
BENCHMARK(BM_FindHamPowerCirculant)->Arg(16)->Arg(64)->Arg(256);

static void BM_FindHamPowerExtremal(benchmark::State& state) {
  const Digraph g = extremal_total(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const auto r = find_ham_power(g, 2, PowerMode::cycle);
    state.counters["nodes"] = static_cast<double>(r.nodes_expanded);
  }
}
BENCHMARK(BM_FindHamPowerExtremal)->DenseRange(10, 14, 2)->Unit(benchmark::kMillisecond);

static void BM_FindHamPowerGk(benchmark::State& state) {
  const Digraph g = gk(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(find_ham_power(g, 2, PowerMode::cycle));
}
BENCHMARK(BM_FindHamPowerGk)->Unit(benchmark::kMillisecond);

static void BM_EmbedDr(benchmark::State& state) {
  const Digraph host = d_r(static_cast<int>(state.range(0)));
  const Digraph pattern = power_cycle(2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(embed(pattern, host));
}
BENCHMARK(BM_EmbedDr)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

static void BM_CountTransitive(benchmark::State& state) {
  const Digraph t = random_tournament(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(find_transitive(t, 4, TransitiveMode::count));
}
BENCHMARK(BM_CountTransitive)->Arg(16)->Arg(32);

// One slice of the labelled 7-vertex tournament space used by the Ramsey scan.
static void BM_RamseySlice(benchmark::State& state) {
  const std::uint64_t slice = 1 << 12;
  for (auto _ : state) {
    std::uint64_t free_count = 0;
    for (std::uint64_t i = 0; i < slice; ++i)
      free_count += !contains_transitive(tournament_from_index(7, i * 511), 4);
    benchmark::DoNotOptimize(free_count);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * slice));
}
BENCHMARK(BM_RamseySlice)->Unit(benchmark::kMillisecond);
