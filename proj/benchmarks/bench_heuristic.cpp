#include <benchmark/benchmark.h>

#include "powham/constructions.hpp"
#include "powham/digraph.hpp"
#include "powham/heuristic.hpp"

using namespace powham;

static void BM_GreedyCover(benchmark::State& state) {
  const Digraph g = power_cycle(3, static_cast<int>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(greedy_cover(g, 3, seed++));
}
BENCHMARK(BM_GreedyCover)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_HeuristicComplete(benchmark::State& state) {
  const Digraph g = complete_digraph(static_cast<int>(state.range(0)));
  HeuristicParams p;
  for (auto _ : state) benchmark::DoNotOptimize(heuristic_ham_power(g, 2, p));
}
BENCHMARK(BM_HeuristicComplete)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
