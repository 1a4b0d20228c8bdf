#include <benchmark/benchmark.h>

#include "powham/absorbing.hpp"
#include "powham/constructions.hpp"
#include "powham/digraph.hpp"

using namespace powham;

static void BM_SampleAbsorbers(benchmark::State& state) {
  const Digraph g = random_tournament(64, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_absorbers(g, 0, 2, AbsorberKind::k_absorber, 10000, 7));
}
BENCHMARK(BM_SampleAbsorbers)->Unit(benchmark::kMillisecond);

static void BM_Connect2Path(benchmark::State& state) {
  const Digraph g = d_r(static_cast<int>(state.range(0)));
  const int r = static_cast<int>(state.range(0));
  // Pair in the first class, pair in the last class.
  for (auto _ : state)
    benchmark::DoNotOptimize(connect_2path(g, 0, 1, 2 * r, 2 * r + 1, VertexSet(g.order())));
}
BENCHMARK(BM_Connect2Path)->Arg(8)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_ConnectKTuples(benchmark::State& state) {
  const Digraph g = complete_digraph(static_cast<int>(state.range(0)));
  const std::vector<Vertex> x{0, 1}, y{2, 3};
  VertexSet avoid(g.order());
  for (auto _ : state) benchmark::DoNotOptimize(connect_ktuples(g, x, y, avoid, 2, 12));
}
BENCHMARK(BM_ConnectKTuples)->Arg(100)->Arg(1000);
