// Serial reference loop vs the OpenMP fan-out over a fixed corpus, plus the
// single-graph polytope oracle that dominates both.

#include <benchmark/benchmark.h>

#include "tperfect/corpus.hpp"
#include "tperfect/generators.hpp"
#include "tperfect/polytope.hpp"

using namespace tperfect;

namespace {

const std::vector<Graph>& bench_corpus() {
  static const auto graphs = generate_corpus(CorpusSpec{CorpusKind::mixed, 5, 11, 64, -1, 7});
  return graphs;
}

void BM_Classify(benchmark::State& state) {
  const auto mode = state.range(0) ? Execution::parallel : Execution::serial;
  const auto& graphs = bench_corpus();
  for (auto _ : state) benchmark::DoNotOptimize(classify_corpus(graphs, CheckOptions{}, mode));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(graphs.size()));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_Classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Verify(benchmark::State& state) {
  const auto mode = state.range(0) ? Execution::parallel : Execution::serial;
  const auto& graphs = bench_corpus();
  for (auto _ : state) benchmark::DoNotOptimize(verify_corpus(graphs, VerifyOptions{}, mode));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(graphs.size()));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_Verify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_TOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_plane_triangulation(n, 4 * n, 3, FlipPolicy::min_degree_4);
  for (auto _ : state) benchmark::DoNotOptimize(polytope_oracle(g, Flavor::t));
}
BENCHMARK(BM_TOracle)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
