// Serial reference kernels against their OpenMP counterparts on whole
// isomorphism classes.
#include <benchmark/benchmark.h>

#include <thread>

#include "treeopt/enumeration.hpp"
#include "treeopt/kernels.hpp"

namespace {

using namespace treeopt;

const IsoClassStream& sample_class() {
  static const IsoClassStream cls = enumerate_by_edges(8, 12);
  return cls;
}

int workers() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

void BM_TreeCountsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tree_counts_serial(sample_class().graphs));
}

void BM_TreeCountsParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tree_counts(sample_class().graphs, workers()));
}

void BM_LaplacianSequencesSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_sequences_serial(sample_class().graphs, SequenceKind::Laplacian, 8));
  }
}

void BM_LaplacianSequencesParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_sequences(sample_class().graphs, SequenceKind::Laplacian, 8, workers()));
  }
}

void BM_EnumerateEdges(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_by_edges(8, 14, {Caps{}, w}));
}

}  // namespace

BENCHMARK(BM_TreeCountsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeCountsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LaplacianSequencesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LaplacianSequencesParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateEdges)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
