#include "treeopt/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>

namespace treeopt {

namespace {

// Runs body(i) for i in [0, count) on `workers` threads; the first exception
// thrown by any iteration is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
  std::exception_ptr failure;
  const long long total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(clamp_workers(workers))
  for (long long i = 0; i < total; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(treeopt_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

int clamp_workers(int workers) { return std::max(1, workers); }

std::vector<TraceSequence> trace_sequences_serial(std::span<const Graph> cls, SequenceKind kind, int K) {
  std::vector<TraceSequence> out;
  out.reserve(cls.size());
  for (const Graph& g : cls) out.push_back(trace_sequence(g, kind, K));
  return out;
}

std::vector<TraceSequence> trace_sequences(std::span<const Graph> cls, SequenceKind kind, int K, int workers) {
  std::vector<TraceSequence> out(cls.size());
  parallel_for(cls.size(), workers, [&](std::size_t i) { out[i] = trace_sequence(cls[i], kind, K); });
  return out;
}

std::vector<BigInt> tree_counts_serial(std::span<const Graph> cls) {
  std::vector<BigInt> out;
  out.reserve(cls.size());
  for (const Graph& g : cls) out.push_back(spanning_tree_count(g));
  return out;
}

std::vector<BigInt> tree_counts(std::span<const Graph> cls, int workers) {
  std::vector<BigInt> out(cls.size());
  parallel_for(cls.size(), workers, [&](std::size_t i) { out[i] = spanning_tree_count(cls[i]); });
  return out;
}

}  // namespace treeopt
