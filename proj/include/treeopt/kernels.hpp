#pragma once

#include <span>
#include <vector>

#include "treeopt/graph.hpp"
#include "treeopt/linalg.hpp"
#include "treeopt/sequences.hpp"

namespace treeopt {

/// Per-member class sweeps. The `_serial` variants are the reference
/// implementations; the others split members across OpenMP threads and must
/// return identical results for any worker count.
std::vector<TraceSequence> trace_sequences_serial(std::span<const Graph> cls, SequenceKind kind, int K);
std::vector<TraceSequence> trace_sequences(std::span<const Graph> cls, SequenceKind kind, int K, int workers);

std::vector<BigInt> tree_counts_serial(std::span<const Graph> cls);
std::vector<BigInt> tree_counts(std::span<const Graph> cls, int workers);

/// Effective worker count: at least one.
int clamp_workers(int workers);

}  // namespace treeopt
