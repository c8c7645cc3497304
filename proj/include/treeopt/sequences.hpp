#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "treeopt/graph.hpp"
#include "treeopt/linalg.hpp"

namespace treeopt {

enum class SequenceKind { Adjacency, Laplacian };

const char* to_string(SequenceKind kind);

/// Prefix tr(M^1..M^K) of the adjacency or Laplacian trace sequence.
struct TraceSequence {
  SequenceKind kind = SequenceKind::Laplacian;
  std::vector<BigInt> values;  ///< values[k-1] holds the k-th term

  int cutoff() const noexcept { return static_cast<int>(values.size()); }
  const BigInt& at(int k) const { return values.at(k - 1); }
};

/// g_k = l_k - sum_i d_i (d_i + 1)^{k-1}.
struct GapSequence {
  std::vector<BigInt> values;

  int cutoff() const noexcept { return static_cast<int>(values.size()); }
  const BigInt& at(int k) const { return values.at(k - 1); }
};

enum class Relation { Equal, Less, Greater };

const char* to_string(Relation r);

struct LexVerdict {
  Relation relation = Relation::Equal;
  std::optional<int> divergence_index;  ///< 1-based; empty when Equal
};

TraceSequence laplacian_sequence(const Graph& g, int K);
TraceSequence adjacency_sequence(const Graph& g, int K);
TraceSequence trace_sequence(const Graph& g, SequenceKind kind, int K);

/// sum_i d_i (d_i+1)^{k-1} for k = 1..K.
std::vector<BigInt> clique_baseline(const Graph& g, int K);

GapSequence gap_sequence(const Graph& g, int K);

/// Standard lexicographic order on equal-length prefixes.
LexVerdict lex_compare(const TraceSequence& s, const TraceSequence& t);

struct RunnerRecord {
  std::size_t index = 0;      ///< position in the input class
  Relation relation = Relation::Equal;  ///< member versus the minimum
  std::optional<int> divergence_index;
};

struct LexMinima {
  std::vector<std::size_t> indices;  ///< positions of the minima in the input
  std::vector<Graph> minima;
  std::vector<RunnerRecord> records;  ///< one per member, in input order
  std::vector<TraceSequence> sequences;  ///< length-cutoff prefixes, input order
  int cutoff = 0;
};

/// Members whose length-n trace prefix is lexicographically least; ties are
/// all returned. Sequence computation runs on `workers` threads.
LexMinima select_lex_minima(std::span<const Graph> cls, SequenceKind kind, int workers = 1);

struct MixedTraceCheck {
  BigInt lhs;
  BigInt rhs;
  bool equal = false;
};

/// tr(L^i ((d+1)I - J)^j) against (d+1)^j l_i for a d-regular graph.
MixedTraceCheck mixed_trace_identity_check(const Graph& g, int i, int j);

}  // namespace treeopt
