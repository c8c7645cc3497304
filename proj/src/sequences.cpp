#include "treeopt/sequences.hpp"

#include <algorithm>

#include "treeopt/errors.hpp"
#include "treeopt/kernels.hpp"

namespace treeopt {

const char* to_string(SequenceKind kind) {
  return kind == SequenceKind::Adjacency ? "ADJACENCY" : "LAPLACIAN";
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::Equal: return "EQUAL";
    case Relation::Less: return "LESS";
    case Relation::Greater: return "GREATER";
  }
  return "?";
}

TraceSequence laplacian_sequence(const Graph& g, int K) {
  return {SequenceKind::Laplacian, trace_powers(laplacian(g), K)};
}

TraceSequence adjacency_sequence(const Graph& g, int K) {
  return {SequenceKind::Adjacency, trace_powers(adjacency_matrix(g), K)};
}

TraceSequence trace_sequence(const Graph& g, SequenceKind kind, int K) {
  return kind == SequenceKind::Adjacency ? adjacency_sequence(g, K) : laplacian_sequence(g, K);
}

std::vector<BigInt> clique_baseline(const Graph& g, int K) {
  std::vector<BigInt> base(K);
  for (int d : g.degrees()) {
    BigInt term = d;  // d (d+1)^{k-1}
    for (int k = 1; k <= K; ++k) {
      base[k - 1] += term;
      term *= d + 1;
    }
  }
  return base;
}

GapSequence gap_sequence(const Graph& g, int K) {
  const TraceSequence l = laplacian_sequence(g, K);
  const std::vector<BigInt> base = clique_baseline(g, K);
  GapSequence out;
  out.values.resize(K);
  for (int k = 0; k < K; ++k) out.values[k] = l.values[k] - base[k];
  for (int k = 0; k < std::min(K, 2); ++k) {
    if (sgn(out.values[k]) != 0) throw InternalFault("gap sequence has nonzero g_1 or g_2");
  }
  return out;
}

LexVerdict lex_compare(const TraceSequence& s, const TraceSequence& t) {
  if (s.kind != t.kind) throw ArgumentError("cannot compare adjacency and Laplacian sequences");
  if (s.cutoff() != t.cutoff()) throw ArgumentError("sequence cutoffs differ");
  for (int k = 0; k < s.cutoff(); ++k) {
    const int c = cmp(s.values[k], t.values[k]);
    if (c != 0) return {c < 0 ? Relation::Less : Relation::Greater, k + 1};
  }
  return {Relation::Equal, std::nullopt};
}

LexMinima select_lex_minima(std::span<const Graph> cls, SequenceKind kind, int workers) {
  if (cls.empty()) throw ArgumentError("select_lex_minima on an empty class");
  const int n = cls.front().order();
  for (const Graph& g : cls) {
    if (g.order() != n) throw ArgumentError("class members differ in vertex count");
  }
  std::vector<TraceSequence> seqs = trace_sequences(cls, kind, n, workers);

  std::size_t best = 0;
  for (std::size_t i = 1; i < seqs.size(); ++i) {
    if (lex_compare(seqs[i], seqs[best]).relation == Relation::Less) best = i;
  }
  LexMinima out;
  out.cutoff = n;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    const LexVerdict v = lex_compare(seqs[i], seqs[best]);
    out.records.push_back({i, v.relation, v.divergence_index});
    if (v.relation == Relation::Equal) {
      out.indices.push_back(i);
      out.minima.push_back(cls[i]);
    }
  }
  out.sequences = std::move(seqs);
  return out;
}

MixedTraceCheck mixed_trace_identity_check(const Graph& g, int i, int j) {
  if (i < 1 || j < 1) throw ArgumentError("mixed trace identity needs i, j >= 1");
  const DegreeSequence ds = degree_info(g);
  if (!ds.is_regular) throw ArgumentError("mixed trace identity needs a regular graph");
  const int n = g.order();
  const BigInt d1 = ds.max_degree + 1;
  const IntMatrix lap = laplacian(g);
  const IntMatrix shift = d1 * IntMatrix::identity(n) - IntMatrix::all_ones(n);

  IntMatrix left = lap;
  for (int r = 1; r < i; ++r) left = left * lap;
  IntMatrix right = shift;
  for (int r = 1; r < j; ++r) right = right * shift;

  MixedTraceCheck out;
  out.lhs = trace_of_product(left, right);
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), d1.get_mpz_t(), j);
  out.rhs = scale * left.trace();
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace treeopt
