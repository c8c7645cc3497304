#include "treeopt/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "treeopt/errors.hpp"

namespace treeopt {

namespace {

void check_order(int n) {
  if (n < 1 || n > Graph::kMaxVertices) {
    throw UnsupportedSize("graph order " + std::to_string(n) + " outside 1.." +
                          std::to_string(Graph::kMaxVertices));
  }
}

std::uint64_t low_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  rows_.assign(n, 0);
}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const std::uint64_t mask = low_mask(n);
  int degree_sum = 0;
  for (int i = 0; i < n; ++i) {
    if (rows[i] & ~mask) throw ArgumentError("adjacency row " + std::to_string(i) + " has bits beyond n");
    if ((rows[i] >> i) & 1U) throw ArgumentError("loop at vertex " + std::to_string(i));
    for (std::uint64_t r = rows[i]; r; r &= r - 1) {
      const int j = std::countr_zero(r);
      if (!((rows[j] >> i) & 1U)) {
        throw ArgumentError("asymmetric adjacency between " + std::to_string(i) + " and " +
                            std::to_string(j));
      }
    }
    degree_sum += std::popcount(rows[i]);
  }
  Graph g(n);
  g.rows_ = std::move(rows);
  g.edges_ = degree_sum / 2;
  return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

int Graph::degree(int i) const noexcept { return std::popcount(rows_[i]); }

std::vector<int> Graph::degrees() const {
  std::vector<int> d(rows_.size());
  for (int i = 0; i < order(); ++i) d[i] = degree(i);
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (int j = 1; j < order(); ++j) {
    for (int i = 0; i < j; ++i) {
      if (has_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::uint64_t Graph::vertex_mask() const noexcept { return low_mask(order()); }

GraphBuilder::GraphBuilder(int n) {
  check_order(n);
  rows_.assign(n, 0);
}

GraphBuilder& GraphBuilder::add_edge(int i, int j) {
  const int n = order();
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw ArgumentError("edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  if (i == j) throw ArgumentError("loop at vertex " + std::to_string(i));
  rows_[i] |= std::uint64_t{1} << j;
  rows_[j] |= std::uint64_t{1} << i;
  return *this;
}

DegreeSequence degree_info(const Graph& g) {
  DegreeSequence s;
  s.degrees = g.degrees();
  auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
  s.min_degree = *lo;
  s.max_degree = *hi;
  s.is_regular = s.min_degree == s.max_degree;
  s.is_almost_regular = s.max_degree - s.min_degree <= 1;
  return s;
}

const char* to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::Regular: return "REGULAR";
    case ClassKind::EdgeCount: return "EDGECOUNT";
    case ClassKind::AlmostRegular: return "ALMOST_REGULAR";
    case ClassKind::Ladder: return "LADDER";
  }
  return "?";
}

GraphClassSpec GraphClassSpec::regular(int n, int d, Caps caps) {
  GraphClassSpec s{ClassKind::Regular, n, d, 0, 1, caps};
  if (n >= 1 && d >= 0) s.m = n * d / 2;
  return s;
}

GraphClassSpec GraphClassSpec::edge_count(int n, int m, Caps caps) {
  return {ClassKind::EdgeCount, n, 0, m, 1, caps};
}

GraphClassSpec GraphClassSpec::almost_regular(int n, int m, Caps caps) {
  return {ClassKind::AlmostRegular, n, 0, m, 2, caps};
}

GraphClassSpec GraphClassSpec::ladder(int n, int m, int k, Caps caps) {
  return {ClassKind::Ladder, n, 0, m, k, caps};
}

void GraphClassSpec::validate() const {
  if (n < 1 || n > Graph::kMaxVertices) throw ArgumentError("n must lie in 1..62");
  switch (kind) {
    case ClassKind::Regular:
      if (d < 0 || d > n - 1) throw ArgumentError("d must lie in 0..n-1");
      if ((n * d) % 2 != 0) throw ArgumentError("n*d must be even");
      break;
    case ClassKind::Ladder:
      if (k < 1) throw ArgumentError("ladder level must be >= 1");
      [[fallthrough]];
    case ClassKind::EdgeCount:
    case ClassKind::AlmostRegular:
      if (m < 0 || m > n * (n - 1) / 2) throw ArgumentError("m must lie in 0..n(n-1)/2");
      break;
  }
}

std::string GraphClassSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case ClassKind::Regular: os << "R_" << d << "(" << n << ")"; break;
    case ClassKind::EdgeCount: os << "S_{" << n << "," << m << "}"; break;
    case ClassKind::AlmostRegular: os << "A_{" << n << "," << m << "}"; break;
    case ClassKind::Ladder: os << "S^(" << k << ")_{" << n << "," << m << "}"; break;
  }
  return os.str();
}

}  // namespace treeopt
