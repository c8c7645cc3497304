#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace treeopt {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, stored as one 64-bit
/// adjacency row per vertex. Values are immutable once built.
class Graph {
 public:
  static constexpr int kMaxVertices = 62;

  /// Edgeless graph on n vertices.
  explicit Graph(int n = 1);

  /// Validates symmetry, zero diagonal and row width.
  static Graph from_rows(std::vector<std::uint64_t> rows);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  int edge_count() const noexcept { return edges_; }
  bool has_edge(int i, int j) const noexcept { return (rows_[i] >> j) & 1U; }
  std::uint64_t row(int i) const noexcept { return rows_[i]; }
  std::span<const std::uint64_t> rows() const noexcept { return rows_; }
  int degree(int i) const noexcept;
  std::vector<int> degrees() const;
  std::vector<Edge> edges() const;

  /// Mask with the low n bits set.
  std::uint64_t vertex_mask() const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> rows_;
  int edges_ = 0;
};

/// Mutable staging area for building a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  GraphBuilder& add_edge(int i, int j);
  int order() const noexcept { return static_cast<int>(rows_.size()); }
  bool has_edge(int i, int j) const noexcept { return (rows_[i] >> j) & 1U; }
  Graph build() const { return Graph::from_rows(rows_); }

 private:
  std::vector<std::uint64_t> rows_;
};

struct DegreeSequence {
  std::vector<int> degrees;
  int min_degree = 0;
  int max_degree = 0;
  bool is_regular = true;
  bool is_almost_regular = true;
};

DegreeSequence degree_info(const Graph& g);

enum class ClassKind { Regular, EdgeCount, AlmostRegular, Ladder };

/// Enumeration limits. The defaults keep desk-scale sweeps in minutes;
/// `override_caps` lifts them to the hard ceilings.
struct Caps {
  int max_regular_n = 10;
  int max_edge_sweep_n = 8;
  bool override_caps = false;

  static constexpr int kRegularCeiling = 12;
  static constexpr int kEdgeSweepCeiling = 9;

  int regular_limit() const noexcept { return override_caps ? kRegularCeiling : max_regular_n; }
  int edge_limit() const noexcept { return override_caps ? kEdgeSweepCeiling : max_edge_sweep_n; }
};

/// Description of a finite class of graphs: R_d(n), S_{n,m}, A_{n,m} or a
/// level of the Laplacian refinement ladder.
struct GraphClassSpec {
  ClassKind kind = ClassKind::EdgeCount;
  int n = 0;
  int d = 0;
  int m = 0;
  int k = 1;
  Caps caps{};

  static GraphClassSpec regular(int n, int d, Caps caps = {});
  static GraphClassSpec edge_count(int n, int m, Caps caps = {});
  static GraphClassSpec almost_regular(int n, int m, Caps caps = {});
  static GraphClassSpec ladder(int n, int m, int k, Caps caps = {});

  /// Throws ArgumentError when the parameters violate the class invariants.
  void validate() const;
  std::string describe() const;
};

const char* to_string(ClassKind kind);

}  // namespace treeopt
