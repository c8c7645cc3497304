#include "treeopt/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "canon_detail.hpp"
#include "treeopt/constructions.hpp"
#include "treeopt/errors.hpp"
#include "treeopt/graph6.hpp"

namespace treeopt {

namespace detail {

namespace {

using Labeling = std::array<int, kMaxCanon>;

// Ordered partition of the vertex set; each cell is a bit mask.
struct Partition {
  int cells = 0;
  std::array<std::uint64_t, kMaxCanon> cell{};

  bool discrete(int n) const { return cells == n; }

  void insert(int at, std::uint64_t mask) {
    for (int i = cells; i > at; --i) cell[i] = cell[i - 1];
    cell[at] = mask;
    ++cells;
  }
};

// Equitable refinement: split every cell by neighbour counts into every
// other cell until stable. Fragments are ordered by ascending count.
void refine(const SmallGraph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.cells && !changed; ++s) {
      const std::uint64_t splitter = p.cell[s];
      for (int x = 0; x < p.cells; ++x) {
        const std::uint64_t target = p.cell[x];
        if (std::popcount(target) < 2) continue;
        std::array<std::uint64_t, kMaxCanon + 1> by_count{};
        int lo = kMaxCanon + 1;
        int hi = -1;
        for (std::uint64_t r = target; r; r &= r - 1) {
          const int v = std::countr_zero(r);
          const int c = std::popcount(g.rows[v] & splitter);
          by_count[c] |= std::uint64_t{1} << v;
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) continue;
        int at = x;
        bool first = true;
        for (int c = lo; c <= hi; ++c) {
          if (!by_count[c]) continue;
          if (first) {
            p.cell[at] = by_count[c];
            first = false;
          } else {
            p.insert(++at, by_count[c]);
          }
        }
        changed = true;
        break;
      }
    }
  }
}

Certificate certificate_of(const SmallGraph& g, const Labeling& label) {
  const SmallGraph h = apply_labeling(g, label);
  Certificate cert{};
  int t = 0;
  for (int j = 1; j < h.n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      if ((h.rows[i] >> j) & 1U) cert[t / 64] |= std::uint64_t{1} << (63 - t % 64);
    }
  }
  return cert;
}

class Search {
 public:
  explicit Search(const SmallGraph& g) : g_(g) {}

  CanonResult run(Partition p) {
    std::array<int, kMaxCanon> path{};
    descend(p, path, 0);
    return {best_label_, best_cert_};
  }

 private:
  void leaf(const Partition& p) {
    Labeling label{};
    for (int i = 0; i < p.cells; ++i) label[std::countr_zero(p.cell[i])] = i;
    const Certificate cert = certificate_of(g_, label);
    if (!have_first_) {
      have_first_ = true;
      first_label_ = best_label_ = label;
      first_cert_ = best_cert_ = cert;
      return;
    }
    if (cert == first_cert_) record_automorphism(first_label_, label);
    if (cert == best_cert_) {
      record_automorphism(best_label_, label);
    } else if (cert < best_cert_) {
      best_cert_ = cert;
      best_label_ = label;
    }
  }

  // Both labelings produce the same graph, so v -> ref^{-1}(cur(v)) is an
  // automorphism.
  void record_automorphism(const Labeling& ref, const Labeling& cur) {
    Labeling inverse{};
    for (int v = 0; v < g_.n; ++v) inverse[ref[v]] = v;
    Labeling gamma{};
    bool identity = true;
    for (int v = 0; v < g_.n; ++v) {
      gamma[v] = inverse[cur[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) generators_.push_back(gamma);
  }

  int find(std::array<int, kMaxCanon>& parent, int v) const {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  // Orbit representatives under the stored automorphisms fixing path[0..depth).
  std::array<int, kMaxCanon> orbits(const std::array<int, kMaxCanon>& path, int depth) {
    std::array<int, kMaxCanon> parent{};
    std::iota(parent.begin(), parent.begin() + g_.n, 0);
    for (const Labeling& gamma : generators_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = gamma[path[i]] == path[i];
      if (!fixes) continue;
      for (int v = 0; v < g_.n; ++v) {
        const int a = find(parent, v);
        const int b = find(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < g_.n; ++v) parent[v] = find(parent, v);
    return parent;
  }

  void descend(Partition p, std::array<int, kMaxCanon>& path, int depth) {
    refine(g_, p);
    if (p.discrete(g_.n)) {
      leaf(p);
      return;
    }
    int target = 0;
    while (std::popcount(p.cell[target]) < 2) ++target;
    const std::uint64_t members = p.cell[target];
    std::uint64_t explored = 0;
    for (std::uint64_t r = members; r; r &= r - 1) {
      const int w = std::countr_zero(r);
      if (explored) {
        const auto orbit = orbits(path, depth);
        bool redundant = false;
        for (std::uint64_t e = explored; e && !redundant; e &= e - 1) {
          redundant = orbit[std::countr_zero(e)] == orbit[w];
        }
        if (redundant) continue;
      }
      explored |= std::uint64_t{1} << w;
      Partition child = p;
      child.cell[target] = members & ~(std::uint64_t{1} << w);
      child.insert(target, std::uint64_t{1} << w);
      path[depth] = w;
      descend(child, path, depth + 1);
    }
  }

  const SmallGraph& g_;
  bool have_first_ = false;
  Labeling first_label_{};
  Labeling best_label_{};
  Certificate first_cert_{};
  Certificate best_cert_{};
  std::vector<Labeling> generators_;
};

}  // namespace

SmallGraph apply_labeling(const SmallGraph& g, const std::array<int, kMaxCanon>& label) {
  SmallGraph h;
  h.n = g.n;
  for (int v = 0; v < g.n; ++v) {
    std::uint64_t r = 0;
    for (std::uint64_t x = g.rows[v]; x; x &= x - 1) r |= std::uint64_t{1} << label[std::countr_zero(x)];
    h.rows[label[v]] = r;
  }
  return h;
}

CanonResult canonicalize(const SmallGraph& g, std::span<const int> colors) {
  Partition p;
  if (colors.empty()) {
    p.cells = 1;
    p.cell[0] = g.n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
  } else {
    std::vector<int> values(colors.begin(), colors.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int c : values) {
      std::uint64_t mask = 0;
      for (int v = 0; v < g.n; ++v) {
        if (colors[v] == c) mask |= std::uint64_t{1} << v;
      }
      p.cell[p.cells++] = mask;
    }
  }
  return Search(g).run(p);
}

}  // namespace detail

namespace {

detail::SmallGraph to_small(const Graph& g) {
  if (g.order() > kCanonicalMaxVertices) {
    throw UnsupportedSize("canonical form supports at most " + std::to_string(kCanonicalMaxVertices) +
                          " vertices");
  }
  detail::SmallGraph s;
  s.n = g.order();
  for (int v = 0; v < s.n; ++v) s.rows[v] = g.row(v);
  return s;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, std::span<const int> colors) {
  if (!colors.empty() && static_cast<int>(colors.size()) != g.order()) {
    throw ArgumentError("one color per vertex required");
  }
  const detail::CanonResult r = detail::canonicalize(to_small(g), colors);
  return {r.label.begin(), r.label.begin() + g.order()};
}

Graph canonical_graph(const Graph& g) {
  const auto label = canonical_labeling(g);
  return relabel(g, label);
}

CanonicalForm canonical_form(const Graph& g) { return {to_graph6(canonical_graph(g))}; }

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g) == canonical_form(h);
}

bool same_orbit(const Graph& g, int u, int v) {
  if (u == v) return true;
  if (g.degree(u) != g.degree(v)) return false;
  const detail::SmallGraph s = to_small(g);
  std::vector<int> cu(g.order(), 1);
  std::vector<int> cv(g.order(), 1);
  cu[u] = 0;
  cv[v] = 0;
  return detail::canonicalize(s, cu).cert == detail::canonicalize(s, cv).cert;
}

}  // namespace treeopt
