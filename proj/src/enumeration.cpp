#include "treeopt/enumeration.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <exception>

#include "generator.hpp"
#include "treeopt/constructions.hpp"
#include "treeopt/counters.hpp"
#include "treeopt/errors.hpp"
#include "treeopt/graph6.hpp"
#include "treeopt/kernels.hpp"
#include "treeopt/sequences.hpp"

namespace treeopt {

namespace detail {

namespace {

constexpr std::size_t kFrontierWidth = 64;

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

int degree(const SmallGraph& g, int v) { return std::popcount(g.rows[v]); }

// Certificate bits are exactly the graph6 body of the canonical relabeling.
std::string code_from_certificate(int n, const Certificate& cert) {
  std::string out(1, static_cast<char>(63 + n));
  const int bits = n * (n - 1) / 2;
  for (int start = 0; start < bits; start += 6) {
    int value = 0;
    for (int t = start; t < start + 6; ++t) {
      value <<= 1;
      if (t < bits && ((cert[t / 64] >> (63 - t % 64)) & 1U)) value |= 1;
    }
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

}  // namespace

Generator::Generator(Mode mode, int n, int target) : mode_(mode), n_(n), target_(target) {}

bool Generator::feasible(const SmallGraph& g) const {
  const int k = g.n;
  const int remaining = n_ - k;
  if (mode_ == Mode::Regular) {
    const int d = target_;
    int deficit_sum = 0;
    for (int v = 0; v < k; ++v) {
      const int deficit = d - degree(g, v);
      if (deficit < 0 || deficit > remaining) return false;
      deficit_sum += deficit;
    }
    const int fresh = remaining * d - deficit_sum;  // degree left for new-new edges
    return fresh >= 0 && fresh % 2 == 0 && fresh <= remaining * (remaining - 1);
  }
  int edges = 0;
  for (int v = 0; v < k; ++v) edges += degree(g, v);
  edges /= 2;
  return edges <= target_ && target_ - edges <= remaining * (remaining - 1) / 2 + k * remaining;
}

std::vector<SmallGraph> Generator::children(const SmallGraph& g) const {
  const int k = g.n;
  const int after = n_ - k - 1;  // vertices still to come once the child exists
  std::uint64_t allowed = (k == 0) ? 0 : (bit(k) - 1);
  std::uint64_t forced = 0;
  int min_size = 0;
  int max_size = k;
  if (mode_ == Mode::Regular) {
    const int d = target_;
    allowed = 0;
    for (int v = 0; v < k; ++v) {
      const int deficit = d - degree(g, v);
      if (deficit > 0) allowed |= bit(v);
      if (deficit == after + 1) forced |= bit(v);
    }
    min_size = std::max(0, d - after);
    max_size = d;
  }

  std::vector<SmallGraph> out;
  std::vector<Certificate> seen;
  const std::uint64_t free = allowed & ~forced;
  for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
    const std::uint64_t s = sub | forced;
    const int size = std::popcount(s);
    if (size >= min_size && size <= max_size) {
      SmallGraph child = g;
      child.n = k + 1;
      child.rows[k] = s;
      for (std::uint64_t r = s; r; r &= r - 1) child.rows[std::countr_zero(r)] |= bit(k);
      if (feasible(child)) {
        int min_deg = child.n;
        for (int v = 0; v <= k; ++v) min_deg = std::min(min_deg, degree(child, v));
        if (degree(child, k) == min_deg) {
          const CanonResult canon = canonicalize(child);
          int chosen = -1;
          for (int v = 0; v <= k; ++v) {
            if (degree(child, v) == min_deg && (chosen < 0 || canon.label[v] < canon.label[chosen])) chosen = v;
          }
          bool accept = chosen == k;
          if (!accept) {
            std::array<int, kMaxCanon> ca{};
            std::array<int, kMaxCanon> cb{};
            std::fill(ca.begin(), ca.begin() + child.n, 1);
            std::fill(cb.begin(), cb.begin() + child.n, 1);
            ca[k] = 0;
            cb[chosen] = 0;
            accept = canonicalize(child, std::span<const int>(ca.data(), child.n)).cert ==
                     canonicalize(child, std::span<const int>(cb.data(), child.n)).cert;
          }
          if (accept && std::find(seen.begin(), seen.end(), canon.cert) == seen.end()) {
            seen.push_back(canon.cert);
            out.push_back(child);
          }
        }
      }
    }
    if (sub == 0) break;
  }
  return out;
}

std::vector<SmallGraph> Generator::frontier() const {
  SmallGraph root;
  root.n = 1;
  std::vector<SmallGraph> level;
  if (feasible(root)) level.push_back(root);
  while (!level.empty() && level.front().n < n_ && level.size() < kFrontierWidth) {
    std::vector<SmallGraph> next;
    for (const SmallGraph& g : level) {
      auto kids = children(g);
      next.insert(next.end(), kids.begin(), kids.end());
    }
    level = std::move(next);
  }
  return level;
}

std::string Generator::code_of(const SmallGraph& g) const {
  return code_from_certificate(g.n, canonicalize(g).cert);
}

void Generator::dfs(const SmallGraph& g, std::vector<std::string>& out) const {
  if (g.n == n_) {
    out.push_back(code_of(g));
    return;
  }
  for (const SmallGraph& child : children(g)) dfs(child, out);
}

std::vector<std::string> Generator::expand(const SmallGraph& node) const {
  std::vector<std::string> out;
  dfs(node, out);
  return out;
}

std::string ClassPlan::finish(const std::string& code) const {
  if (!complemented) return code;
  return canonical_form(complement(from_graph6(code))).code;
}

ClassPlan plan_for(const GraphClassSpec& spec) {
  ClassPlan plan;
  plan.spec = spec;
  const int n = spec.n;
  if (n < 1) throw ArgumentError("n must be positive");
  if (spec.kind == ClassKind::Regular) {
    if (spec.d < 0 || spec.d > n - 1) throw ArgumentError("d must lie in 0..n-1");
    if (n > spec.caps.regular_limit() || n > kMaxCanon) {
      throw CapsRefusal("regular enumeration for n = " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(spec.caps.regular_limit()) +
                        (spec.caps.override_caps ? "" : " (use --caps-override to raise it)"));
    }
    if ((n * spec.d) % 2 != 0) {
      plan.parity_warning = true;
      plan.empty = true;
      return plan;
    }
    plan.mode = Generator::Mode::Regular;
    plan.complemented = 2 * spec.d > n - 1;
    plan.target = plan.complemented ? n - 1 - spec.d : spec.d;
    return plan;
  }
  if (spec.kind != ClassKind::EdgeCount) throw ArgumentError("plan_for handles regular and edge-count classes");
  const int pairs = n * (n - 1) / 2;
  if (spec.m < 0 || spec.m > pairs) throw ArgumentError("m must lie in 0..n(n-1)/2");
  if (n > spec.caps.edge_limit()) {
    throw CapsRefusal("edge-count enumeration for n = " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(spec.caps.edge_limit()) +
                      (spec.caps.override_caps ? "" : " (use --caps-override to raise it)"));
  }
  plan.mode = Generator::Mode::Edges;
  plan.complemented = 2 * spec.m > pairs;
  plan.target = plan.complemented ? pairs - spec.m : spec.m;
  return plan;
}

}  // namespace detail

namespace {

std::vector<std::string> run_plan(const detail::ClassPlan& plan, int workers) {
  if (plan.empty) return {};
  const detail::Generator gen(plan.mode, plan.spec.n, plan.target);
  const std::vector<detail::SmallGraph> units = gen.frontier();
  std::vector<std::vector<std::string>> parts(units.size());
  std::exception_ptr failure;
  const long long count = static_cast<long long>(units.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(clamp_workers(workers))
  for (long long i = 0; i < count; ++i) {
    try {
      auto codes = gen.expand(units[i]);
      for (auto& c : codes) c = plan.finish(c);
      parts[i] = std::move(codes);
    } catch (...) {
#pragma omp critical(treeopt_enum_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<std::string> all;
  for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InternalFault("enumeration produced an isomorphism class twice");
  }
  return all;
}

IsoClassStream materialize(const GraphClassSpec& spec, const EnumOptions& opts) {
  const detail::ClassPlan plan = detail::plan_for(spec);
  IsoClassStream s;
  s.spec = spec;
  s.parity_warning = plan.parity_warning;
  s.codes = run_plan(plan, opts.workers);
  s.graphs.reserve(s.codes.size());
  for (const auto& c : s.codes) s.graphs.push_back(from_graph6(c));
  return s;
}

}  // namespace

IsoClassStream enumerate_regular(int n, int d, const EnumOptions& opts) {
  return materialize(GraphClassSpec::regular(n, d, opts.caps), opts);
}

IsoClassStream enumerate_by_edges(int n, int m, const EnumOptions& opts) {
  return materialize(GraphClassSpec::edge_count(n, m, opts.caps), opts);
}

std::vector<Graph> almost_regular_class(int n, int m, const EnumOptions& opts) {
  std::vector<Graph> out;
  for (Graph& g : enumerate_by_edges(n, m, opts).graphs) {
    if (degree_info(g).is_almost_regular) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> ladder_level(int n, int m, int k, const EnumOptions& opts) {
  if (k < 1) throw ArgumentError("ladder level must be >= 1");
  std::vector<Graph> level = enumerate_by_edges(n, m, opts).graphs;
  if (k == 1) return level;
  const std::vector<TraceSequence> seqs = trace_sequences(level, SequenceKind::Laplacian, k, opts.workers);
  std::vector<std::size_t> alive(level.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  for (int step = 2; step <= k; ++step) {
    const BigInt* best = nullptr;
    for (std::size_t i : alive) {
      if (!best || seqs[i].at(step) < *best) best = &seqs[i].at(step);
    }
    std::vector<std::size_t> next;
    for (std::size_t i : alive) {
      if (seqs[i].at(step) == *best) next.push_back(i);
    }
    alive = std::move(next);
  }
  std::vector<Graph> out;
  for (std::size_t i : alive) out.push_back(level[i]);
  return out;
}

std::vector<Graph> nu_min_set(int n, int m, const EnumOptions& opts) {
  std::vector<Graph> cls = almost_regular_class(n, m, opts);
  if (cls.empty()) throw InternalFault("almost-regular class is empty");
  std::uint64_t best = UINT64_MAX;
  for (const Graph& g : cls) best = std::min(best, count_induced_p3(g));
  std::vector<Graph> out;
  for (Graph& g : cls) {
    if (count_induced_p3(g) == best) out.push_back(std::move(g));
  }
  return out;
}

TauMin tau_min(int n, int d, const EnumOptions& opts) {
  TauMin out;
  const IsoClassStream cls = enumerate_regular(n, d, opts);
  if (cls.empty()) return out;
  std::uint64_t best = UINT64_MAX;
  for (const Graph& g : cls.graphs) best = std::min(best, count_triangles(g));
  out.value = best;
  for (const Graph& g : cls.graphs) {
    if (count_triangles(g) == best) out.witnesses.push_back(g);
  }
  return out;
}

std::vector<Graph> class_members(const GraphClassSpec& spec, int workers) {
  if (spec.kind != ClassKind::Regular) spec.validate();
  const EnumOptions opts{spec.caps, workers};
  switch (spec.kind) {
    case ClassKind::Regular: return enumerate_regular(spec.n, spec.d, opts).graphs;
    case ClassKind::EdgeCount: return enumerate_by_edges(spec.n, spec.m, opts).graphs;
    case ClassKind::AlmostRegular: return almost_regular_class(spec.n, spec.m, opts);
    case ClassKind::Ladder: return ladder_level(spec.n, spec.m, spec.k, opts);
  }
  return {};
}

}  // namespace treeopt
