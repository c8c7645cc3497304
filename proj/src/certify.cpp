#include "treeopt/certify.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <sstream>

#include "treeopt/bounds.hpp"
#include "treeopt/canonical.hpp"
#include "treeopt/constructions.hpp"
#include "treeopt/counters.hpp"
#include "treeopt/enumeration.hpp"
#include "treeopt/errors.hpp"
#include "treeopt/kernels.hpp"
#include "treeopt/sequences.hpp"

namespace treeopt {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_regular_member(const Graph& g, int n, int d) {
  if (g.order() != n) {
    throw ArgumentError("candidate has " + std::to_string(g.order()) + " vertices, expected " + std::to_string(n));
  }
  const DegreeSequence ds = degree_info(g);
  if (!ds.is_regular || ds.max_degree != d) {
    throw ArgumentError("candidate is not " + std::to_string(d) + "-regular");
  }
}

std::size_t index_of(const std::vector<std::string>& codes, const std::string& code) {
  const auto it = std::lower_bound(codes.begin(), codes.end(), code);
  if (it == codes.end() || *it != code) throw InternalFault("candidate missing from its enumerated class");
  return static_cast<std::size_t>(it - codes.begin());
}

Certificate lex_certificate(const char* command, const Graph& candidate, int n, int d, SequenceKind kind,
                            bool try_girth, const RunConfig& cfg) {
  const auto start = Clock::now();
  require_regular_member(candidate, n, d);
  Certificate cert;
  cert.command = command;
  cert.class_spec = GraphClassSpec::regular(n, d, cfg.caps);
  cert.candidate = canonical_form(candidate).code;

  const IsoClassStream cls = enumerate_regular(n, d, {cfg.caps, cfg.workers});
  cert.class_size = cls.size();
  const std::size_t me = index_of(cls.codes, cert.candidate);

  if (try_girth) {
    const GirthCertificate gc = girth_certificate(cls.graphs[me], cls.graphs);
    if (gc.verdict != GirthVerdict::Inconclusive) {
      cert.verdict = Verdict::Verified;
      cert.method = Method::GirthCertificate;
      cert.winners = {cert.candidate};
      auto girth_text = [](std::optional<int> g) { return g ? std::to_string(*g) : std::string("inf"); };
      if (gc.verdict == GirthVerdict::CertifiedUnique) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
          if (i == me) continue;
          cert.witnesses.push_back({cls.codes[i], std::nullopt, "girth", girth_text(gc.girth),
                                    girth_text(girth(cls.graphs[i]))});
        }
        cert.notes.push_back("unique member of maximum girth");
      } else {
        for (const CycleComparison& c : gc.comparisons) {
          cert.witnesses.push_back({cls.codes[c.opponent], c.length, "cyc", std::to_string(c.candidate_count),
                                    std::to_string(c.opponent_count)});
        }
        cert.notes.push_back("maximum girth; first differing cycle count favours the candidate against every member");
      }
      cert.elapsed_ms = since(start);
      return cert;
    }
  }

  const LexMinima minima = select_lex_minima(cls.graphs, kind, cfg.workers);
  cert.method = Method::Exhaustive;
  for (std::size_t i : minima.indices) cert.winners.push_back(cls.codes[i]);
  const bool winner = std::binary_search(cert.winners.begin(), cert.winners.end(), cert.candidate);
  cert.verdict = winner ? Verdict::Verified : Verdict::Refuted;
  const std::string quantity = kind == SequenceKind::Adjacency ? "a_k" : "l_k";
  const TraceSequence& mine = minima.sequences[me];
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (i == me) continue;
    const LexVerdict v = lex_compare(mine, minima.sequences[i]);
    if (!winner && v.relation != Relation::Greater) continue;
    Witness w{cls.codes[i], v.divergence_index, quantity, "", ""};
    if (v.divergence_index) {
      w.candidate_value = mine.at(*v.divergence_index).get_str();
      w.opponent_value = minima.sequences[i].at(*v.divergence_index).get_str();
    }
    cert.witnesses.push_back(std::move(w));
  }
  cert.notes.push_back("sequence prefixes compared up to k = n");
  cert.elapsed_ms = since(start);
  return cert;
}

json to_json(const Certificate& c, bool include_timing) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = c.command;
  j["class_spec"] = {{"kind", to_string(c.class_spec.kind)},
                     {"name", c.class_spec.describe()},
                     {"n", c.class_spec.n},
                     {"d", c.class_spec.d},
                     {"m", c.class_spec.m},
                     {"caps",
                      {{"max_regular_n", c.class_spec.caps.regular_limit()},
                       {"max_edge_sweep_n", c.class_spec.caps.edge_limit()},
                       {"override", c.class_spec.caps.override_caps}}}};
  j["candidate"] = c.candidate.empty() ? json(nullptr) : json(c.candidate);
  j["verdict"] = to_string(c.verdict);
  j["method"] = to_string(c.method);
  j["class_size"] = std::to_string(c.class_size);
  j["winners"] = c.winners;
  if (c.unique) j["unique"] = *c.unique;
  json ws = json::array();
  for (const Witness& w : c.witnesses) {
    ws.push_back({{"opponent", w.opponent},
                  {"quantity", w.quantity},
                  {"divergence_index", w.divergence_index ? json(*w.divergence_index) : json(nullptr)},
                  {"candidate_value", w.candidate_value},
                  {"opponent_value", w.opponent_value}});
  }
  j["witnesses"] = ws;
  j["notes"] = c.notes;
  if (include_timing) {
    j["elapsed_ms"] = c.elapsed_ms;
    j["tool_version"] = c.tool_version;
  }
  return j;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "VERIFIED";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

const char* to_string(Method m) { return m == Method::Exhaustive ? "EXHAUSTIVE" : "GIRTH_CERTIFICATE"; }

Certificate verify_trace_minimal(const Graph& candidate, int n, int d, const RunConfig& cfg) {
  return lex_certificate("verify trace-min", candidate, n, d, SequenceKind::Adjacency, true, cfg);
}

Certificate verify_l_trace_minimal(const Graph& candidate, int n, int d, const RunConfig& cfg) {
  return lex_certificate("verify ltrace-min", candidate, n, d, SequenceKind::Laplacian, false, cfg);
}

Certificate verify_t_optimal(const Graph& candidate, int n, int m, const RunConfig& cfg) {
  const auto start = Clock::now();
  if (candidate.order() != n || candidate.edge_count() != m) {
    throw ArgumentError("candidate is not in S_{" + std::to_string(n) + "," + std::to_string(m) + "}");
  }
  Certificate cert;
  cert.command = "verify t-optimal";
  cert.class_spec = GraphClassSpec::edge_count(n, m, cfg.caps);
  cert.candidate = canonical_form(candidate).code;
  cert.method = Method::Exhaustive;

  const IsoClassStream cls = enumerate_by_edges(n, m, {cfg.caps, cfg.workers});
  cert.class_size = cls.size();
  const std::size_t me = index_of(cls.codes, cert.candidate);
  const std::vector<BigInt> counts = tree_counts(cls.graphs, cfg.workers);
  const BigInt best = *std::max_element(counts.begin(), counts.end());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (counts[i] == best) cert.winners.push_back(cls.codes[i]);
  }
  cert.unique = cert.winners.size() == 1;
  cert.verdict = counts[me] == best ? Verdict::Verified : Verdict::Refuted;

  // Refutations cite every maximizer; verifications cite the runners-up.
  BigInt cited = best;
  if (cert.verdict == Verdict::Verified) {
    bool any = false;
    for (const BigInt& t : counts) {
      if (t < best && (!any || t > cited)) {
        cited = t;
        any = true;
      }
    }
    if (!any) cited = -1;
  }
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (i != me && counts[i] == cited) {
      cert.witnesses.push_back({cls.codes[i], std::nullopt, "t", counts[me].get_str(), counts[i].get_str()});
    }
  }
  cert.notes.push_back("t-optimality is taken over all of S_{n,m}, connected or not; ties are listed as winners");
  cert.notes.push_back("t(candidate) = " + counts[me].get_str());
  cert.elapsed_ms = since(start);
  return cert;
}

Certificate check_duality(int n, int d, const RunConfig& cfg) {
  const auto start = Clock::now();
  Certificate cert;
  cert.command = "duality";
  cert.class_spec = GraphClassSpec::regular(n, d, cfg.caps);
  cert.method = Method::Exhaustive;
  if (n < 1 || d < 0 || d > n - 1) throw ArgumentError("duality needs 0 <= d <= n-1");

  const EnumOptions opts{cfg.caps, cfg.workers};
  const IsoClassStream lap_class = enumerate_regular(n, d, opts);
  const IsoClassStream adj_class = enumerate_regular(n, n - 1 - d, opts);
  cert.class_size = lap_class.size();
  if (lap_class.empty()) {
    cert.verdict = adj_class.empty() ? Verdict::Verified : Verdict::Refuted;
    cert.notes.push_back("empty class; the duality holds vacuously");
    cert.elapsed_ms = since(start);
    return cert;
  }

  const LexMinima l_min = select_lex_minima(lap_class.graphs, SequenceKind::Laplacian, cfg.workers);
  const LexMinima a_min = select_lex_minima(adj_class.graphs, SequenceKind::Adjacency, cfg.workers);
  std::vector<std::string> l_set;
  for (std::size_t i : l_min.indices) l_set.push_back(lap_class.codes[i]);
  std::vector<std::string> image;
  for (const Graph& g : a_min.minima) image.push_back(canonical_form(complement(g)).code);
  std::sort(l_set.begin(), l_set.end());
  std::sort(image.begin(), image.end());

  cert.winners = l_set;
  cert.verdict = l_set == image ? Verdict::Verified : Verdict::Refuted;
  std::vector<std::string> only_l;
  std::vector<std::string> only_image;
  std::set_difference(l_set.begin(), l_set.end(), image.begin(), image.end(), std::back_inserter(only_l));
  std::set_difference(image.begin(), image.end(), l_set.begin(), l_set.end(), std::back_inserter(only_image));
  for (const auto& c : only_l) cert.witnesses.push_back({c, std::nullopt, "l-trace-minimal only", "", ""});
  for (const auto& c : only_image) {
    cert.witnesses.push_back({c, std::nullopt, "complement of trace-minimal only", "", ""});
  }
  cert.notes.push_back("L-trace-minimal set of " + cert.class_spec.describe() +
                       " compared with complements of the trace-minimal set of R_" + std::to_string(n - 1 - d) +
                       "(" + std::to_string(n) + ")");
  cert.elapsed_ms = since(start);
  return cert;
}

std::string to_structured(const Certificate& cert, bool include_timing) {
  return to_json(cert, include_timing).dump(2);
}

std::string to_text(const Certificate& c) {
  std::ostringstream os;
  os << c.command << " " << c.class_spec.describe() << ": " << to_string(c.verdict) << " (" << to_string(c.method)
     << ", class size " << c.class_size << ")\n";
  if (!c.candidate.empty()) os << "candidate: " << c.candidate << "\n";
  if (c.unique) os << "unique: " << (*c.unique ? "yes" : "no") << "\n";
  os << "winners:";
  for (const auto& w : c.winners) os << " " << w;
  os << "\n";
  for (const Witness& w : c.witnesses) {
    os << "  vs " << w.opponent << " [" << w.quantity;
    if (w.divergence_index) os << " @" << *w.divergence_index;
    os << "]";
    if (!w.candidate_value.empty()) os << " candidate=" << w.candidate_value << " opponent=" << w.opponent_value;
    os << "\n";
  }
  for (const auto& n : c.notes) os << "note: " << n << "\n";
  os << "elapsed: " << c.elapsed_ms << " ms\n";
  return os.str();
}

int exit_code(Verdict v) { return v == Verdict::Verified ? 0 : 1; }

std::string summarize(const Graph& g) {
  const DegreeSequence ds = degree_info(g);
  const auto gi = girth(g);
  std::ostringstream os;
  os << "n=" << g.order() << " m=" << g.edge_count() << " degrees=[" << ds.min_degree << "," << ds.max_degree
     << "] girth=" << (gi ? std::to_string(*gi) : std::string("inf"));
  return os.str();
}

}  // namespace treeopt
