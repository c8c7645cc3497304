#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <sstream>

#include "treeopt/canonical.hpp"
#include "treeopt/certify.hpp"
#include "treeopt/constructions.hpp"
#include "treeopt/counters.hpp"
#include "treeopt/enumeration.hpp"
#include "treeopt/kernels.hpp"

namespace treeopt {

namespace {

const char* regularity_of(const Graph& g) {
  const DegreeSequence ds = degree_info(g);
  if (ds.is_regular) return "regular";
  if (ds.is_almost_regular) return "almost-regular";
  return "irregular";
}

}  // namespace

ClassReport report_class(int n, int m, const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const IsoClassStream cls = enumerate_by_edges(n, m, {cfg.caps, cfg.workers});
  const std::vector<BigInt> counts = tree_counts(cls.graphs, cfg.workers);

  std::string h_code;
  if (n >= 5 && 2 * m == n * (n - 5)) h_code = canonical_form(h_family(n)).code;

  ClassReport report;
  report.n = n;
  report.m = m;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const Graph& g = cls.graphs[i];
    report.rows.push_back({cls.codes[i], counts[i], regularity_of(g), count_induced_p3(g), count_triangles(g),
                           !h_code.empty() && cls.codes[i] == h_code, 0});
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.t != b.t) return a.t > b.t;
    return a.code < b.code;
  });
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    ReportRow& r = report.rows[i];
    r.rank = i > 0 && report.rows[i - 1].t == r.t ? report.rows[i - 1].rank : i + 1;
    if (r.is_h_family) report.h_family_rank = r.rank;
  }
  if (h_code.empty()) {
    report.notes.push_back("m differs from n(n-5)/2; no H_n annotation");
  } else {
    report.notes.push_back("ranking only; optimality of H_n is guaranteed for large n, not asserted here");
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_structured(const ClassReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "report";
  j["n"] = report.n;
  j["m"] = report.m;
  j["class_size"] = std::to_string(report.rows.size());
  j["h_family_rank"] = report.h_family_rank ? nlohmann::ordered_json(std::to_string(*report.h_family_rank))
                                            : nlohmann::ordered_json(nullptr);
  auto rows = nlohmann::ordered_json::array();
  for (const ReportRow& r : report.rows) {
    rows.push_back({{"rank", std::to_string(r.rank)},
                    {"graph6", r.code},
                    {"t", r.t.get_str()},
                    {"regularity", r.regularity},
                    {"nu", std::to_string(r.nu)},
                    {"tau", std::to_string(r.tau)},
                    {"h_family", r.is_h_family}});
  }
  j["rows"] = rows;
  j["notes"] = report.notes;
  if (include_timing) {
    j["elapsed_ms"] = report.elapsed_ms;
    j["tool_version"] = report.tool_version;
  }
  return j.dump(2);
}

std::string to_text(const ClassReport& report) {
  std::ostringstream os;
  os << "S_{" << report.n << "," << report.m << "}: " << report.rows.size() << " classes\n";
  os << "rank  graph6          t  regularity      nu  tau\n";
  for (const ReportRow& r : report.rows) {
    os << r.rank << "  " << r.code << "  " << r.t.get_str() << "  " << r.regularity << "  " << r.nu << "  " << r.tau
       << (r.is_h_family ? "  <- H_n" : "") << "\n";
  }
  if (report.h_family_rank) os << "H_" << report.n << " rank: " << *report.h_family_rank << "\n";
  for (const auto& n : report.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace treeopt
