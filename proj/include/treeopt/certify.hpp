#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treeopt/graph.hpp"
#include "treeopt/linalg.hpp"

namespace treeopt {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

enum class Verdict { Verified, Refuted, Inconclusive };
enum class Method { Exhaustive, GirthCertificate };
enum class OutputFormat { Text, Structured };

const char* to_string(Verdict v);
const char* to_string(Method m);

/// One comparison between the candidate and another class member.
/// Values are decimal strings.
struct Witness {
  std::string opponent;  ///< canonical graph6
  std::optional<int> divergence_index;
  std::string quantity;  ///< "a_k", "l_k", "cyc", "girth", "t", ...
  std::string candidate_value;
  std::string opponent_value;
};

struct Certificate {
  std::string command;
  GraphClassSpec class_spec;
  std::string candidate;  ///< canonical graph6; empty for class-level checks
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> winners;
  std::vector<Witness> witnesses;
  Method method = Method::Exhaustive;
  std::size_t class_size = 0;
  std::optional<bool> unique;
  std::vector<std::string> notes;
  double elapsed_ms = 0;
  std::string tool_version = kToolVersion;
};

struct RunConfig {
  int workers = 1;
  Caps caps{};
  std::string output_path;
  OutputFormat format = OutputFormat::Text;
};

/// Adjacency trace-minimality of `candidate` within R_d(n). Tries the girth
/// certificate first and falls back to exhaustive comparison.
Certificate verify_trace_minimal(const Graph& candidate, int n, int d, const RunConfig& cfg);

/// Laplacian trace-minimality within R_d(n), exhaustive.
Certificate verify_l_trace_minimal(const Graph& candidate, int n, int d, const RunConfig& cfg);

/// Maximum spanning-tree count within S_{n,m}. Ties are listed as winners
/// and `unique` is reported separately.
Certificate verify_t_optimal(const Graph& candidate, int n, int m, const RunConfig& cfg);

/// L-trace-minimal set of R_d(n) against the complements of the
/// trace-minimal set of R_{n-1-d}(n), up to isomorphism.
Certificate check_duality(int n, int d, const RunConfig& cfg);

/// Self-describing JSON object; integers as decimal strings.
std::string to_structured(const Certificate& cert, bool include_timing = true);
std::string to_text(const Certificate& cert);

/// 0 verified, 1 refuted or inconclusive.
int exit_code(Verdict v);

/// "n=.. m=.. degrees=[lo,hi] girth=.." for constructed graphs.
std::string summarize(const Graph& g);

struct ReportRow {
  std::string code;
  BigInt t;
  std::string regularity;  ///< "regular", "almost-regular" or "irregular"
  std::uint64_t nu = 0;
  std::uint64_t tau = 0;
  bool is_h_family = false;
  std::size_t rank = 0;  ///< 1 + number of members with larger t
};

/// All of S_{n,m} ranked by exact spanning-tree count, descending; ties by
/// canonical code.
struct ClassReport {
  int n = 0;
  int m = 0;
  std::vector<ReportRow> rows;
  std::optional<std::size_t> h_family_rank;
  std::vector<std::string> notes;
  double elapsed_ms = 0;
  std::string tool_version = kToolVersion;
};

ClassReport report_class(int n, int m, const RunConfig& cfg);
std::string to_structured(const ClassReport& report, bool include_timing = true);
std::string to_text(const ClassReport& report);

}  // namespace treeopt
