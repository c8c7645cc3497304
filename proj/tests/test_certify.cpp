#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>

#include "oracles.hpp"
#include "treeopt/canonical.hpp"
#include "treeopt/certify.hpp"
#include "treeopt/constructions.hpp"
#include "treeopt/enumeration.hpp"
#include "treeopt/errors.hpp"

using namespace treeopt;
using json = nlohmann::json;

namespace {

Graph two_triangles() { return disjoint_union(cycle_graph(3), cycle_graph(3)); }
std::string code(const Graph& g) { return canonical_form(g).code; }

RunConfig with_workers(int w) {
  RunConfig cfg;
  cfg.workers = w;
  return cfg;
}

}  // namespace

TEST_CASE("trace-minimality certificates") {
  const RunConfig cfg;
  const Certificate c6 = verify_trace_minimal(cycle_graph(6), 6, 2, cfg);
  CHECK(c6.verdict == Verdict::Verified);
  CHECK(c6.method == Method::GirthCertificate);
  CHECK(c6.winners == std::vector<std::string>{code(cycle_graph(6))});
  CHECK(c6.class_size == 2);

  const Certificate tt = verify_trace_minimal(two_triangles(), 6, 2, cfg);
  CHECK(tt.verdict == Verdict::Refuted);
  CHECK(tt.method == Method::Exhaustive);
  REQUIRE(tt.witnesses.size() == 1);
  CHECK(tt.witnesses[0].opponent == code(cycle_graph(6)));
  CHECK(tt.witnesses[0].divergence_index == 3);
  CHECK(tt.witnesses[0].quantity == "a_k");
  CHECK(tt.witnesses[0].candidate_value == "12");
  CHECK(tt.witnesses[0].opponent_value == "0");
  CHECK(exit_code(tt.verdict) == 1);

  const Certificate h8 = verify_trace_minimal(h_seed(8), 8, 3, cfg);
  CHECK(h8.verdict == Verdict::Verified);
  CHECK(h8.winners == std::vector<std::string>{code(h_seed(8))});

  CHECK_THROWS_AS(verify_trace_minimal(path_graph(6), 6, 2, cfg), ArgumentError);
  CHECK_THROWS_AS(verify_trace_minimal(cycle_graph(5), 6, 2, cfg), ArgumentError);
}

TEST_CASE("L-trace-minimality certificates") {
  const RunConfig cfg;
  const Certificate tt = verify_l_trace_minimal(two_triangles(), 6, 2, cfg);
  CHECK(tt.verdict == Verdict::Verified);
  CHECK(tt.method == Method::Exhaustive);
  const Certificate c6 = verify_l_trace_minimal(cycle_graph(6), 6, 2, cfg);
  CHECK(c6.verdict == Verdict::Refuted);
  REQUIRE_FALSE(c6.witnesses.empty());
  CHECK(c6.witnesses[0].quantity == "l_k");
  CHECK(c6.witnesses[0].divergence_index == 3);
  CHECK(c6.witnesses[0].candidate_value == "120");
  CHECK(c6.witnesses[0].opponent_value == "108");
}

TEST_CASE("L-trace verdicts match trace verdicts of the complement") {
  const RunConfig cfg;
  for (int n = 2; n <= 9; ++n) {
    for (int d = 0; d < n; ++d) {
      for (const Graph& g : enumerate_regular(n, d).graphs) {
        const Verdict l = verify_l_trace_minimal(g, n, d, cfg).verdict;
        const Verdict a = verify_trace_minimal(complement(g), n, n - 1 - d, cfg).verdict;
        REQUIRE(l == a);
      }
    }
  }
}

TEST_CASE("t-optimality certificates") {
  const RunConfig cfg;
  const Certificate k33 = verify_t_optimal(complete_bipartite(3, 3), 6, 9, cfg);
  CHECK(k33.verdict == Verdict::Verified);
  CHECK(k33.unique == true);
  CHECK(k33.winners == std::vector<std::string>{code(complete_bipartite(3, 3))});
  CHECK(k33.class_size == 21);
  REQUIRE_FALSE(k33.witnesses.empty());
  CHECK(k33.witnesses[0].candidate_value == "81");

  const Certificate k5 = verify_t_optimal(complete_graph(5), 5, 10, cfg);
  CHECK(k5.verdict == Verdict::Verified);
  CHECK(k5.class_size == 1);

  const Certificate p4 = verify_t_optimal(path_graph(4), 4, 3, cfg);
  CHECK(p4.verdict == Verdict::Verified);
  CHECK(p4.unique == false);
  std::vector<std::string> expected{code(path_graph(4)), code(complete_bipartite(1, 3))};
  std::sort(expected.begin(), expected.end());
  CHECK(p4.winners == expected);

  const Certificate tri = verify_t_optimal(disjoint_union(cycle_graph(3), empty_graph(1)), 4, 3, cfg);
  CHECK(tri.verdict == Verdict::Refuted);
  CHECK(tri.witnesses.size() == 2);
  for (const Witness& w : tri.witnesses) {
    CHECK(w.candidate_value == "0");
    CHECK(w.opponent_value == "1");
  }
  CHECK_THROWS_AS(verify_t_optimal(path_graph(4), 4, 4, cfg), ArgumentError);
}

TEST_CASE("duality") {
  const RunConfig cfg;
  const Certificate d62 = check_duality(6, 2, cfg);
  CHECK(d62.verdict == Verdict::Verified);
  CHECK(d62.winners == std::vector<std::string>{code(two_triangles())});
  CHECK(code(complement(two_triangles())) == code(complete_bipartite(3, 3)));
  const Certificate odd = check_duality(5, 3, cfg);
  CHECK(odd.verdict == Verdict::Verified);
  CHECK(odd.class_size == 0);
  CHECK(odd.winners.empty());
  CHECK_THROWS_AS(check_duality(5, 5, cfg), ArgumentError);
}

TEST_CASE("certificate invariants") {
  const RunConfig cfg;
  for (int n = 4; n <= 8; ++n) {
    for (int d = 1; d < n; ++d) {
      for (const Graph& g : enumerate_regular(n, d).graphs) {
        for (const Certificate& c : {verify_trace_minimal(g, n, d, cfg), verify_l_trace_minimal(g, n, d, cfg)}) {
          REQUIRE(!c.winners.empty());
          if (c.verdict != Verdict::Refuted) continue;
          REQUIRE_FALSE(c.witnesses.empty());
          for (const Witness& w : c.witnesses) {
            REQUIRE(w.divergence_index.has_value());
            REQUIRE(BigInt(w.opponent_value) < BigInt(w.candidate_value));
          }
        }
      }
    }
  }
}

TEST_CASE("verdicts do not depend on the candidate's labeling") {
  std::mt19937_64 rng(41);
  const RunConfig cfg;
  for (const Graph& g : enumerate_regular(8, 3).graphs) {
    const std::string base = to_structured(verify_trace_minimal(g, 8, 3, cfg), false);
    for (int rep = 0; rep < 3; ++rep) {
      const Graph h = relabel(g, oracle::random_permutation(8, rng));
      REQUIRE(to_structured(verify_trace_minimal(h, 8, 3, cfg), false) == base);
    }
  }
  for (const Graph& g : enumerate_by_edges(6, 7).graphs) {
    const Verdict v = verify_t_optimal(g, 6, 7, cfg).verdict;
    REQUIRE(verify_t_optimal(relabel(g, oracle::random_permutation(6, rng)), 6, 7, cfg).verdict == v);
  }
}

TEST_CASE("structured output") {
  const Certificate c = verify_trace_minimal(two_triangles(), 6, 2, RunConfig{});
  const json j = json::parse(to_structured(c));
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["verdict"] == "REFUTED");
  CHECK(j["method"] == "EXHAUSTIVE");
  CHECK(j["class_size"] == "2");
  CHECK(j["class_spec"]["name"] == "R_2(6)");
  CHECK(j["witnesses"][0]["divergence_index"] == 3);
  CHECK(j["witnesses"][0]["candidate_value"] == "12");
  CHECK(j.contains("elapsed_ms"));
  CHECK(j["tool_version"] == kToolVersion);
  const json bare = json::parse(to_structured(c, false));
  CHECK_FALSE(bare.contains("elapsed_ms"));
  CHECK_FALSE(bare.contains("tool_version"));
  CHECK(to_text(c).find("REFUTED") != std::string::npos);
}

TEST_CASE("certificates are identical for any worker count") {
  for (int w : {2, 8}) {
    CHECK(to_structured(verify_trace_minimal(h_seed(8), 8, 3, with_workers(1)), false) ==
          to_structured(verify_trace_minimal(h_seed(8), 8, 3, with_workers(w)), false));
    CHECK(to_structured(verify_t_optimal(complete_bipartite(3, 3), 6, 9, with_workers(1)), false) ==
          to_structured(verify_t_optimal(complete_bipartite(3, 3), 6, 9, with_workers(w)), false));
    CHECK(to_structured(check_duality(9, 4, with_workers(1)), false) ==
          to_structured(check_duality(9, 4, with_workers(w)), false));
  }
}

TEST_CASE("class reports") {
  const ClassReport r69 = report_class(6, 9, RunConfig{});
  REQUIRE(r69.rows.size() == 21);
  CHECK(r69.rows[0].code == code(complete_bipartite(3, 3)));
  CHECK(r69.rows[0].t == 81);
  CHECK(r69.rows[0].rank == 1);
  CHECK(r69.rows[0].regularity == "regular");
  CHECK_FALSE(r69.h_family_rank.has_value());
  for (std::size_t i = 1; i < r69.rows.size(); ++i) {
    REQUIRE(r69.rows[i - 1].t >= r69.rows[i].t);
    std::size_t larger = 0;
    for (const ReportRow& other : r69.rows) larger += other.t > r69.rows[i].t;
    REQUIRE(r69.rows[i].rank == larger + 1);
  }
  const ClassReport r510 = report_class(5, 10, RunConfig{});
  REQUIRE(r510.rows.size() == 1);
  CHECK(r510.rows[0].t == 125);
  const ClassReport r75 = report_class(7, 7, RunConfig{});
  REQUIRE(r75.h_family_rank.has_value());
  CHECK(r75.h_family_rank == 1);
  CHECK_THROWS_AS(report_class(9, 18, RunConfig{}), CapsRefusal);
}

TEST_CASE("summaries") {
  CHECK(summarize(complement(h_family(10))) == "n=10 m=20 degrees=[4,4] girth=3");
  CHECK(summarize(path_graph(3)) == "n=3 m=2 degrees=[1,2] girth=inf");
  CHECK(summarize(h_family(13)).rfind("n=13 m=52 degrees=[8,8]", 0) == 0);
}
