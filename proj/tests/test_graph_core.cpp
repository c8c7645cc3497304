#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "treeopt/canonical.hpp"
#include "treeopt/constructions.hpp"
#include "treeopt/counters.hpp"
#include "treeopt/errors.hpp"
#include "treeopt/graph6.hpp"
#include "treeopt/linalg.hpp"
#include "treeopt/sequences.hpp"

using namespace treeopt;

TEST_CASE("graph6 decodes the documented strings") {
  CHECK(from_graph6("C?") == empty_graph(4));
  CHECK(from_graph6("C~") == complete_graph(4));
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(empty_graph(4)) == "C?");
  // Path 0-1-2: bits x(0,1)=1 x(0,2)=0 x(1,2)=1 -> 101000 = 40 -> 'g'.
  CHECK(to_graph6(path_graph(3)) == "Bg");
}

TEST_CASE("graph6 rejects malformed input with a byte offset") {
  auto offset_of = [](std::string_view s) -> long {
    try {
      from_graph6(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("C") == 1);        // body missing
  CHECK(offset_of("C~~") == 2);      // trailing garbage
  CHECK(offset_of("C\x7f") == 1);    // outside [63,126]
  CHECK(offset_of("~??") == 0);      // long form unsupported
  CHECK(offset_of("B@") >= 1);       // nonzero padding bits
  CHECK(offset_of("?") == 0);        // n = 0
}

TEST_CASE("graph6 round trips labeled graphs up to 62 vertices") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 62; ++n) {
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const std::string s = to_graph6(g);
    CHECK(from_graph6(s) == g);
    CHECK(to_graph6(from_graph6(s)) == s);
  }
  oracle::for_each_labeled(5, [](const Graph& g) { REQUIRE(from_graph6(to_graph6(g)) == g); });
}

TEST_CASE("edge lists parse and reject duplicates") {
  const Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  CHECK(g == path_graph(4));
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
}

TEST_CASE("graph invariants are validated") {
  CHECK_THROWS(Graph::from_rows({0b10, 0b00}));
  CHECK_THROWS(Graph::from_rows({0b1}));
  CHECK_THROWS_AS(Graph(63), UnsupportedSize);
  const Graph g = complete_graph(5);
  int sum = 0;
  for (int d : g.degrees()) sum += d;
  CHECK(sum == 2 * g.edge_count());
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(5)) == empty_graph(5));
  CHECK(are_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  oracle::for_each_labeled(5, [](const Graph& g) {
    REQUIRE(complement(complement(g)) == g);
    REQUIRE(complement(g).edge_count() == 10 - g.edge_count());
  });
}

TEST_CASE("disjoint union") {
  const Graph two_k2 = disjoint_union(complete_graph(2), complete_graph(2));
  CHECK(two_k2.order() == 4);
  CHECK(two_k2.edge_count() == 2);
  const Graph u = disjoint_union(path_graph(3), cycle_graph(4));
  std::vector<int> expected = path_graph(3).degrees();
  for (int d : cycle_graph(4).degrees()) expected.push_back(d);
  CHECK(u.degrees() == expected);
  CHECK(spanning_tree_count(u) == 0);
}

TEST_CASE("join matches the complement-of-union definition") {
  CHECK(join(empty_graph(5), empty_graph(5)) == complete_bipartite(5, 5));
  CHECK(join(complete_graph(1), complete_graph(1)) == complete_graph(2));
  std::vector<Graph> small;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::brute_classes(n)) small.push_back(g);
  }
  for (const Graph& g : small) {
    for (const Graph& h : small) {
      if (g.order() + h.order() > Graph::kMaxVertices) continue;
      REQUIRE(join(g, h) == complement(disjoint_union(complement(g), complement(h))));
    }
  }
}

TEST_CASE("join power") {
  CHECK(join_power(empty_graph(5), 2) == complete_bipartite(5, 5));
  CHECK(join_power(cycle_graph(4), 1) == cycle_graph(4));
  for (int n = 1; n <= 12; ++n) CHECK(join_power(complete_graph(1), n) == complete_graph(n));
  CHECK_THROWS_AS(join_power(cycle_graph(3), 0), ArgumentError);
}

TEST_CASE("extend_g0") {
  CHECK(extend_g0(cycle_graph(4), 2, 0, 0) == cycle_graph(4));
  const Graph g = extend_g0(cycle_graph(4), 2, 1, 1);
  CHECK(g.order() == 9);
  const DegreeSequence ds = degree_info(g);
  CHECK(ds.min_degree == 1);
  CHECK(ds.max_degree == 2);
  CHECK(degree_info(complement(g)).is_almost_regular);
  try {
    extend_g0(path_graph(4), 3, 0, 0);
    FAIL("expected ArgumentError");
  } catch (const ArgumentError& e) {
    const std::string msg = e.what();
    CHECK(msg.find('0') != std::string::npos);
    CHECK(msg.find('3') != std::string::npos);
  }
}

TEST_CASE("extend_g0 leaves the gap sequence unchanged") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g0 : oracle::brute_classes(n)) {
      const DegreeSequence ds = degree_info(g0);
      if (!ds.is_almost_regular || ds.max_degree == 0) continue;
      for (int d : {ds.max_degree, ds.min_degree + 1}) {
        if (ds.min_degree < d - 1) continue;
        for (int p = 0; p <= 2; ++p) {
          for (int q = 0; q <= 2; ++q) {
            REQUIRE(gap_sequence(extend_g0(g0, d, p, q), 6).values == gap_sequence(g0, 6).values);
          }
        }
      }
    }
  }
}

TEST_CASE("h_family") {
  CHECK(are_isomorphic(h_family(5), empty_graph(5)));
  CHECK(are_isomorphic(h_family(6), disjoint_union(complete_graph(2), disjoint_union(complete_graph(2), complete_graph(2)))));
  CHECK(are_isomorphic(h_family(7), cycle_graph(7)));
  CHECK(are_isomorphic(h_family(10), complete_bipartite(5, 5)));
  CHECK(are_isomorphic(h_family(12), join(cycle_graph(7), empty_graph(5))));
  for (int n = 5; n <= 30; ++n) {
    const Graph h = h_family(n);
    const DegreeSequence ds = degree_info(h);
    REQUIRE(h.order() == n);
    REQUIRE(ds.is_regular);
    REQUIRE(ds.max_degree == n - 5);
  }
  CHECK_THROWS_AS(h_family(4), ArgumentError);
}

TEST_CASE("H_8 and H_9 seeds") {
  const Graph h8 = h_seed(8);
  CHECK(degree_info(h8).is_regular);
  CHECK(h8.edge_count() == 12);
  for (int i = 0; i < 8; ++i) {
    CHECK(h8.has_edge(i, (i + 1) % 8));
    CHECK(h8.has_edge(i, (i + 4) % 8));
  }
  const Graph h9 = h_seed(9);
  CHECK(h9.edge_count() == 18);
  CHECK(degree_info(h9).is_regular);
  CHECK(degree_info(h9).max_degree == 4);
}

TEST_CASE("degree_info") {
  const DegreeSequence k5 = degree_info(complete_graph(5));
  CHECK(k5.degrees == std::vector<int>{4, 4, 4, 4, 4});
  CHECK(k5.is_regular);
  const DegreeSequence p3 = degree_info(path_graph(3));
  CHECK(p3.degrees == std::vector<int>{1, 2, 1});
  CHECK(p3.is_almost_regular);
  CHECK_FALSE(p3.is_regular);
  const DegreeSequence star = degree_info(complete_bipartite(1, 3));
  CHECK(star.degrees == std::vector<int>{3, 1, 1, 1});
  CHECK_FALSE(star.is_almost_regular);
  CHECK(star.max_degree == 3);
  CHECK(star.min_degree == 1);
}

TEST_CASE("triangles and induced 3-paths") {
  CHECK(count_triangles(complete_graph(4)) == 4);
  CHECK(count_triangles(complete_bipartite(3, 3)) == 0);
  CHECK(count_triangles(cycle_graph(3)) == 1);
  CHECK(count_induced_p3(path_graph(3)) == 1);
  CHECK(count_induced_p3(complete_graph(4)) == 0);
  CHECK(count_induced_p3(cycle_graph(6)) == 6);
  CHECK(count_induced_p3(disjoint_union(cycle_graph(3), cycle_graph(3))) == 0);
  for (int n = 1; n <= 7; ++n) {
    oracle::for_each_labeled(n, [](const Graph& g) {
      REQUIRE(count_triangles(g) == oracle::brute_triangles(g));
      REQUIRE(count_induced_p3(g) == oracle::brute_induced_p3(g));
    });
  }
}

TEST_CASE("triangles agree with tr(A^3)/6") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(10, 0.5, rng);
    CHECK(adjacency_sequence(g, 3).at(3) == BigInt(6 * count_triangles(g)));
  }
}

TEST_CASE("girth and cycle counts") {
  const CycleCensus c7 = girth_and_cycles(cycle_graph(7), 7);
  CHECK(c7.girth == 7);
  CHECK(c7.cycles(7) == 1);
  for (int i = 3; i < 7; ++i) CHECK(c7.cycles(i) == 0);
  const CycleCensus k4 = girth_and_cycles(complete_graph(4), 4);
  CHECK(k4.girth == 3);
  CHECK(k4.cycles(3) == 4);
  CHECK(k4.cycles(4) == 3);
  const CycleCensus forest = girth_and_cycles(disjoint_union(path_graph(4), complete_bipartite(1, 3)), 8);
  CHECK_FALSE(forest.girth.has_value());
  for (int i = 0; i <= 8; ++i) CHECK(forest.cycles(i) == 0);
  CHECK_FALSE(girth(path_graph(5)).has_value());
  CHECK_THROWS_AS(girth_and_cycles(cycle_graph(4), 5), ArgumentError);
}

TEST_CASE("cycle counts match brute force") {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : oracle::brute_classes(n)) {
      const CycleCensus c = girth_and_cycles(g, n);
      std::optional<int> expected_girth;
      for (int len = 3; len <= n; ++len) {
        const std::uint64_t want = oracle::brute_cycles(g, len);
        REQUIRE(c.cycles(len) == want);
        if (want && !expected_girth) expected_girth = len;
      }
      REQUIRE(c.girth == expected_girth);
      REQUIRE(girth(g) == expected_girth);
    }
  }
}

TEST_CASE("clique unions and connectivity") {
  CHECK(is_clique_union(disjoint_union(complete_graph(3), complete_graph(2))));
  CHECK(is_clique_union(empty_graph(4)));
  CHECK_FALSE(is_clique_union(path_graph(3)));
  CHECK(is_connected(cycle_graph(5)));
  CHECK_FALSE(is_connected(empty_graph(2)));
  CHECK(components(disjoint_union(cycle_graph(3), path_graph(2))).size() == 2);
}

TEST_CASE("class specs") {
  CHECK(GraphClassSpec::regular(6, 2).describe() == "R_2(6)");
  CHECK(GraphClassSpec::edge_count(6, 9).describe() == "S_{6,9}");
  CHECK_THROWS_AS(GraphClassSpec::regular(5, 3).validate(), ArgumentError);
  CHECK_THROWS_AS(GraphClassSpec::regular(5, 5).validate(), ArgumentError);
  CHECK_THROWS_AS(GraphClassSpec::edge_count(4, 7).validate(), ArgumentError);
  CHECK_NOTHROW(GraphClassSpec::edge_count(4, 6).validate());
}
