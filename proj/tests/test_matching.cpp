#include <doctest.h>

#include "linkmatch/constructions.hpp"
#include "linkmatch/matching.hpp"
#include "linkmatch/rational.hpp"
#include "linkmatch/simplex.hpp"
#include "oracles.hpp"

using namespace linkmatch;

TEST_CASE("rational arithmetic") {
  Rational a(2, 4);
  CHECK(a.str() == "1/2");
  CHECK(Rational(2).str() == "2/1");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK((a + Rational(1, 3)).str() == "5/6");
  CHECK(Rational::parse("7/3") == Rational(14, 6));
  CHECK(Rational(7, 3).floor() == 2);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("graph matching examples") {
  CHECK(max_matching_graph(oracle::cycle(5)).size == 2);
  CHECK(max_matching_graph(split_graph(2, 8).graph).size == 2);
  GraphMatching p = max_matching_graph(oracle::petersen());
  CHECK(p.size == 5);
  CHECK(is_matching(oracle::petersen(), p.pairs));
  CHECK(max_matching_graph(Graph2::empty(4)).size == 0);
  // Odd cycle with a pendant needs blossom contraction.
  Graph2 g(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {5, 6}});
  CHECK(max_matching_graph(g).size == 3);
}

TEST_CASE("property: blossom equals brute force") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    int n = 1 + static_cast<int>(seed % 8);
    Graph2 g = random_graph(n, 0.2 + 0.1 * (seed % 7), seed);
    GraphMatching m = max_matching_graph(g);
    CHECK(m.size == oracle::graph_nu(g));
    CHECK(static_cast<int>(m.pairs.size()) == m.size);
    CHECK(is_matching(g, m.pairs));
  }
}

TEST_CASE("3-graph matching examples") {
  MatchingSearch f = max_matching_3graph(oracle::fano());
  CHECK(f.size == 1);
  CHECK(f.exact);
  CHECK(max_matching_3graph(h1(2, 9).hypergraph).size == 2);
  MatchingSearch h = max_matching_3graph(h2(3, 9).hypergraph);
  CHECK(h.size == 2);
  CHECK(h.exact);
  CHECK(is_matching(h2(3, 9).hypergraph, h.matching));
  CHECK(max_matching_3graph(Hypergraph3(2, {})).size == 0);
}

TEST_CASE("target search and budget") {
  Hypergraph3 k9 = Hypergraph3::complete(9);
  MatchingSearch t = find_matching_of_size(k9, 2);
  CHECK(t.reached_target);
  CHECK(t.size >= 2);
  MatchingSearch none = find_matching_of_size(h1(2, 9).hypergraph, 3);
  CHECK_FALSE(none.reached_target);
  CHECK(none.exact);
  CHECK(none.size == 2);

  SearchOptions tiny;
  tiny.budget = 1;
  MatchingSearch cut = max_matching_3graph(random_3graph(12, 0.3, 5).hypergraph, tiny);
  CHECK(cut.nodes <= 2);
  CHECK(is_matching(random_3graph(12, 0.3, 5).hypergraph, cut.matching));
}

TEST_CASE("property: branch and bound equals exhaustive recursion") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    int n = 3 + static_cast<int>(seed % 7);
    Hypergraph3 h = random_3graph(n, 0.1 + 0.1 * (seed % 6), seed).hypergraph;
    MatchingSearch m = max_matching_3graph(h);
    REQUIRE(m.exact);
    CHECK(m.size == oracle::h3_nu(h));
    CHECK(is_matching(h, m.matching));
    CHECK(static_cast<int>(m.matching.size()) == m.size);
  }
}

TEST_CASE("hitting set bound") {
  HittingSetResult a = hitting_set_bound(h1(3, 12).hypergraph, VertexSet(12, {1, 2, 3}));
  CHECK(a.valid);
  CHECK(a.bound == 3);
  HittingSetResult b = hitting_set_bound(h2(3, 12).hypergraph, VertexSet(12, {1, 2, 3, 4, 5}));
  CHECK(b.valid);
  CHECK(b.bound == 5);
  HittingSetResult c = hitting_set_bound(Hypergraph3::complete(6), VertexSet(6, {1}));
  CHECK_FALSE(c.valid);
  REQUIRE(c.witness);
  CHECK(*c.witness == Triple(2, 3, 4));
}

TEST_CASE("fractional matching examples") {
  Hypergraph3 fano = oracle::fano();
  DualityCertificate c = fractional_matching(fano);
  CHECK(c.primal.value.str() == "7/3");
  CHECK(c.dual.value == c.primal.value);
  CHECK(c.verify(fano));
  for (const auto& w : c.dual.weights) CHECK(w == Rational(1, 3));
  for (const auto& w : c.primal.weights) CHECK(w == Rational(1, 3));

  CHECK(fractional_matching(Hypergraph3::complete(7)).primal.value == Rational(7, 3));

  Hypergraph3 g1 = h1(2, 10).hypergraph;
  DualityCertificate d1 = fractional_matching(g1);
  CHECK(d1.primal.value == Rational(2));
  CHECK(d1.dual.weights[0] == Rational(1));
  CHECK(d1.dual.weights[1] == Rational(1));

  Hypergraph3 g2 = h2(3, 10).hypergraph;
  DualityCertificate d2 = fractional_matching(g2);
  CHECK(d2.primal.value == Rational(5, 2));
  CHECK(d2.verify(g2));
  CHECK(fractional_matching(h2(2, 7).hypergraph).primal.value == Rational(3, 2));

  DualityCertificate empty = fractional_matching(Hypergraph3(5, {}));
  CHECK(empty.primal.value == Rational(0));
  CHECK(empty.verify(Hypergraph3(5, {})));
}

TEST_CASE("fractional matching size guard") {
  Hypergraph3 big = Hypergraph3::complete(24);  // C(24,3) = 2024
  CHECK_THROWS_AS(fractional_matching(big), LpTooLarge);
  CHECK_THROWS_AS(fractional_matching(Hypergraph3(30, {{1, 2, 3}})), LpTooLarge);
}

TEST_CASE("perfect fractional matching") {
  CHECK(has_perfect_fractional_matching(Hypergraph3::complete(6)).perfect);
  PerfectFractional h = has_perfect_fractional_matching(h1(2, 9).hypergraph);
  CHECK_FALSE(h.perfect);
  CHECK(h.nu_frac == Rational(2));
  PerfectFractional f = has_perfect_fractional_matching(oracle::fano());
  CHECK(f.perfect);
  REQUIRE(f.witness);
  CHECK(is_feasible(oracle::fano(), *f.witness));
}

TEST_CASE("simplex handles a degenerate packing LP") {
  // max x1 + x2 + x3 subject to pairwise sums <= 1: optimum 3/2.
  PackingLp lp;
  lp.rows = 3;
  lp.cols = 3;
  lp.a = {1, 1, 0, 0, 1, 1, 1, 0, 1};
  lp.b = {1, 1, 1};
  lp.c = {1, 1, 1};
  LpSolution s = solve_packing_lp(lp);
  CHECK(s.status == LpSolution::Status::optimal);
  CHECK(s.value == Rational(3, 2));
}

TEST_CASE("property: LP duality and sandwich bounds") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    int n = 3 + static_cast<int>(seed % 10);
    Hypergraph3 h = random_3graph(n, 0.15 + 0.1 * (seed % 7), derive_seed(3, seed)).hypergraph;
    DualityCertificate c = fractional_matching(h);
    CHECK(c.primal.value == c.dual.value);
    CHECK(is_feasible(h, c.primal));
    CHECK(is_feasible(h, c.dual));
    CHECK(c.verify(h));
    CHECK(c.primal.value <= Rational(n, 3));
    if (n <= 9) CHECK(Rational(oracle::h3_nu(h)) <= c.primal.value);
  }
}

TEST_CASE("property: H1 matching numbers") {
  for (int s = 1; s <= 4; ++s) {
    for (int n = 3 * s; n <= 13; ++n) {
      LabeledInstance inst = h1(s, n);
      CHECK(max_matching_3graph(inst.hypergraph).size == s);
      CHECK(fractional_matching(inst.hypergraph).primal.value == Rational(s));
    }
  }
}

TEST_CASE("high degree set") {
  CHECK(high_degree_set(Hypergraph3::complete(20), 1).size() == 20);
  CHECK(high_degree_set(Hypergraph3(10, {}), 2).empty());
  CHECK(high_degree_set(h1(1, 12).hypergraph, 1).members() == std::vector<Vertex>{1});
}

TEST_CASE("greedy extension") {
  Hypergraph3 k12 = Hypergraph3::complete(12);
  Matching3 m0;
  GreedyExtension same = greedy_extend(k12, m0, VertexSet(12, {}), 2);
  CHECK(same.ok);
  CHECK(same.matching.size() == 0);

  GreedyExtension g = greedy_extend(k12, m0, VertexSet(12, {1, 2, 3}), 2);
  CHECK(g.ok);
  CHECK(g.matching.size() == 3);
  CHECK(is_matching(k12, g.matching));

  Hypergraph3 h = h1(2, 20).hypergraph;
  GreedyExtension e = greedy_extend(h, m0, VertexSet(20, {1, 2}), 1);
  CHECK(e.ok);
  REQUIRE(e.matching.size() == 2);
  CHECK(is_matching(h, e.matching));
  CHECK(((e.matching.edges[0].contains(1) && e.matching.edges[1].contains(2)) ||
         (e.matching.edges[0].contains(2) && e.matching.edges[1].contains(1))));

  Matching3 start{{Triple(4, 5, 6)}};
  GreedyExtension kept = greedy_extend(k12, start, VertexSet(12, {1}), 1);
  CHECK(kept.ok);
  CHECK(kept.matching.edges.front() == Triple(4, 5, 6));
  CHECK_THROWS(greedy_extend(k12, start, VertexSet(12, {4}), 1));

  // A star with two centres sharing its only edge cannot be extended twice.
  Hypergraph3 one(6, {{1, 2, 3}});
  GreedyExtension stuck = greedy_extend(one, m0, VertexSet(6, {1, 4}), 1);
  CHECK_FALSE(stuck.ok);
  CHECK(stuck.stuck == 4);
}

TEST_CASE("simplex falls back to big integers") {
  const std::int64_t m = 3'000'000'000;
  PackingLp lp;
  lp.rows = 2;
  lp.cols = 2;
  lp.a = {m, 1, 1, m};
  lp.b = {m, m};
  lp.c = {m, m};
  LpSolution s = solve_packing_lp(lp);
  CHECK(s.used_bignum);
  // Both constraints are tight at x = y = m/(m+1).
  CHECK(s.value == Rational(2 * m) * Rational(m, m + 1));
  REQUIRE(s.primal.size() == 2);
  CHECK(s.primal[0] == Rational(m, m + 1));
}
