#include <doctest.h>

#include <cmath>

#include "linkmatch/constructions.hpp"
#include "linkmatch/harness.hpp"
#include "oracles.hpp"

using namespace linkmatch;

TEST_CASE("mode and verdict names") {
  CHECK(parse_mode("conj-pm") == Mode::conj_pm);
  CHECK(parse_mode("conj_pm") == Mode::conj_pm);
  CHECK(parse_mode("conj-matching") == Mode::conj_matching);
  CHECK(parse_mode("thm12") == Mode::thm12);
  CHECK_FALSE(parse_mode("nope"));
  CHECK(to_string(Verdict::counterexample) == "counterexample");
  CHECK(to_string(Condition::indeterminate) == "indeterminate");
}

TEST_CASE("condition check") {
  CheckReport a = check_condition(h1(2, 9).hypergraph, 2);
  CHECK(a.min_rho == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(a.threshold == doctest::Approx(4.0));
  CHECK(a.condition == Condition::indeterminate);
  CHECK(a.argmin == 3);
  CHECK(a.per_vertex_rho.size() == 9);

  CheckReport b = check_condition(Hypergraph3::complete(9), 2);
  CHECK(b.min_rho == doctest::Approx(7.0));
  CHECK(b.condition == Condition::holds);

  CHECK(check_condition(Hypergraph3(9, {}), 1).condition == Condition::fails);
  CHECK_THROWS(check_condition(Hypergraph3(3, {}), 3));
  CHECK_THROWS(check_condition(Hypergraph3(3, {}), -1));

  CheckOptions g;
  g.gamma = 0.1;
  CheckReport c = check_condition(Hypergraph3::complete(9), 2, g);
  REQUIRE(c.large_n_threshold);
  CHECK(*c.large_n_threshold == doctest::Approx((2.0 / 3 + 0.1) * 9));
  CHECK(*c.large_n_condition == Condition::holds);
}

TEST_CASE("condition check uses the table when given") {
  SpectrumTable t(5);
  CheckOptions o;
  o.table = &t;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Hypergraph3 h = random_3graph(6, 0.6, seed).hypergraph;
    CheckReport fast = check_condition(h, 1, o);
    CheckReport slow = check_condition(h, 1);
    CHECK(fast.condition == slow.condition);
    CHECK(fast.min_rho == doctest::Approx(slow.min_rho).epsilon(1e-9));
  }
}

TEST_CASE("verify theorem examples") {
  CheckReport a = verify_theorem(Hypergraph3::complete(6), 1, Mode::conj_pm);
  CHECK(a.condition == Condition::holds);
  CHECK(a.verdict == Verdict::consistent);
  REQUIRE(a.witness.matching);
  CHECK(a.witness.matching->size() == 2);

  CheckReport b = verify_theorem(h1(1, 6).hypergraph, 1, Mode::thm13);
  CHECK(b.condition == Condition::indeterminate);
  CHECK(b.verdict == Verdict::skipped);

  Hypergraph3 r = random_3graph(9, 0.9, 1).hypergraph;
  CheckReport c = verify_theorem(r, 2, Mode::thm13);
  if (c.condition == Condition::holds) {
    CHECK(c.verdict == Verdict::consistent);
    REQUIRE(c.nu_frac);
    CHECK(*c.nu_frac >= Rational(3));
    REQUIRE(c.witness.certificate);
    CHECK(c.witness.certificate->verify(r));
  } else {
    CHECK(c.verdict == Verdict::skipped);
  }

  CheckReport d = verify_theorem(Hypergraph3::complete(12), 3, Mode::thm12);
  CHECK(d.verdict == Verdict::consistent);
  CHECK(!d.notes.empty());  // n < 100s
  CHECK(verify_theorem(Hypergraph3::complete(7), 1, Mode::conj_pm).verdict == Verdict::out_of_range);
}

TEST_CASE("shift examples") {
  ShiftedPair k = shift(Hypergraph3::complete(6));
  for (const auto& w : k.cover.weights) CHECK(w == Rational(1, 3));
  CHECK(k.shifted == Hypergraph3::complete(6));
  CHECK(k.closure.ok);
  CHECK(k.nu_frac_preserved());

  Hypergraph3 h = h1(2, 9).hypergraph;
  ShiftedPair p = shift(h);
  CHECK(p.cover.weights[0] == Rational(1));
  CHECK(p.cover.weights[1] == Rational(1));
  for (std::size_t i = 2; i < 9; ++i) CHECK(p.cover.weights[i] == Rational(0));
  CHECK(p.order == std::vector<Vertex>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(p.shifted == h);
  CHECK(p.contains_original);

  ShiftedPair e = shift(Hypergraph3(5, {}));
  CHECK(e.shifted.size() == 0);
  for (const auto& w : e.cover.weights) CHECK(w == Rational(0));
}

TEST_CASE("closure check detects a missing dominated triple") {
  ClosureCheck c = check_shift_closure(Hypergraph3(5, {{2, 3, 4}}));
  CHECK_FALSE(c.ok);
  REQUIRE(c.violation);
  CHECK(c.violation->second == Triple(2, 3, 4));
  CHECK(check_shift_closure(h2(3, 9).hypergraph).ok);
}

TEST_CASE("property: shift invariants") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    int n = 4 + static_cast<int>(seed % 9);
    Hypergraph3 h = random_3graph(n, 0.2 + 0.1 * (seed % 6), derive_seed(5, seed)).hypergraph;
    ShiftedPair p = shift(h);
    CHECK(p.closure.ok);
    CHECK(p.contains_original);
    CHECK(p.nu_frac_preserved());
    CHECK(p.cover.value == p.nu_frac_original);
    std::vector<Vertex> perm = p.permutation();
    for (Vertex v = 1; v <= n; ++v) CHECK(p.order[perm[v - 1] - 1] == v);
  }
}

TEST_CASE("lift examples") {
  ShiftedPair k = shift(Hypergraph3::complete(6));
  LiftResult a = lift_link_matching(k, 1);
  CHECK(a.ok);
  CHECK(a.matching.size() == 2);
  CHECK(is_matching(k.shifted, a.matching));

  // Every edge of H2(3,12) uses two of the five hub vertices, so nu = 2:
  // the lift reaches size 2 for s = 1 and cannot reach 3 for s = 2.
  ShiftedPair h = shift(h2(3, 12).hypergraph);
  LiftResult b = lift_link_matching(h, 1);
  CHECK(b.ok);
  CHECK(b.link_nu == 2);
  CHECK(is_matching(h.shifted, b.matching));
  LiftResult c = lift_link_matching(h, 2);
  CHECK_FALSE(c.ok);
  CHECK(c.link_nu == 2);

  ShiftedPair lonely = shift(Hypergraph3(4, {{1, 2, 3}}));
  lonely.shifted = Hypergraph3(4, {{1, 2, 3}});
  LiftResult d = lift_link_matching(lonely, 0);
  CHECK_FALSE(d.ok);
  CHECK_THROWS(lift_link_matching(k, 2));
}

TEST_CASE("absorbing sets") {
  for (int n : {9, 10}) {
    Hypergraph3 k = Hypergraph3::complete(n);
    auto sets = absorbing_sets(k, VertexSet(n, {1, 2, 3}));
    CHECK(sets.size() == static_cast<std::size_t>(oracle::choose(n - 3, 6)));
    for (const auto& a : sets) {
      CHECK(a.size() == 6);
      for (Vertex v : a) CHECK(v > 3);
    }
  }
  CHECK(absorbing_sets(Hypergraph3(9, {}), VertexSet(9, {1, 2, 3})).empty());
  CHECK_THROWS(absorbing_sets(Hypergraph3::complete(9), VertexSet(9, {1, 2})));

  CHECK(has_perfect_matching_on(Hypergraph3::complete(6), {1, 2, 3, 4, 5, 6}));
  CHECK_FALSE(has_perfect_matching_on(oracle::fano(), {1, 2, 3, 4, 5, 6}));
  CHECK(has_perfect_matching_on(oracle::fano(), {}));
}

TEST_CASE("property: absorbing sets satisfy the definition") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Hypergraph3 h = random_3graph(10, 0.6, seed).hypergraph;
    VertexSet t(10, {1, 5, 9});
    auto sets = absorbing_sets(h, t);
    for (const auto& a : sets) {
      std::vector<Vertex> both(a.begin(), a.end());
      both.insert(both.end(), t.begin(), t.end());
      CHECK(oracle::h3_nu(induced(h, a).hypergraph) == 2);
      CHECK(oracle::h3_nu(induced(h, VertexSet(10, both)).hypergraph) == 3);
    }
  }
}

TEST_CASE("edge removal check") {
  using K = EdgeRemovalVerdict::Kind;
  EdgeRemovalVerdict a = edge_removal_check(Graph2::complete(10), 3, 3);
  CHECK(a.kind == K::holds);
  CHECK(a.bound == doctest::Approx(1 + std::sqrt(22.0)));
  CHECK(a.sets_checked == 1 + 10 + 45 + 120);

  EdgeRemovalVerdict b = edge_removal_check(split_graph(3, 10).graph, 3, 3);
  CHECK(b.kind == K::not_applicable);

  EdgeRemovalVerdict c = edge_removal_check(random_graph(12, 0.8, 3), 3, 3);
  CHECK(c.kind != K::violated);
}

TEST_CASE("property: edge removal counts against direct counting") {
  int applicable = 0;
  for (std::uint64_t seed = 0; seed < 200 && applicable < 40; ++seed) {
    int n = 6 + static_cast<int>(seed % 7);
    long s = 1 + static_cast<long>(seed % 3);
    Graph2 g = random_graph(n, 0.7, derive_seed(9, seed));
    EdgeRemovalVerdict v = edge_removal_check(g, s, s);
    if (v.kind == EdgeRemovalVerdict::Kind::not_applicable) continue;
    ++applicable;
    CHECK(v.kind == EdgeRemovalVerdict::Kind::holds);
    // Spot check against the oracle for the first vertices.
    for (long r = 0; r <= s; ++r) {
      std::vector<Vertex> rm;
      for (Vertex x = 1; x <= r; ++x) rm.push_back(x);
      CHECK(oracle::edges_after_removal(g, rm) > (s - r) * (n - s) / 2.0);
    }
  }
  CHECK(applicable > 0);
}

TEST_CASE("search spaces") {
  SearchSpace ex{SearchSpace::Kind::exhaustive, 5, 0.0, 0, 0};
  CHECK(ex.size() == 1024);
  CHECK(search_instance(ex, 1023) == Hypergraph3::complete(5));
  SearchSpace rnd{SearchSpace::Kind::random, 9, 0.5, 10, 4};
  CHECK(rnd.size() == 10);
  CHECK(search_instance(rnd, 3) == random_3graph(9, 0.5, derive_seed(4, 3)).hypergraph);
}

TEST_CASE("search: empty space skips everything") {
  SearchSpace space{SearchSpace::Kind::random, 6, 0.0, 10, 0};
  SearchSummary s = search(space, 1, Mode::conj_pm, {}, 1);
  CHECK(s.instances == 10);
  CHECK(s.condition_fails == 10);
  CHECK(s.skipped == 10);
  CHECK(s.flagged.empty());
}

TEST_CASE("search: exhaustive n=5 and thread independence") {
  SearchSpace space{SearchSpace::Kind::exhaustive, 5, 0.0, 0, 0};
  SearchSummary one = search(space, 1, Mode::thm13, {}, 1);
  SearchSummary two = search(space, 1, Mode::thm13, {}, 3);
  CHECK(one.instances == 1024);
  CHECK(one.condition_holds == two.condition_holds);
  CHECK(one.consistent == two.consistent);
  CHECK(one.bug_suspect == 0);
  CHECK(one.flagged.size() == two.flagged.size());
  CHECK(one.condition_holds + one.condition_fails + one.indeterminate == one.instances);
}

TEST_CASE("search: random thm13 at n = 3s+3") {
  SearchSpace space{SearchSpace::Kind::random, 9, 0.85, 10000, 42};
  SearchSummary s = search(space, 2, Mode::thm13, {}, 0);
  CHECK(s.instances == 10000);
  CHECK(s.bug_suspect == 0);
  CHECK(s.counterexample == 0);
  CHECK(s.out_of_range == 0);
  CHECK(s.consistent == s.condition_holds);
}
