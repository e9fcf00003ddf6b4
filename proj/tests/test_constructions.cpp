#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "linkmatch/constructions.hpp"
#include "linkmatch/matching.hpp"
#include "linkmatch/spectral.hpp"
#include "oracles.hpp"

using namespace linkmatch;

namespace {

double min_link_rho(const Hypergraph3& h, std::vector<Vertex>* argmins = nullptr) {
  std::vector<double> r;
  for (Vertex v = 1; v <= h.order(); ++v) r.push_back(oracle::rho(link_graph(h, v).graph));
  double best = *std::min_element(r.begin(), r.end());
  if (argmins)
    for (Vertex v = 1; v <= h.order(); ++v)
      if (std::abs(r[v - 1] - best) <= 1e-9) argmins->push_back(v);
  return best;
}

}  // namespace

TEST_CASE("h1 examples") {
  LabeledInstance a = h1(2, 9);
  CHECK(min_link_rho(a.hypergraph) == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(*a.expected.min_link_rho == doctest::Approx(4.0));
  CHECK(a.family.tag() == "H1(2,9)");

  LabeledInstance b = h1(1, 6);
  CHECK(min_link_rho(b.hypergraph) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(oracle::h3_nu(b.hypergraph) == 1);
  CHECK(*b.expected.nu == 1);

  CHECK(h1(3, 12).hypergraph.size() == static_cast<std::size_t>(220 - 84));
  CHECK_THROWS(h1(0, 5));
  CHECK_THROWS(h1(6, 5));
}

TEST_CASE("h2 examples") {
  LabeledInstance a = h2(3, 9);
  CHECK(min_link_rho(a.hypergraph) == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(oracle::h3_nu(a.hypergraph) == 2);
  CHECK(*a.expected.nu == 2);
  LabeledInstance b = h2(2, 7);
  CHECK(fractional_matching(b.hypergraph).primal.value == Rational(3, 2));
  REQUIRE(b.expected.nu_frac);
  CHECK(*b.expected.nu_frac == Rational(3, 2));
  CHECK_THROWS(h2(5, 8));
}

TEST_CASE("complete instance") {
  LabeledInstance k = complete_instance(7);
  CHECK(k.hypergraph.size() == 35);
  CHECK(*k.expected.nu == 2);
  CHECK(*k.expected.nu_frac == Rational(7, 3));
  CHECK(complete_instance(2).hypergraph.size() == 0);
}

TEST_CASE("split graphs") {
  LabeledGraph star = split_graph(1, 5);
  CHECK(spectral_radius(star.graph).value == doctest::Approx(2.0));
  CHECK(star.expected_rho == doctest::Approx(threshold_fyz(1, 5)));
  CHECK(spectral_radius(split_graph(0, 4).graph).value == 0.0);
  CHECK(split_graph(0, 4).graph.size() == 0);
  CHECK(spectral_radius(split_graph(3, 3).graph).value == doctest::Approx(2.0));
}

TEST_CASE("random generators") {
  CHECK(random_3graph(8, 0.0, 3).hypergraph.size() == 0);
  CHECK(random_3graph(8, 1.0, 3).hypergraph.size() == 56);
  CHECK(random_3graph(9, 0.5, 7).hypergraph == random_3graph(9, 0.5, 7).hypergraph);
  CHECK_FALSE(random_3graph(9, 0.5, 7).hypergraph == random_3graph(9, 0.5, 8).hypergraph);
  CHECK(random_graph(10, 0.3, 1) == random_graph(10, 0.3, 1));
  CHECK_THROWS(random_3graph(5, 1.5, 0));
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}

TEST_CASE("exhaustive stream") {
  ThreeGraphStream s4(4);
  CHECK(s4.count() == 16);
  std::set<std::vector<Triple>> seen;
  while (auto h = s4.next()) seen.insert(h->edges());
  CHECK(seen.size() == 16);
  CHECK(ThreeGraphStream(5).count() == 1024);
  CHECK(ThreeGraphStream(6).count() == (1u << 20));
  CHECK(ThreeGraphStream(6).at((1u << 20) - 1) == Hypergraph3::complete(6));
  CHECK_THROWS(ThreeGraphStream(7));
}

TEST_CASE("property: H1 link minimum and where it is attained") {
  for (int s = 1; s <= 4; ++s) {
    for (int n = std::max(3 * s, 4); n <= 15; ++n) {
      LabeledInstance inst = h1(s, n);
      std::vector<Vertex> at;
      double got = min_link_rho(inst.hypergraph, &at);
      CHECK(std::abs(got - *inst.expected.min_link_rho) <= 1e-9);
      CHECK(std::abs(got - split_graph_rho(s, n - 1)) <= 1e-9);
      for (Vertex v = s + 1; v <= n; ++v) CHECK(std::find(at.begin(), at.end(), v) != at.end());
      if (n <= 12) CHECK(max_matching_3graph(inst.hypergraph).size == s);
      if (n >= 3 * s + 3) CHECK_FALSE(find_matching_of_size(inst.hypergraph, s + 1).reached_target);
      HittingSetResult hs = hitting_set_bound(inst.hypergraph, VertexSet(n, [&] {
        std::vector<Vertex> c(s);
        std::iota(c.begin(), c.end(), 1);
        return c;
      }()));
      CHECK(hs.valid);
      CHECK(hs.bound == s);
    }
  }
}

TEST_CASE("property: H2 link minimum and matching bound") {
  for (int s = 2; s <= 5; ++s) {
    for (int n = 2 * s; n <= 15; ++n) {
      LabeledInstance inst = h2(s, n);
      std::vector<Vertex> at;
      double got = min_link_rho(inst.hypergraph, &at);
      CHECK(std::abs(got - (2.0 * s - 2)) <= 1e-9);
      CHECK(std::abs(got - *inst.expected.min_link_rho) <= 1e-9);
      for (Vertex v = 2 * s; v <= n; ++v) CHECK(std::find(at.begin(), at.end(), v) != at.end());
      CHECK_FALSE(find_matching_of_size(inst.hypergraph, s).reached_target);
      if (inst.expected.nu) CHECK(max_matching_3graph(inst.hypergraph).size == *inst.expected.nu);
      if (inst.expected.nu_frac && binomial(n, 3) <= 500) {
        CHECK(fractional_matching(inst.hypergraph).primal.value == *inst.expected.nu_frac);
      }
    }
  }
}
