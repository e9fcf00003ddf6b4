#include <doctest.h>

#include <numeric>

#include "linkmatch/constructions.hpp"
#include "linkmatch/hgraph.hpp"
#include "oracles.hpp"

using namespace linkmatch;

TEST_CASE("triple and vertex set validation") {
  CHECK_THROWS_AS(Triple(1, 1, 2), std::invalid_argument);
  Triple t(3, 1, 2);
  CHECK(t[0] == 1);
  CHECK(t[2] == 3);
  CHECK(to_string(t) == "{1,2,3}");
  CHECK_THROWS_AS(VertexSet(4, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(VertexSet(4, {5}), std::invalid_argument);
  VertexSet s(5, {4, 2});
  CHECK(s.members() == std::vector<Vertex>{2, 4});
}

TEST_CASE("graph and hypergraph construction rejects bad input") {
  CHECK_THROWS_AS(Graph2(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph2(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph2(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph3(3, {{1, 2, 3}, {3, 2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph3(3, {{1, 2, 4}}), std::invalid_argument);
  CHECK(Hypergraph3(0, {}).size() == 0);
  CHECK(Hypergraph3(2, {}).order() == 2);
  CHECK(Graph2(4, {{3, 1}}).edges().front() == Pair{1, 3});
}

TEST_CASE("link graph") {
  Graph2 tri = link_graph(Hypergraph3::complete(4), 1).graph;
  CHECK(tri.order() == 3);
  CHECK(tri.size() == 3);

  // The last vertex of H1(2,9) sees K_2 joined with 6 isolated vertices.
  Hypergraph3 h = h1(2, 9).hypergraph;
  LinkGraph l = link_graph(h, 9);
  CHECK(l.graph == split_graph(2, 8).graph);
  CHECK(l.labels.to_old(8) == 8);
  CHECK(l.labels.to_new(9) == 0);

  Hypergraph3 lonely(5, {{1, 2, 3}});
  LinkGraph e = link_graph(lonely, 5);
  CHECK(e.graph.order() == 4);
  CHECK(e.graph.size() == 0);

  LinkGraph mid = link_graph(Hypergraph3(5, {{2, 3, 5}}), 3);
  REQUIRE(mid.graph.size() == 1);
  auto [a, b] = mid.graph.edges()[0];
  CHECK(mid.labels.to_old(a) == 2);
  CHECK(b == 4);
  CHECK(mid.labels.to_old(b) == 5);
}

TEST_CASE("degrees") {
  Hypergraph3 k5 = Hypergraph3::complete(5);
  CHECK(degree(k5, VertexSet(5, {1})) == 6);
  CHECK(degree(k5, VertexSet(5, {1, 2})) == 3);
  CHECK(degree(k5, VertexSet(5, {1, 2, 3})) == 1);
  CHECK_THROWS(degree(k5, VertexSet(5, {1, 2, 3, 4})));
  CHECK(min_l_degree(k5, 1) == 6);

  Hypergraph3 h = h1(2, 9).hypergraph;
  CHECK(degree(h, VertexSet(9, {})) == 84 - 35);
  CHECK(min_l_degree(h, 1) == 13);
  CHECK(min_l_degree(h, 0) == static_cast<long>(h.size()));

  CHECK(max_codegree(Hypergraph3::complete(8)) == 6);
  CHECK(max_codegree(Hypergraph3(6, {{1, 2, 3}, {4, 5, 6}})) == 1);
  Hypergraph3 g = h2(3, 9).hypergraph;
  CHECK(degree(g, VertexSet(9, {1, 2})) == 7);
  CHECK(max_codegree(g) == 7);
  CHECK(max_codegree(Hypergraph3(1, {})) == 0);
}

TEST_CASE("complement, join, induced and removal") {
  CHECK(complement(Graph2::complete(4)) == Graph2::empty(4));
  Graph2 j = join(Graph2::complete(2), Graph2::empty(4));
  CHECK(j.size() == 1 + 8);
  CHECK(j.adjacent(1, 6));
  CHECK_FALSE(j.adjacent(3, 4));

  InducedHypergraph r = remove_vertices(h1(2, 9).hypergraph, VertexSet(9, {1, 2}));
  CHECK(r.hypergraph.order() == 7);
  CHECK(r.hypergraph.size() == 0);
  CHECK(r.labels.to_old(1) == 3);

  Hypergraph3 k6 = Hypergraph3::complete(6);
  InducedHypergraph sub = induced(k6, VertexSet(6, {2, 4, 6}));
  CHECK(sub.hypergraph.size() == 1);
  CHECK(sub.labels.kept() == std::vector<Vertex>{2, 4, 6});

  InducedGraph gr = graph_remove_vertices(oracle::cycle(5), VertexSet(5, {1}));
  CHECK(gr.graph == oracle::path(4));
  CHECK(gr.labels.to_new(1) == 0);
  CHECK(gr.labels.to_new(2) == 1);

  LabelMap outer(6, {2, 4, 6});
  LabelMap inner(3, {1, 3});
  LabelMap both = outer.compose(inner);
  CHECK(both.to_old(2) == 6);
  CHECK(LabelMap::identity(3).to_old(3) == 3);
}

TEST_CASE("with_edge and relabel") {
  Hypergraph3 h(4, {{1, 2, 3}});
  CHECK(with_edge(h, Triple(2, 3, 4)).size() == 2);
  CHECK_THROWS(with_edge(h, Triple(1, 2, 3)));
  Hypergraph3 r = relabel(h, {4, 3, 2, 1});
  CHECK(r.contains(Triple(2, 3, 4)));
  Graph2 g = relabel(Graph2(3, {{1, 2}}), {3, 1, 2});
  CHECK(g.adjacent(1, 3));
}

TEST_CASE("triple enumeration") {
  for (int n = 0; n <= 12; ++n) {
    CHECK(all_triples(n).size() == static_cast<std::size_t>(oracle::choose(n, 3)));
    CHECK(binomial(n, 3) == static_cast<std::uint64_t>(oracle::choose(n, 3)));
    auto t = all_triples(n);
    CHECK(std::is_sorted(t.begin(), t.end()));
  }
}

TEST_CASE("property: handshake identities and link sizes") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 3 + static_cast<int>(seed % 8);
    Hypergraph3 h = random_3graph(n, 0.4, seed).hypergraph;
    long vertex_sum = 0;
    for (Vertex v = 1; v <= n; ++v) {
      long d = degree(h, VertexSet(n, {v}));
      CHECK(d == h.degree(v));
      CHECK(static_cast<long>(link_graph(h, v).graph.size()) == d);
      vertex_sum += d;
    }
    CHECK(vertex_sum == 3 * static_cast<long>(h.size()));
    long pair_sum = 0;
    for (Vertex a = 1; a <= n; ++a)
      for (Vertex b = a + 1; b <= n; ++b) pair_sum += degree(h, VertexSet(n, {a, b}));
    CHECK(pair_sum == 3 * static_cast<long>(h.size()));

    Graph2 g = random_graph(n, 0.5, seed);
    CHECK(complement(complement(g)) == g);
    CHECK(g.size() + complement(g).size() == static_cast<std::size_t>(n * (n - 1) / 2));
  }
}
