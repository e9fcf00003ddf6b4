#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace linkmatch {

// Vertices are 1-based: a graph of order n has vertices 1..n.
using Vertex = int;
using Pair = std::pair<Vertex, Vertex>;

// An unordered triple stored in ascending order.
struct Triple {
  std::array<Vertex, 3> v{};

  Triple() = default;
  // Sorts its arguments; throws std::invalid_argument on a repeated vertex.
  Triple(Vertex a, Vertex b, Vertex c);

  bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }
  Vertex operator[](std::size_t i) const { return v[i]; }
  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

std::string to_string(const Triple& t);

// Sorted set of distinct vertices drawn from {1..universe}.
class VertexSet {
 public:
  VertexSet() = default;
  // Sorts and validates; throws std::invalid_argument on duplicates or
  // out-of-range members.
  VertexSet(int universe, std::vector<Vertex> members);

  int universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet&) const = default;

 private:
  int universe_ = 0;
  std::vector<Vertex> members_;
};

// Order-preserving relabeling produced by vertex removal or induction.
// New labels are 1..size(); old labels index the parent graph.
class LabelMap {
 public:
  LabelMap() = default;
  LabelMap(int old_order, std::vector<Vertex> kept);

  static LabelMap identity(int n);

  std::size_t size() const { return old_of_.size(); }
  Vertex to_old(Vertex new_label) const { return old_of_.at(new_label - 1); }
  // 0 when the old vertex was removed.
  Vertex to_new(Vertex old_label) const { return new_of_.at(old_label); }
  const std::vector<Vertex>& kept() const { return old_of_; }

  // (*this) maps child -> parent, inner maps grandchild -> child.
  LabelMap compose(const LabelMap& inner) const;

  bool operator==(const LabelMap&) const = default;

 private:
  std::vector<Vertex> old_of_;
  std::vector<Vertex> new_of_;  // index 0 unused
};

class Graph2 {
 public:
  Graph2() = default;
  // Throws std::invalid_argument on loops, duplicates or labels outside 1..n.
  // Pairs may be given in either orientation.
  Graph2(int n, std::vector<Pair> edges);

  static Graph2 empty(int n) { return Graph2(n, {}); }
  static Graph2 complete(int n);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Pair>& edges() const { return edges_; }

  bool adjacent(Vertex a, Vertex b) const;
  int degree(Vertex v) const { return static_cast<int>(adj_[v - 1].size()); }
  // Neighbours of v in ascending order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v - 1]; }
  // Bit i-1 set iff vertex i is adjacent to v.
  const boost::dynamic_bitset<>& neighbor_bits(Vertex v) const { return bits_[v - 1]; }

  bool operator==(const Graph2& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Pair> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<boost::dynamic_bitset<>> bits_;
};

class Hypergraph3 {
 public:
  Hypergraph3() = default;
  // Throws std::invalid_argument on out-of-range labels or duplicate triples.
  Hypergraph3(int n, std::vector<Triple> edges);

  static Hypergraph3 complete(int n);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Triple>& edges() const { return edges_; }
  // Indices into edges() of the edges containing v, ascending.
  const std::vector<std::size_t>& incident(Vertex v) const { return incidence_[v - 1]; }
  int degree(Vertex v) const { return static_cast<int>(incidence_[v - 1].size()); }
  bool contains(const Triple& t) const;
  std::optional<std::size_t> index_of(const Triple& t) const;

  bool operator==(const Hypergraph3& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Triple> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

struct LinkGraph {
  Graph2 graph;
  LabelMap labels;  // link vertex -> vertex of H
};

struct InducedHypergraph {
  Hypergraph3 hypergraph;
  LabelMap labels;
};

struct InducedGraph {
  Graph2 graph;
  LabelMap labels;
};

// Link of v: the graph on V(H)\{v} with edge {a,b} whenever {a,b,v} is an edge.
LinkGraph link_graph(const Hypergraph3& h, Vertex v);

// Number of edges containing all of t; |t| = 0 gives e(H). Throws for |t| > 3.
long degree(const Hypergraph3& h, const VertexSet& t);

// Minimum over all l-subsets of degree(); l in {0,1,2}.
long min_l_degree(const Hypergraph3& h, int l);

// Maximum pair degree; 0 when n < 2.
long max_codegree(const Hypergraph3& h);

Graph2 complement(const Graph2& g);

// Disjoint union of g1 and g2 with every g1-g2 pair added. Vertices of g2
// are shifted by g1.order().
Graph2 join(const Graph2& g1, const Graph2& g2);

InducedHypergraph induced(const Hypergraph3& h, const VertexSet& keep);
InducedHypergraph remove_vertices(const Hypergraph3& h, const VertexSet& drop);
InducedGraph induced(const Graph2& g, const VertexSet& keep);
InducedGraph graph_remove_vertices(const Graph2& g, const VertexSet& drop);

// Adds a single edge; throws if it is already present.
Hypergraph3 with_edge(const Hypergraph3& h, const Triple& t);
Graph2 with_edge(const Graph2& g, Pair p);

// Applies a vertex permutation: perm[v-1] is the new label of v.
Graph2 relabel(const Graph2& g, const std::vector<Vertex>& perm);
Hypergraph3 relabel(const Hypergraph3& h, const std::vector<Vertex>& perm);

// All C(n,3) triples in lexicographic order.
std::vector<Triple> all_triples(int n);

std::uint64_t binomial(int n, int k);

}  // namespace linkmatch
