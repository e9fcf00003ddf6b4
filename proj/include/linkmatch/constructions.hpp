#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "linkmatch/hgraph.hpp"
#include "linkmatch/rational.hpp"

namespace linkmatch {

struct Family {
  enum class Kind { h1, h2, complete, random, file };
  Kind kind = Kind::file;
  long s = 0;
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;

  // "H1(2,9)", "H2(3,9)", "complete(6)", "random(9,0.5,7)", "file".
  std::string tag() const;
};

// Closed-form statistics attached by a generator. They are derivations to be
// confirmed by the solvers, not assumptions.
struct Expected {
  std::optional<double> min_link_rho;
  std::optional<long> nu;
  std::optional<Rational> nu_frac;
};

struct LabeledInstance {
  Hypergraph3 hypergraph;
  Family family;
  Expected expected;
};

// Triples meeting [s]. Requires 1 <= s <= n, n >= 3.
LabeledInstance h1(long s, int n);

// Triples with at least two vertices in [2s-1]. Requires s >= 1, 2s-1 <= n, n >= 3.
LabeledInstance h2(long s, int n);

LabeledInstance complete_instance(int n);

// Binomial 3-graph: triple i in lexicographic order is kept when the i-th
// draw of mt19937_64(seed), mapped to [0,1) by its top 53 bits, is below p.
LabeledInstance random_3graph(int n, double p, std::uint64_t seed);

struct LabeledGraph {
  Graph2 graph;
  double expected_rho = 0.0;
};

// K_s joined with an independent set on n - s vertices; clique is {1..s}.
LabeledGraph split_graph(long s, int n);

// Binomial random graph with the same coin convention as random_3graph.
Graph2 random_graph(int n, double p, std::uint64_t seed);

// Mixes (seed, index) into a per-instance seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Exhaustive stream of all 2^C(n,3) 3-graphs on [n], in bitmask order over
// the lexicographic triple list (bit i <-> triple i). Requires C(n,3) <= 24.
class ThreeGraphStream {
 public:
  explicit ThreeGraphStream(int n);

  std::uint64_t count() const { return count_; }
  int order() const { return n_; }
  // Instance with the given mask; independent of the stream position.
  Hypergraph3 at(std::uint64_t mask) const;
  std::optional<Hypergraph3> next();

 private:
  int n_;
  std::vector<Triple> triples_;
  std::uint64_t count_;
  std::uint64_t cursor_ = 0;
};

}  // namespace linkmatch
