#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linkmatch/hgraph.hpp"
#include "linkmatch/rational.hpp"

namespace linkmatch {

inline constexpr long kDefaultNodeBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultLpLimit = 2000;

struct Matching3 {
  std::vector<Triple> edges;

  std::size_t size() const { return edges.size(); }
  bool operator==(const Matching3&) const = default;
};

// True iff every edge belongs to h and the edges are pairwise disjoint.
bool is_matching(const Hypergraph3& h, const Matching3& m);
bool is_matching(const Graph2& g, const std::vector<Pair>& pairs);

struct GraphMatching {
  int size = 0;
  std::vector<Pair> pairs;  // each (a,b) with a < b, sorted
};

// Maximum matching of a general graph (Edmonds' blossom algorithm).
GraphMatching max_matching_graph(const Graph2& g);

struct MatchingSearch {
  int size = 0;          // best matching found
  Matching3 matching;    // witness of `size`
  bool exact = false;    // true: size == nu(H)
  bool reached_target = false;
  long nodes = 0;
};

struct SearchOptions {
  long budget = kDefaultNodeBudget;
  // Stop as soon as a matching of this size is found; 0 = maximise.
  int target = 0;
  // Use floor(nu*) from the exact LP as a root bound when C(n,3) is within
  // this limit.
  std::uint64_t lp_limit = kDefaultLpLimit;
};

// Branch and bound over edge inclusion. Branches on the lowest-labelled vertex
// that still has a live edge: each live incident edge in lexicographic order,
// then "leave it uncovered". Prunes with floor(free/3) and a greedy
// hitting-set bound.
MatchingSearch max_matching_3graph(const Hypergraph3& h, const SearchOptions& options = {});

// Convenience wrapper: searches for a matching with at least k edges.
MatchingSearch find_matching_of_size(const Hypergraph3& h, int k, long budget = kDefaultNodeBudget);

struct HittingSetResult {
  bool valid = false;
  long bound = 0;                 // |C| when valid
  std::optional<Triple> witness;  // an edge missing C when not valid
};

// If C meets every edge then nu(H) <= |C|.
HittingSetResult hitting_set_bound(const Hypergraph3& h, const VertexSet& cover);

struct FractionalAssignment {
  enum class Kind { matching, cover };
  Kind kind = Kind::matching;
  // Indexed by edge position in h.edges() (matching) or by vertex - 1 (cover).
  std::vector<Rational> weights;
  Rational value;
};

// Exact feasibility of an assignment for h; the value must equal the weight sum.
bool is_feasible(const Hypergraph3& h, const FractionalAssignment& f);

struct DualityCertificate {
  FractionalAssignment primal;  // maximum fractional matching
  FractionalAssignment dual;    // minimum fractional vertex cover
  long pivots = 0;

  // primal.value == dual.value and both feasible: each is optimal.
  bool verify(const Hypergraph3& h) const;
};

class LpTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solves the fractional matching LP and its cover dual exactly. Throws
// LpTooLarge when C(n,3) exceeds `limit` and `allow_large` is false.
DualityCertificate fractional_matching(const Hypergraph3& h, std::uint64_t limit = kDefaultLpLimit,
                                       bool allow_large = false);

struct PerfectFractional {
  bool perfect = false;
  Rational nu_frac;
  std::optional<FractionalAssignment> witness;  // every vertex constraint tight
};

// nu*(H) == n/3 exactly.
PerfectFractional has_perfect_fractional_matching(const Hypergraph3& h,
                                                  std::uint64_t limit = kDefaultLpLimit,
                                                  bool allow_large = false);

// Vertices with degree > 3 s (n - 2).
VertexSet high_degree_set(const Hypergraph3& h, long s);

struct GreedyExtension {
  bool ok = false;
  Matching3 matching;
  Vertex stuck = 0;  // first vertex of R with no available edge
};

// Adds one edge through each vertex of R, visiting R by decreasing degree
// (ties by label) and taking the lexicographically smallest edge that avoids
// every used vertex and every unvisited vertex of R.
// Throws std::invalid_argument when m0 is not a matching of H - R.
GreedyExtension greedy_extend(const Hypergraph3& h, const Matching3& m0, const VertexSet& r, long s);

}  // namespace linkmatch
