#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkmatch/hgraph.hpp"
#include "linkmatch/matching.hpp"
#include "linkmatch/rational.hpp"
#include "linkmatch/spectral.hpp"

namespace linkmatch {

enum class Condition { holds, fails, indeterminate };

// thm12 / conj_matching: a matching of size s+1.
// thm13: a fractional matching of size s+1, perfect when n = 3s+3.
// conj_pm: a perfect matching.
enum class Mode { thm12, thm13, conj_matching, conj_pm };

// consistent: hypothesis held and the conclusion was confirmed.
// counterexample: the conjecture failed with an exact witness.
// bug_suspect: a proven statement failed inside its range.
// out_of_range: the conclusion failed but n is outside every claim's range.
// skipped: hypothesis did not hold, or the search budget ran out.
enum class Verdict { consistent, counterexample, bug_suspect, out_of_range, skipped };

std::string to_string(Condition c);
std::string to_string(Mode m);
std::string to_string(Verdict v);
std::optional<Mode> parse_mode(const std::string& text);

struct CheckOptions {
  double tolerance = kDefaultTolerance;
  double slack = kDefaultSlack;
  long budget = kDefaultNodeBudget;
  std::uint64_t lp_limit = kDefaultLpLimit;
  // Margin for the large-n perfect matching hypothesis rho > (2/3 + gamma) n.
  std::optional<double> gamma;
  // Optional lookup for link radii; used when its order is n - 1.
  const SpectrumTable* table = nullptr;
};

struct Witness {
  std::optional<Matching3> matching;
  std::optional<DualityCertificate> certificate;
};

struct CheckReport {
  std::string id;
  int n = 0;
  long s = 0;
  std::optional<Mode> mode;
  std::vector<std::pair<Vertex, double>> per_vertex_rho;
  double min_rho = 0.0;
  Vertex argmin = 0;
  double threshold = 0.0;
  Condition condition = Condition::fails;
  std::optional<double> large_n_threshold;  // (2/3 + gamma) n
  std::optional<Condition> large_n_condition;
  std::optional<long> nu;                   // exact matching number when known
  std::optional<Rational> nu_frac;
  std::optional<bool> perfect_matching;
  std::optional<bool> perfect_fractional;
  Verdict verdict = Verdict::skipped;
  std::vector<std::string> notes;
  Witness witness;
  std::optional<Hypergraph3> instance;  // attached to flagged search results
};

// Link spectral radii of every vertex against threshold_match(s, n).
// Requires s >= 0 and n >= s + 1.
CheckReport check_condition(const Hypergraph3& h, long s, const CheckOptions& options = {});

// check_condition followed, when the hypothesis holds, by an exact check of
// the mode's conclusion.
CheckReport verify_theorem(const Hypergraph3& h, long s, Mode mode, const CheckOptions& options = {});

struct ClosureCheck {
  bool ok = true;
  long pairs_checked = 0;
  // (missing dominated triple, edge dominating it)
  std::optional<std::pair<Triple, Triple>> violation;
};

// Shift-closure: for every edge {b1<b2<b3} and triple {a1<a2<a3} with
// a_i <= b_i, the triple is an edge. Scans every such pair.
ClosureCheck check_shift_closure(const Hypergraph3& h);

struct ShiftedPair {
  Hypergraph3 original;
  FractionalAssignment cover;  // minimum fractional vertex cover of original
  // order[k] is the original vertex given label k+1: weights descending,
  // ties by original label.
  std::vector<Vertex> order;
  Hypergraph3 shifted;         // triples with cover weight >= 1, new labels
  Rational nu_frac_original;
  Rational nu_frac_shifted;
  bool contains_original = false;  // relabelled original is a subgraph
  ClosureCheck closure;

  bool nu_frac_preserved() const { return nu_frac_original == nu_frac_shifted; }
  // Original vertex -> new label.
  std::vector<Vertex> permutation() const;
};

ShiftedPair shift(const Hypergraph3& h, std::uint64_t lp_limit = kDefaultLpLimit);

struct LiftResult {
  bool ok = false;
  int link_nu = 0;       // matching number of the link of the last vertex
  Matching3 matching;    // size s+1 in P.shifted when ok
};

// Takes a maximum matching of the link of vertex n in the shifted graph;
// when it has s+1 edges, pairs each of the first s+1 with a distinct unused
// vertex (smallest labels first). Requires n >= 3s + 3.
LiftResult lift_link_matching(const ShiftedPair& pair, long s);

// True iff the listed vertices of h split into disjoint edges of h.
bool has_perfect_matching_on(const Hypergraph3& h, std::vector<Vertex> vertices);

// All 6-sets A outside T with a perfect matching on A and on A ∪ T.
// Requires |T| = 3.
std::vector<VertexSet> absorbing_sets(const Hypergraph3& h, const VertexSet& t);

struct EdgeRemovalVerdict {
  enum class Kind { not_applicable, holds, violated };
  Kind kind = Kind::not_applicable;
  double rho = 0.0;
  double bound = 0.0;     // split_graph_rho(s, n)
  long sets_checked = 0;
  std::optional<VertexSet> violating_set;
  long edges_left = 0;    // for the violating set
  double required = 0.0;  // (s - r)(n - s) / 2 for the violating set
};

// If rho(G) > split_graph_rho(s, n) + slack, checks e(G - R) > (s - r)(n - s)/2
// for every R with |R| = r <= min(max_r, s). Requires n >= s + 1.
EdgeRemovalVerdict edge_removal_check(const Graph2& g, long s, long max_r,
                                      double tolerance = kDefaultTolerance,
                                      double slack = kDefaultSlack);

struct SearchSpace {
  enum class Kind { exhaustive, random };
  Kind kind = Kind::exhaustive;
  int n = 0;
  double p = 0.5;
  long samples = 0;
  std::uint64_t seed = 0;

  std::uint64_t size() const;
  std::string describe() const;
};

// Instance `index` of the space: bitmask `index` for exhaustive spaces,
// random_3graph(n, p, derive_seed(seed, index)) for random ones.
Hypergraph3 search_instance(const SearchSpace& space, std::uint64_t index);

struct SearchSummary {
  long instances = 0;
  long condition_holds = 0;
  long condition_fails = 0;
  long indeterminate = 0;
  long consistent = 0;
  long counterexample = 0;
  long bug_suspect = 0;
  long out_of_range = 0;
  long skipped = 0;
  long budget_exhausted = 0;
  // Reports with verdict counterexample, bug_suspect, out_of_range, or a
  // budget skip, ordered by instance index.
  std::vector<CheckReport> flagged;
};

// Applies verify_theorem to every instance. Work is split into index chunks
// across `threads` workers (0 = hardware concurrency); the summary does not
// depend on the thread count.
SearchSummary search(const SearchSpace& space, long s, Mode mode, const CheckOptions& options = {},
                     unsigned threads = 0);

}  // namespace linkmatch
