#pragma once

#include <cstdint>
#include <vector>

#include "linkmatch/hgraph.hpp"

namespace linkmatch {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr double kDefaultSlack = 1e-9;
inline constexpr long kDefaultIterationCap = 1'000'000;

struct SpectralReport {
  double value = 0.0;     // largest adjacency eigenvalue
  double residual = 0.0;  // max over components of ||Ax - value_c x||_inf, ||x||_2 = 1
  long iterations = 0;    // summed over components
  double tolerance = kDefaultTolerance;
  int component_count = 0;
  bool converged = true;  // false: iteration cap hit, value is the best Rayleigh quotient
};

// Power iteration on A + I, run separately on every connected component from
// the all-ones vector. Deterministic for fixed (g, tolerance).
SpectralReport spectral_radius(const Graph2& g, double tolerance = kDefaultTolerance,
                               long iteration_cap = kDefaultIterationCap);

// (-1 + sqrt(1 + 8m)) / 2
double stanley_bound(long m);

// Per connected component (n_c, m_c, delta_c):
//   (delta_c - 1 + sqrt((delta_c + 1)^2 + 4(2 m_c - delta_c n_c))) / 2,
// maximised over components. 0 for an edgeless graph.
double hong_bound(const Graph2& g);

// (4n/3 - 1) - (rho(G) + rho(complement G)); never below -tolerance.
double terpai_gap(const Graph2& g, double tolerance = kDefaultTolerance);

// Spectral radius of K_s joined with an independent set of n - s vertices:
//   (s - 1 + sqrt((s - 1)^2 + 4 s (n - s))) / 2.
double split_graph_rho(long s, long n);

// Link-graph threshold for a matching of size s + 1 in an n-vertex 3-graph;
// equals split_graph_rho(s, n - 1). Requires n >= s + 1.
double threshold_match(long s, long n);

// Largest spectral radius of an n-vertex graph with matching number at most m.
// Requires n >= 3m + 2.
double threshold_fyz(long m, long n);

// Strict comparison with a slack band: greater iff value > threshold + slack,
// less iff value < threshold - slack, indeterminate otherwise.
enum class Comparison { greater, less, indeterminate };
Comparison compare_strict(double value, double threshold, double slack = kDefaultSlack);

struct CommonEdgesVerdict {
  enum class Kind { not_applicable, holds, violated };
  Kind kind = Kind::not_applicable;
  int n = 0;
  double gamma = 0.0;
  double spectral_sum = 0.0;
  double required_sum = 0.0;        // (4/3 + gamma) n
  long intersection = 0;            // |E(G1) ∩ E(G2)|
  double required_intersection = 0; // gamma^2 n^2 / 2
};

// If rho(G1) + rho(G2) >= (4/3 + gamma) n, checks that the graphs share at
// least gamma^2 n^2 / 2 edges. The implication is only claimed for large n, so
// a violation at small n is a data point, not an error. Throws on mismatched
// orders or gamma outside (0, 1/4).
CommonEdgesVerdict common_edges_check(const Graph2& g1, const Graph2& g2, double gamma,
                                      double tolerance = kDefaultTolerance);

// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph2& g);

// Precomputed spectral radii of every graph on k <= 7 vertices, indexed by
// the edge mask over lexicographically ordered pairs.
class SpectrumTable {
 public:
  explicit SpectrumTable(int order, double tolerance = kDefaultTolerance);

  int order() const { return order_; }
  double operator[](std::uint64_t mask) const { return values_[mask]; }
  double lookup(const Graph2& g) const;

  static std::uint64_t mask_of(const Graph2& g);
  static Graph2 graph_of(int order, std::uint64_t mask);

 private:
  int order_;
  std::vector<double> values_;
};

}  // namespace linkmatch
