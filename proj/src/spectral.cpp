#include "linkmatch/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace linkmatch {

namespace {

struct ComponentResult {
  double value = 0.0;
  double residual = 0.0;
  long iterations = 0;
  bool converged = true;
};

// Power iteration restricted to one component; `local` maps vertex -> index
// inside the component.
ComponentResult component_radius(const Graph2& g, const std::vector<Vertex>& comp,
                                 const std::vector<int>& local, double tol, long cap) {
  const std::size_t k = comp.size();
  ComponentResult out;
  if (k < 2) return out;

  std::vector<double> x(k, 1.0 / std::sqrt(static_cast<double>(k)));
  std::vector<double> y(k);
  double best_residual = std::numeric_limits<double>::infinity();
  double best_value = 0.0;

  for (long it = 1; it <= cap; ++it) {
    for (std::size_t i = 0; i < k; ++i) {
      double s = 0.0;
      for (Vertex u : g.neighbors(comp[i])) s += x[local[u - 1]];
      y[i] = s;
    }
    double lambda = 0.0;
    for (std::size_t i = 0; i < k; ++i) lambda += x[i] * y[i];
    double residual = 0.0;
    for (std::size_t i = 0; i < k; ++i) residual = std::max(residual, std::abs(y[i] - lambda * x[i]));

    out.iterations = it;
    if (residual < best_residual) {
      best_residual = residual;
      best_value = lambda;
    }
    if (residual <= tol) break;

    // Shifted step: x <- (A + I) x, normalised.
    double norm = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      y[i] += x[i];
      norm += y[i] * y[i];
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / norm;
  }
  out.value = best_value;
  out.residual = best_residual;
  out.converged = best_residual <= tol;
  return out;
}

}  // namespace

std::vector<std::vector<Vertex>> connected_components(const Graph2& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s - 1]) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen[s - 1] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!seen[u - 1]) {
          seen[u - 1] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

SpectralReport spectral_radius(const Graph2& g, double tolerance, long iteration_cap) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("spectral_radius: tolerance must be positive");
  SpectralReport report;
  report.tolerance = tolerance;
  auto comps = connected_components(g);
  report.component_count = static_cast<int>(comps.size());

  std::vector<int> local(g.order(), -1);
  for (const auto& comp : comps) {
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i] - 1] = static_cast<int>(i);
    ComponentResult r = component_radius(g, comp, local, tolerance, iteration_cap);
    report.value = std::max(report.value, r.value);
    report.residual = std::max(report.residual, r.residual);
    report.iterations += r.iterations;
    report.converged = report.converged && r.converged;
  }
  return report;
}

double stanley_bound(long m) {
  if (m < 0) throw std::invalid_argument("stanley_bound: negative edge count");
  return (-1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(m))) / 2.0;
}

double hong_bound(const Graph2& g) {
  double best = 0.0;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    long m2 = 0;  // 2 m_c
    long delta = std::numeric_limits<long>::max();
    for (Vertex v : comp) {
      m2 += g.degree(v);
      delta = std::min<long>(delta, g.degree(v));
    }
    const double nc = static_cast<double>(comp.size());
    const double d = static_cast<double>(delta);
    const double disc = (d + 1) * (d + 1) + 4.0 * (static_cast<double>(m2) - d * nc);
    best = std::max(best, (d - 1 + std::sqrt(disc)) / 2.0);
  }
  return best;
}

double terpai_gap(const Graph2& g, double tolerance) {
  const double n = g.order();
  double sum = spectral_radius(g, tolerance).value + spectral_radius(complement(g), tolerance).value;
  return (4.0 * n / 3.0 - 1.0) - sum;
}

double split_graph_rho(long s, long n) {
  if (s < 0 || n < s) throw std::invalid_argument("split_graph_rho: need 0 <= s <= n");
  const double sd = static_cast<double>(s);
  const double disc = (sd - 1) * (sd - 1) + 4.0 * sd * static_cast<double>(n - s);
  return (sd - 1 + std::sqrt(disc)) / 2.0;
}

double threshold_match(long s, long n) {
  if (s < 0 || n < s + 1) throw std::invalid_argument("threshold_match: need s >= 0 and n >= s + 1");
  return split_graph_rho(s, n - 1);
}

double threshold_fyz(long m, long n) {
  if (m < 0 || n < 3 * m + 2) {
    throw std::invalid_argument("threshold_fyz: need n >= 3m + 2");
  }
  if (n == 3 * m + 2) return 2.0 * static_cast<double>(m);
  return split_graph_rho(m, n);
}

Comparison compare_strict(double value, double threshold, double slack) {
  if (value > threshold + slack) return Comparison::greater;
  if (value < threshold - slack) return Comparison::less;
  return Comparison::indeterminate;
}

CommonEdgesVerdict common_edges_check(const Graph2& g1, const Graph2& g2, double gamma,
                                      double tolerance) {
  if (g1.order() != g2.order()) throw std::invalid_argument("common_edges_check: orders differ");
  if (!(gamma > 0.0 && gamma < 0.25)) {
    throw std::invalid_argument("common_edges_check: gamma must lie in (0, 1/4)");
  }
  CommonEdgesVerdict v;
  v.n = g1.order();
  v.gamma = gamma;
  const double n = v.n;
  v.spectral_sum = spectral_radius(g1, tolerance).value + spectral_radius(g2, tolerance).value;
  v.required_sum = (4.0 / 3.0 + gamma) * n;
  v.required_intersection = gamma * gamma * n * n / 2.0;
  if (v.spectral_sum < v.required_sum) return v;

  const auto& e1 = g1.edges();
  const auto& e2 = g2.edges();
  std::vector<Pair> common;
  std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(common));
  v.intersection = static_cast<long>(common.size());
  v.kind = static_cast<double>(v.intersection) >= v.required_intersection
               ? CommonEdgesVerdict::Kind::holds
               : CommonEdgesVerdict::Kind::violated;
  return v;
}

SpectrumTable::SpectrumTable(int order, double tolerance) : order_(order) {
  if (order < 0 || order > 7) throw std::invalid_argument("SpectrumTable: order must be at most 7");
  const int pairs = order * (order - 1) / 2;
  const std::uint64_t count = std::uint64_t{1} << pairs;
  values_.resize(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    values_[mask] = spectral_radius(graph_of(order, mask), tolerance).value;
  }
}

double SpectrumTable::lookup(const Graph2& g) const {
  if (g.order() != order_) throw std::invalid_argument("SpectrumTable: order mismatch");
  return values_[mask_of(g)];
}

std::uint64_t SpectrumTable::mask_of(const Graph2& g) {
  const int n = g.order();
  std::uint64_t mask = 0;
  for (auto [a, b] : g.edges()) {
    // Index of pair (a,b) in lexicographic order over 1..n.
    const int idx = (a - 1) * (2 * n - a) / 2 + (b - a - 1);
    mask |= std::uint64_t{1} << idx;
  }
  return mask;
}

Graph2 SpectrumTable::graph_of(int order, std::uint64_t mask) {
  std::vector<Pair> edges;
  int idx = 0;
  for (Vertex a = 1; a <= order; ++a)
    for (Vertex b = a + 1; b <= order; ++b, ++idx)
      if (mask >> idx & 1) edges.emplace_back(a, b);
  return Graph2(order, std::move(edges));
}

}  // namespace linkmatch
