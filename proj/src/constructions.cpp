#include "linkmatch/constructions.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "linkmatch/spectral.hpp"

namespace linkmatch {

namespace {

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0,1]");
}

}  // namespace

std::string Family::tag() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::h1: os << "H1(" << s << "," << n << ")"; break;
    case Kind::h2: os << "H2(" << s << "," << n << ")"; break;
    case Kind::complete: os << "complete(" << n << ")"; break;
    case Kind::random: os << "random(" << n << "," << p << "," << seed << ")"; break;
    case Kind::file: os << "file"; break;
  }
  return os.str();
}

LabeledInstance h1(long s, int n) {
  if (n < 3 || s < 1 || s > n) throw std::invalid_argument("h1: need 1 <= s <= n and n >= 3");
  std::vector<Triple> edges;
  for (const auto& t : all_triples(n))
    if (t[0] <= s) edges.push_back(t);

  LabeledInstance out{Hypergraph3(n, std::move(edges)), {Family::Kind::h1, s, n, 0.0, 0}, {}};
  // Links of v > s are K_s joined with n-1-s isolated vertices; links of
  // v <= s are K_{n-1}.
  out.expected.min_link_rho = s < n ? split_graph_rho(s, n - 1) : static_cast<double>(n - 2);
  out.expected.nu = std::min<long>(s, n / 3);
  if (n >= 3 * s) out.expected.nu_frac = Rational(s);
  return out;
}

LabeledInstance h2(long s, int n) {
  if (n < 3 || s < 1 || 2 * s - 1 > n) throw std::invalid_argument("h2: need s >= 1, 2s-1 <= n and n >= 3");
  const long hub = 2 * s - 1;
  std::vector<Triple> edges;
  for (const auto& t : all_triples(n)) {
    int inside = (t[0] <= hub) + (t[1] <= hub) + (t[2] <= hub);
    if (inside >= 2) edges.push_back(t);
  }
  LabeledInstance out{Hypergraph3(n, std::move(edges)), {Family::Kind::h2, s, n, 0.0, 0}, {}};
  // A vertex outside the hub sees K_{2s-1} plus isolated vertices.
  out.expected.min_link_rho = hub < n ? static_cast<double>(2 * s - 2) : static_cast<double>(n - 2);
  // Every edge uses two hub vertices, so nu <= s-1; reached once s-1
  // outside vertices exist.
  if (n - hub >= s - 1) out.expected.nu = s - 1;
  // Hub vertices each carry load at most 1 and every edge uses two of them;
  // spreading weight over hub pairs reaches (2s-1)/2 once the outside
  // vertices can absorb it.
  if (s >= 2 && 2 * (n - hub) >= hub) out.expected.nu_frac = Rational(hub, 2);
  return out;
}

LabeledInstance complete_instance(int n) {
  if (n < 0) throw std::invalid_argument("complete_instance: negative order");
  LabeledInstance out{Hypergraph3::complete(n), {Family::Kind::complete, 0, n, 0.0, 0}, {}};
  if (n >= 3) {
    out.expected.min_link_rho = static_cast<double>(n - 2);
    out.expected.nu = n / 3;
    out.expected.nu_frac = Rational(n, 3);
  }
  return out;
}

LabeledInstance random_3graph(int n, double p, std::uint64_t seed) {
  check_p(p);
  if (n < 0) throw std::invalid_argument("random_3graph: negative order");
  std::mt19937_64 rng(seed);
  std::vector<Triple> edges;
  for (const auto& t : all_triples(n))
    if (unit_draw(rng) < p) edges.push_back(t);
  return {Hypergraph3(n, std::move(edges)), {Family::Kind::random, 0, n, p, seed}, {}};
}

LabeledGraph split_graph(long s, int n) {
  if (s < 0 || s > n) throw std::invalid_argument("split_graph: need 0 <= s <= n");
  Graph2 g = join(Graph2::complete(static_cast<int>(s)), Graph2::empty(n - static_cast<int>(s)));
  return {std::move(g), split_graph_rho(s, n)};
}

Graph2 random_graph(int n, double p, std::uint64_t seed) {
  check_p(p);
  std::mt19937_64 rng(seed);
  std::vector<Pair> edges;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      if (unit_draw(rng) < p) edges.emplace_back(a, b);
  return Graph2(n, std::move(edges));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ThreeGraphStream::ThreeGraphStream(int n) : n_(n), triples_(all_triples(n)) {
  if (n < 0 || triples_.size() > 24) {
    throw std::invalid_argument("enumerate_3graphs: exhaustive mode needs C(n,3) <= 24 (n <= 6)");
  }
  count_ = std::uint64_t{1} << triples_.size();
}

Hypergraph3 ThreeGraphStream::at(std::uint64_t mask) const {
  std::vector<Triple> edges;
  for (std::size_t i = 0; i < triples_.size(); ++i)
    if (mask >> i & 1) edges.push_back(triples_[i]);
  return Hypergraph3(n_, std::move(edges));
}

std::optional<Hypergraph3> ThreeGraphStream::next() {
  if (cursor_ >= count_) return std::nullopt;
  return at(cursor_++);
}

}  // namespace linkmatch
