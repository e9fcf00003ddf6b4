#include "linkmatch/hgraph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace linkmatch {

namespace {

void check_vertex(int n, Vertex v, const char* what) {
  if (v < 1 || v > n) {
    throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                " outside 1.." + std::to_string(n));
  }
}

std::vector<Vertex> complement_members(const VertexSet& drop, int n) {
  std::vector<Vertex> keep;
  keep.reserve(n - drop.size());
  for (Vertex v = 1; v <= n; ++v) {
    if (!drop.contains(v)) keep.push_back(v);
  }
  return keep;
}

}  // namespace

Triple::Triple(Vertex a, Vertex b, Vertex c) : v{a, b, c} {
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2]) {
    throw std::invalid_argument("repeated vertex in triple " + to_string(*this));
  }
}

std::string to_string(const Triple& t) {
  return "{" + std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
         std::to_string(t.v[2]) + "}";
}

VertexSet::VertexSet(int universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    check_vertex(universe_, members_[i], "VertexSet");
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw std::invalid_argument("VertexSet: duplicate vertex " + std::to_string(members_[i]));
    }
  }
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

LabelMap::LabelMap(int old_order, std::vector<Vertex> kept)
    : old_of_(std::move(kept)), new_of_(old_order + 1, 0) {
  for (std::size_t i = 0; i < old_of_.size(); ++i) {
    check_vertex(old_order, old_of_[i], "LabelMap");
    if (i > 0 && old_of_[i] <= old_of_[i - 1]) {
      throw std::invalid_argument("LabelMap: kept vertices must be strictly increasing");
    }
    new_of_[old_of_[i]] = static_cast<Vertex>(i + 1);
  }
}

LabelMap LabelMap::identity(int n) {
  std::vector<Vertex> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  return LabelMap(n, std::move(all));
}

LabelMap LabelMap::compose(const LabelMap& inner) const {
  std::vector<Vertex> kept;
  kept.reserve(inner.size());
  for (Vertex v : inner.kept()) kept.push_back(to_old(v));
  return LabelMap(static_cast<int>(new_of_.size()) - 1, std::move(kept));
}

Graph2::Graph2(int n, std::vector<Pair> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("Graph2: negative order");
  for (auto& [a, b] : edges_) {
    check_vertex(n_, a, "Graph2");
    check_vertex(n_, b, "Graph2");
    if (a == b) throw std::invalid_argument("Graph2: loop at " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("Graph2: duplicate edge");
  }
  adj_.assign(n_, {});
  bits_.assign(n_, boost::dynamic_bitset<>(n_));
  for (auto [a, b] : edges_) {
    adj_[a - 1].push_back(b);
    adj_[b - 1].push_back(a);
    bits_[a - 1].set(b - 1);
    bits_[b - 1].set(a - 1);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

Graph2 Graph2::complete(int n) {
  std::vector<Pair> edges;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) edges.emplace_back(a, b);
  return Graph2(n, std::move(edges));
}

bool Graph2::adjacent(Vertex a, Vertex b) const {
  if (a < 1 || a > n_ || b < 1 || b > n_) return false;
  return bits_[a - 1].test(b - 1);
}

Hypergraph3::Hypergraph3(int n, std::vector<Triple> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("Hypergraph3: negative order");
  for (const auto& t : edges_) {
    for (Vertex v : t.v) check_vertex(n_, v, "Hypergraph3");
    if (t.v[0] >= t.v[1] || t.v[1] >= t.v[2]) {
      throw std::invalid_argument("Hypergraph3: triple not strictly increasing " + to_string(t));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("Hypergraph3: duplicate edge " + to_string(*dup));
  }
  incidence_.assign(n_, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (Vertex v : edges_[i].v) incidence_[v - 1].push_back(i);
  }
}

Hypergraph3 Hypergraph3::complete(int n) { return Hypergraph3(n, all_triples(n)); }

bool Hypergraph3::contains(const Triple& t) const {
  return std::binary_search(edges_.begin(), edges_.end(), t);
}

std::optional<std::size_t> Hypergraph3::index_of(const Triple& t) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), t);
  if (it == edges_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

LinkGraph link_graph(const Hypergraph3& h, Vertex v) {
  check_vertex(h.order(), v, "link_graph");
  std::vector<Vertex> kept;
  kept.reserve(h.order() - 1);
  for (Vertex u = 1; u <= h.order(); ++u)
    if (u != v) kept.push_back(u);
  LabelMap labels(h.order(), std::move(kept));

  std::vector<Pair> pairs;
  pairs.reserve(h.degree(v));
  for (std::size_t idx : h.incident(v)) {
    const Triple& t = h.edges()[idx];
    std::array<Vertex, 2> rest{};
    int k = 0;
    for (Vertex u : t.v)
      if (u != v) rest[k++] = labels.to_new(u);
    pairs.emplace_back(rest[0], rest[1]);
  }
  return {Graph2(h.order() - 1, std::move(pairs)), std::move(labels)};
}

long degree(const Hypergraph3& h, const VertexSet& t) {
  if (t.size() > 3) throw std::invalid_argument("degree: |T| must be at most 3");
  for (Vertex v : t) check_vertex(h.order(), v, "degree");
  if (t.empty()) return static_cast<long>(h.size());
  // Scan the incidence list of the first member.
  long count = 0;
  for (std::size_t idx : h.incident(t.members().front())) {
    const Triple& e = h.edges()[idx];
    bool all = true;
    for (Vertex v : t)
      if (!e.contains(v)) all = false;
    if (all) ++count;
  }
  return count;
}

long min_l_degree(const Hypergraph3& h, int l) {
  const int n = h.order();
  if (l < 0 || l > 2) throw std::invalid_argument("min_l_degree: l must be 0, 1 or 2");
  if (n < l) throw std::invalid_argument("min_l_degree: n < l");
  if (l == 0) return static_cast<long>(h.size());
  if (l == 1) {
    long best = std::numeric_limits<long>::max();
    for (Vertex v = 1; v <= n; ++v) best = std::min<long>(best, h.degree(v));
    return best;
  }
  std::vector<long> codeg(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : h.edges()) {
    codeg[(e[0] - 1) * n + e[1] - 1]++;
    codeg[(e[0] - 1) * n + e[2] - 1]++;
    codeg[(e[1] - 1) * n + e[2] - 1]++;
  }
  long best = std::numeric_limits<long>::max();
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) best = std::min(best, codeg[(a - 1) * n + b - 1]);
  return best;
}

long max_codegree(const Hypergraph3& h) {
  const int n = h.order();
  if (n < 2) return 0;
  std::vector<long> codeg(static_cast<std::size_t>(n) * n, 0);
  long best = 0;
  for (const auto& e : h.edges()) {
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      long& c = codeg[(e[i] - 1) * n + e[j] - 1];
      best = std::max(best, ++c);
    }
  }
  return best;
}

Graph2 complement(const Graph2& g) {
  std::vector<Pair> edges;
  for (Vertex a = 1; a <= g.order(); ++a)
    for (Vertex b = a + 1; b <= g.order(); ++b)
      if (!g.adjacent(a, b)) edges.emplace_back(a, b);
  return Graph2(g.order(), std::move(edges));
}

Graph2 join(const Graph2& g1, const Graph2& g2) {
  const int n1 = g1.order();
  std::vector<Pair> edges = g1.edges();
  for (auto [a, b] : g2.edges()) edges.emplace_back(a + n1, b + n1);
  for (Vertex a = 1; a <= n1; ++a)
    for (Vertex b = 1; b <= g2.order(); ++b) edges.emplace_back(a, b + n1);
  return Graph2(n1 + g2.order(), std::move(edges));
}

InducedHypergraph induced(const Hypergraph3& h, const VertexSet& keep) {
  for (Vertex v : keep) check_vertex(h.order(), v, "induced");
  LabelMap labels(h.order(), keep.members());
  std::vector<Triple> edges;
  for (const auto& e : h.edges()) {
    Vertex a = labels.to_new(e[0]), b = labels.to_new(e[1]), c = labels.to_new(e[2]);
    if (a && b && c) edges.emplace_back(a, b, c);
  }
  return {Hypergraph3(static_cast<int>(keep.size()), std::move(edges)), std::move(labels)};
}

InducedHypergraph remove_vertices(const Hypergraph3& h, const VertexSet& drop) {
  for (Vertex v : drop) check_vertex(h.order(), v, "remove_vertices");
  return induced(h, VertexSet(h.order(), complement_members(drop, h.order())));
}

InducedGraph induced(const Graph2& g, const VertexSet& keep) {
  for (Vertex v : keep) check_vertex(g.order(), v, "induced");
  LabelMap labels(g.order(), keep.members());
  std::vector<Pair> edges;
  for (auto [a, b] : g.edges()) {
    Vertex x = labels.to_new(a), y = labels.to_new(b);
    if (x && y) edges.emplace_back(x, y);
  }
  return {Graph2(static_cast<int>(keep.size()), std::move(edges)), std::move(labels)};
}

InducedGraph graph_remove_vertices(const Graph2& g, const VertexSet& drop) {
  for (Vertex v : drop) check_vertex(g.order(), v, "graph_remove_vertices");
  return induced(g, VertexSet(g.order(), complement_members(drop, g.order())));
}

Hypergraph3 with_edge(const Hypergraph3& h, const Triple& t) {
  auto edges = h.edges();
  edges.push_back(t);
  return Hypergraph3(h.order(), std::move(edges));
}

Graph2 with_edge(const Graph2& g, Pair p) {
  auto edges = g.edges();
  edges.push_back(p);
  return Graph2(g.order(), std::move(edges));
}

Graph2 relabel(const Graph2& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("relabel: size");
  std::vector<Pair> edges;
  edges.reserve(g.size());
  for (auto [a, b] : g.edges()) edges.emplace_back(perm[a - 1], perm[b - 1]);
  return Graph2(g.order(), std::move(edges));
}

Hypergraph3 relabel(const Hypergraph3& h, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != h.order()) throw std::invalid_argument("relabel: size");
  std::vector<Triple> edges;
  edges.reserve(h.size());
  for (const auto& e : h.edges()) edges.emplace_back(perm[e[0] - 1], perm[e[1] - 1], perm[e[2] - 1]);
  return Hypergraph3(h.order(), std::move(edges));
}

std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  out.reserve(binomial(n, 3));
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      for (Vertex c = b + 1; c <= n; ++c) out.emplace_back(a, b, c);
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace linkmatch
