#include "linkmatch/matching.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "linkmatch/simplex.hpp"

namespace linkmatch {

bool is_matching(const Hypergraph3& h, const Matching3& m) {
  std::vector<char> used(h.order() + 1, 0);
  for (const auto& e : m.edges) {
    if (!h.contains(e)) return false;
    for (Vertex v : e.v) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

bool is_matching(const Graph2& g, const std::vector<Pair>& pairs) {
  std::vector<char> used(g.order() + 1, 0);
  for (auto [a, b] : pairs) {
    if (!g.adjacent(a, b) || used[a] || used[b]) return false;
    used[a] = used[b] = 1;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Edmonds' blossom algorithm, BFS form with explicit base array.

namespace {

class Blossom {
 public:
  explicit Blossom(const Graph2& g)
      : n_(g.order()), adj_(n_), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {
    for (int v = 0; v < n_; ++v)
      for (Vertex u : g.neighbors(v + 1)) adj_[v].push_back(u - 1);
  }

  void run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int u = augmenting_path_end(v);
      while (u != -1) {
        int pv = parent_[u];
        int next = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = next;
      }
    }
  }

  const std::vector<int>& mates() const { return match_; }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int augmenting_path_end(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          // Odd cycle: contract the blossom onto its base.
          int b = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace

GraphMatching max_matching_graph(const Graph2& g) {
  Blossom b(g);
  b.run();
  GraphMatching out;
  const auto& mate = b.mates();
  for (int v = 0; v < g.order(); ++v) {
    if (mate[v] > v) out.pairs.emplace_back(v + 1, mate[v] + 1);
  }
  out.size = static_cast<int>(out.pairs.size());
  return out;
}

// ---------------------------------------------------------------------------
// Branch and bound for 3-graphs.

namespace {

class MatchingBnB {
 public:
  MatchingBnB(const Hypergraph3& h, const SearchOptions& opt)
      : h_(h), opt_(opt), state_(h.order() + 1, kFree) {}

  MatchingSearch run() {
    global_ub_ = h_.order() / 3;
    dfs();
    MatchingSearch out;
    out.size = static_cast<int>(best_.size());
    out.matching.edges = best_;
    out.nodes = nodes_;
    out.reached_target = opt_.target > 0 && out.size >= opt_.target;
    out.exact = (!aborted_ && !early_stop_) || out.size >= global_ub_;
    return out;
  }

 private:
  enum : char { kFree = 0, kUsed = 1, kSkipped = 2 };

  bool live(std::size_t idx) const {
    const Triple& e = h_.edges()[idx];
    return state_[e[0]] == kFree && state_[e[1]] == kFree && state_[e[2]] == kFree;
  }

  bool halted() const { return aborted_ || early_stop_; }

  // Greedy max-degree hitting set over the live edges; true when it closes
  // with at most `limit` vertices (then nu of the live part is <= limit).
  bool hitting_set_within(long limit) const {
    std::vector<std::size_t> remaining;
    for (std::size_t i = 0; i < h_.size(); ++i)
      if (live(i)) remaining.push_back(i);
    std::vector<int> deg(h_.order() + 1);
    long picks = 0;
    while (!remaining.empty()) {
      if (++picks > limit) return false;
      std::fill(deg.begin(), deg.end(), 0);
      for (std::size_t i : remaining)
        for (Vertex v : h_.edges()[i].v) ++deg[v];
      Vertex pick = static_cast<Vertex>(std::max_element(deg.begin(), deg.end()) - deg.begin());
      std::erase_if(remaining, [&](std::size_t i) { return h_.edges()[i].contains(pick); });
    }
    return true;
  }

  void maybe_tighten_with_lp() {
    if (lp_tried_ || nodes_ < 4096) return;
    lp_tried_ = true;
    if (binomial(h_.order(), 3) > opt_.lp_limit) return;
    auto cert = fractional_matching(h_, opt_.lp_limit);
    long lp_floor = cert.primal.value.floor().get_si();
    global_ub_ = std::min<long>(global_ub_, lp_floor);
  }

  void record_if_better() {
    if (current_.size() <= best_.size()) return;
    best_ = current_;
    if (opt_.target > 0 && static_cast<int>(best_.size()) >= opt_.target) early_stop_ = true;
    if (static_cast<long>(best_.size()) >= global_ub_) early_stop_ = true;
  }

  void dfs() {
    if (++nodes_ > opt_.budget) {
      aborted_ = true;
      return;
    }
    maybe_tighten_with_lp();
    record_if_better();
    if (halted()) return;
    if (static_cast<long>(best_.size()) >= global_ub_) {
      early_stop_ = true;
      return;
    }

    Vertex branch = 0;
    int free_live = 0;
    for (Vertex v = 1; v <= h_.order(); ++v) {
      if (state_[v] != kFree) continue;
      bool has_live = false;
      for (std::size_t idx : h_.incident(v))
        if (live(idx)) {
          has_live = true;
          break;
        }
      if (!has_live) continue;
      ++free_live;
      if (branch == 0) branch = v;
    }
    if (branch == 0) return;

    const long cur = static_cast<long>(current_.size());
    const long best = static_cast<long>(best_.size());
    if (cur + free_live / 3 <= best) return;
    if (best - cur >= 0 && hitting_set_within(best - cur)) return;

    for (std::size_t idx : h_.incident(branch)) {
      if (!live(idx)) continue;
      const Triple& e = h_.edges()[idx];
      for (Vertex v : e.v) state_[v] = kUsed;
      current_.push_back(e);
      dfs();
      current_.pop_back();
      for (Vertex v : e.v) state_[v] = kFree;
      if (halted()) return;
    }
    state_[branch] = kSkipped;
    dfs();
    state_[branch] = kFree;
  }

  const Hypergraph3& h_;
  SearchOptions opt_;
  std::vector<char> state_;
  std::vector<Triple> current_, best_;
  long nodes_ = 0;
  long global_ub_ = 0;
  bool aborted_ = false;
  bool early_stop_ = false;
  bool lp_tried_ = false;
};

}  // namespace

MatchingSearch max_matching_3graph(const Hypergraph3& h, const SearchOptions& options) {
  if (options.budget <= 0) throw std::invalid_argument("max_matching_3graph: budget must be positive");
  return MatchingBnB(h, options).run();
}

MatchingSearch find_matching_of_size(const Hypergraph3& h, int k, long budget) {
  SearchOptions opt;
  opt.budget = budget;
  opt.target = std::max(k, 1);
  MatchingSearch r = max_matching_3graph(h, opt);
  if (k <= 0) r.reached_target = true;
  return r;
}

HittingSetResult hitting_set_bound(const Hypergraph3& h, const VertexSet& cover) {
  HittingSetResult r;
  for (const auto& e : h.edges()) {
    if (!cover.contains(e[0]) && !cover.contains(e[1]) && !cover.contains(e[2])) {
      r.witness = e;
      return r;
    }
  }
  r.valid = true;
  r.bound = static_cast<long>(cover.size());
  return r;
}

// ---------------------------------------------------------------------------
// Fractional matchings.

bool is_feasible(const Hypergraph3& h, const FractionalAssignment& f) {
  const Rational zero(0), one(1);
  Rational sum(0);
  for (const auto& w : f.weights) {
    if (w < zero || w > one) return false;
    sum += w;
  }
  if (sum != f.value) return false;

  if (f.kind == FractionalAssignment::Kind::matching) {
    if (f.weights.size() != h.size()) return false;
    for (Vertex v = 1; v <= h.order(); ++v) {
      Rational load(0);
      for (std::size_t idx : h.incident(v)) load += f.weights[idx];
      if (load > one) return false;
    }
  } else {
    if (f.weights.size() != static_cast<std::size_t>(h.order())) return false;
    for (const auto& e : h.edges()) {
      Rational cover = f.weights[e[0] - 1] + f.weights[e[1] - 1] + f.weights[e[2] - 1];
      if (cover < one) return false;
    }
  }
  return true;
}

bool DualityCertificate::verify(const Hypergraph3& h) const {
  return primal.kind == FractionalAssignment::Kind::matching &&
         dual.kind == FractionalAssignment::Kind::cover && primal.value == dual.value &&
         is_feasible(h, primal) && is_feasible(h, dual);
}

DualityCertificate fractional_matching(const Hypergraph3& h, std::uint64_t limit, bool allow_large) {
  const int n = h.order();
  if (!allow_large && binomial(n, 3) > limit) {
    throw LpTooLarge("fractional_matching: C(" + std::to_string(n) + ",3) exceeds the exact LP limit " +
                     std::to_string(limit));
  }
  PackingLp lp;
  lp.rows = n;
  lp.cols = static_cast<int>(h.size());
  lp.a.assign(static_cast<std::size_t>(lp.rows) * lp.cols, 0);
  for (std::size_t j = 0; j < h.size(); ++j)
    for (Vertex v : h.edges()[j].v) lp.a[static_cast<std::size_t>(v - 1) * lp.cols + j] = 1;
  lp.b.assign(n, 1);
  lp.c.assign(lp.cols, 1);

  LpSolution sol = solve_packing_lp(lp);
  if (sol.status != LpSolution::Status::optimal) {
    throw std::logic_error("fractional_matching: packing LP reported unbounded");
  }

  DualityCertificate cert;
  cert.pivots = sol.pivots;
  cert.primal.kind = FractionalAssignment::Kind::matching;
  cert.primal.weights = std::move(sol.primal);
  cert.dual.kind = FractionalAssignment::Kind::cover;
  cert.dual.weights = std::move(sol.dual);
  for (const auto& w : cert.primal.weights) cert.primal.value += w;
  for (const auto& w : cert.dual.weights) cert.dual.value += w;
  if (!cert.verify(h)) {
    throw std::logic_error("fractional_matching: duality certificate failed verification");
  }
  return cert;
}

PerfectFractional has_perfect_fractional_matching(const Hypergraph3& h, std::uint64_t limit,
                                                  bool allow_large) {
  auto cert = fractional_matching(h, limit, allow_large);
  PerfectFractional out;
  out.nu_frac = cert.primal.value;
  out.perfect = cert.primal.value == Rational(h.order(), 3);
  if (out.perfect) out.witness = std::move(cert.primal);
  return out;
}

// ---------------------------------------------------------------------------

VertexSet high_degree_set(const Hypergraph3& h, long s) {
  const long cut = 3 * s * (static_cast<long>(h.order()) - 2);
  std::vector<Vertex> members;
  for (Vertex v = 1; v <= h.order(); ++v)
    if (h.degree(v) > cut) members.push_back(v);
  return VertexSet(h.order(), std::move(members));
}

GreedyExtension greedy_extend(const Hypergraph3& h, const Matching3& m0, const VertexSet& r, long s) {
  (void)s;
  if (!is_matching(h, m0)) throw std::invalid_argument("greedy_extend: M0 is not a matching of H");
  std::vector<char> used(h.order() + 1, 0), pending(h.order() + 1, 0);
  for (const auto& e : m0.edges) {
    for (Vertex v : e.v) {
      if (r.contains(v)) throw std::invalid_argument("greedy_extend: M0 meets R");
      used[v] = 1;
    }
  }
  for (Vertex v : r) pending[v] = 1;

  std::vector<Vertex> order = r.members();
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });

  GreedyExtension out;
  out.matching = m0;
  for (Vertex v : order) {
    pending[v] = 0;
    const Triple* pick = nullptr;
    for (std::size_t idx : h.incident(v)) {
      const Triple& e = h.edges()[idx];
      bool ok = true;
      for (Vertex u : e.v)
        if (used[u] || pending[u]) ok = false;
      if (ok) {
        pick = &e;
        break;
      }
    }
    if (!pick) {
      out.stuck = v;
      return out;
    }
    for (Vertex u : pick->v) used[u] = 1;
    out.matching.edges.push_back(*pick);
  }
  out.ok = true;
  return out;
}

}  // namespace linkmatch
