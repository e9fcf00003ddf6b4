#include "linkmatch/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "linkmatch/constructions.hpp"

namespace linkmatch {

std::string to_string(Condition c) {
  switch (c) {
    case Condition::holds: return "holds";
    case Condition::fails: return "fails";
    case Condition::indeterminate: return "indeterminate";
  }
  return "?";
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::thm12: return "thm12";
    case Mode::thm13: return "thm13";
    case Mode::conj_matching: return "conj-matching";
    case Mode::conj_pm: return "conj-pm";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::counterexample: return "counterexample";
    case Verdict::bug_suspect: return "bug_suspect";
    case Verdict::out_of_range: return "out_of_range";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

std::optional<Mode> parse_mode(const std::string& text) {
  if (text == "thm12") return Mode::thm12;
  if (text == "thm13") return Mode::thm13;
  if (text == "conj-matching" || text == "conj_matching") return Mode::conj_matching;
  if (text == "conj-pm" || text == "conj_pm") return Mode::conj_pm;
  return std::nullopt;
}

namespace {

Condition classify(double value, double threshold, double slack) {
  switch (compare_strict(value, threshold, slack)) {
    case Comparison::greater: return Condition::holds;
    case Comparison::less: return Condition::fails;
    case Comparison::indeterminate: return Condition::indeterminate;
  }
  return Condition::indeterminate;
}

// Link edge mask over lexicographic pairs of the relabelled vertex set
// {1..n}\{v}, matching SpectrumTable::mask_of(link_graph(h, v).graph).
std::uint64_t link_mask(const Hypergraph3& h, Vertex v) {
  const int k = h.order() - 1;
  std::uint64_t mask = 0;
  for (std::size_t idx : h.incident(v)) {
    const Triple& e = h.edges()[idx];
    int a = 0, b = 0;
    for (Vertex u : e.v) {
      if (u == v) continue;
      int w = u < v ? u : u - 1;
      (a == 0 ? a : b) = w;
    }
    mask |= std::uint64_t{1} << ((a - 1) * (2 * k - a) / 2 + (b - a - 1));
  }
  return mask;
}

}  // namespace

CheckReport check_condition(const Hypergraph3& h, long s, const CheckOptions& options) {
  const int n = h.order();
  if (s < 0 || n < s + 1) throw std::invalid_argument("check_condition: need s >= 0 and n >= s + 1");
  CheckReport r;
  r.n = n;
  r.s = s;
  r.threshold = threshold_match(s, n);

  const bool use_table = options.table && options.table->order() == n - 1;
  r.per_vertex_rho.reserve(n);
  for (Vertex v = 1; v <= n; ++v) {
    double rho = use_table ? (*options.table)[link_mask(h, v)]
                           : spectral_radius(link_graph(h, v).graph, options.tolerance).value;
    r.per_vertex_rho.emplace_back(v, rho);
    if (v == 1 || rho < r.min_rho) {
      r.min_rho = rho;
      r.argmin = v;
    }
  }
  r.condition = classify(r.min_rho, r.threshold, options.slack);
  if (options.gamma) {
    r.large_n_threshold = (2.0 / 3.0 + *options.gamma) * n;
    r.large_n_condition = classify(r.min_rho, *r.large_n_threshold, options.slack);
  }
  return r;
}

namespace {

void matching_conclusion(const Hypergraph3& h, CheckReport& r, int target, const CheckOptions& options,
                         bool proven_range, bool conjecture_range) {
  MatchingSearch found = find_matching_of_size(h, target, options.budget);
  r.witness.matching = found.matching;
  if (found.reached_target) {
    if (found.exact) r.nu = found.size;
    r.verdict = Verdict::consistent;
    return;
  }
  if (!found.exact) {
    r.verdict = Verdict::skipped;
    r.notes.push_back("node budget exhausted after " + std::to_string(found.nodes) +
                      " nodes; best matching has " + std::to_string(found.size) + " edges");
    return;
  }
  r.nu = found.size;
  if (proven_range) {
    r.verdict = Verdict::bug_suspect;
  } else if (conjecture_range) {
    r.verdict = Verdict::counterexample;
  } else {
    r.verdict = Verdict::out_of_range;
  }
}

}  // namespace

CheckReport verify_theorem(const Hypergraph3& h, long s, Mode mode, const CheckOptions& options) {
  CheckReport r = check_condition(h, s, options);
  r.mode = mode;
  const long n = h.order();
  const bool conj_range = n >= 3 * s + 3;

  switch (mode) {
    case Mode::thm12:
      if (n < 100 * s) r.notes.push_back("n < 100s: outside the proven range, outcome tests the conjecture");
      break;
    case Mode::thm13:
    case Mode::conj_matching:
      if (!conj_range) r.notes.push_back("n < 3s+3: outside the claimed range");
      break;
    case Mode::conj_pm:
      if (n != 3 * s + 3) r.notes.push_back("n != 3s+3: perfect matching claim is stated for n = 3s+3");
      break;
  }

  if (r.condition != Condition::holds) {
    r.verdict = Verdict::skipped;
    return r;
  }

  switch (mode) {
    case Mode::thm12:
      matching_conclusion(h, r, static_cast<int>(s + 1), options, s >= 1 && n >= 100 * s, conj_range);
      break;
    case Mode::conj_matching:
      matching_conclusion(h, r, static_cast<int>(s + 1), options, s >= 1 && n >= 100 * s, conj_range);
      break;
    case Mode::conj_pm: {
      if (n % 3 != 0) {
        r.perfect_matching = false;
        r.verdict = Verdict::out_of_range;
        r.notes.push_back("n not divisible by 3: no perfect matching is possible");
        break;
      }
      matching_conclusion(h, r, static_cast<int>(n / 3), options, false, n == 3 * s + 3);
      r.perfect_matching = r.verdict == Verdict::consistent
                               ? std::optional<bool>(true)
                               : (r.nu ? std::optional<bool>(false) : std::nullopt);
      break;
    }
    case Mode::thm13: {
      DualityCertificate cert;
      try {
        cert = fractional_matching(h, options.lp_limit);
      } catch (const LpTooLarge& e) {
        r.verdict = Verdict::skipped;
        r.notes.push_back(e.what());
        break;
      }
      r.nu_frac = cert.primal.value;
      bool ok = cert.primal.value >= Rational(s + 1);
      if (n == 3 * s + 3) {
        r.perfect_fractional = cert.primal.value == Rational(n, 3);
        ok = ok && *r.perfect_fractional;
      }
      r.witness.certificate = std::move(cert);
      if (ok) {
        r.verdict = Verdict::consistent;
      } else {
        r.verdict = conj_range ? Verdict::bug_suspect : Verdict::out_of_range;
      }
      break;
    }
  }
  return r;
}

ClosureCheck check_shift_closure(const Hypergraph3& h) {
  ClosureCheck out;
  for (const auto& b : h.edges()) {
    for (Vertex a1 = 1; a1 <= b[0]; ++a1) {
      for (Vertex a2 = a1 + 1; a2 <= b[1]; ++a2) {
        for (Vertex a3 = a2 + 1; a3 <= b[2]; ++a3) {
          ++out.pairs_checked;
          Triple a(a1, a2, a3);
          if (!h.contains(a)) {
            out.ok = false;
            out.violation = std::make_pair(a, b);
            return out;
          }
        }
      }
    }
  }
  return out;
}

std::vector<Vertex> ShiftedPair::permutation() const {
  std::vector<Vertex> perm(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) perm[order[k] - 1] = static_cast<Vertex>(k + 1);
  return perm;
}

ShiftedPair shift(const Hypergraph3& h, std::uint64_t lp_limit) {
  const int n = h.order();
  DualityCertificate cert = fractional_matching(h, lp_limit);
  ShiftedPair out;
  out.original = h;
  out.cover = cert.dual;
  out.nu_frac_original = cert.primal.value;

  const auto& w = out.cover.weights;
  out.order.resize(n);
  for (int i = 0; i < n; ++i) out.order[i] = i + 1;
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](Vertex a, Vertex b) { return w[a - 1] > w[b - 1]; });

  std::vector<Rational> by_label(n);
  for (int k = 0; k < n; ++k) by_label[k] = w[out.order[k] - 1];
  std::vector<Triple> edges;
  const Rational one(1);
  for (const auto& t : all_triples(n)) {
    if (by_label[t[0] - 1] + by_label[t[1] - 1] + by_label[t[2] - 1] >= one) edges.push_back(t);
  }
  out.shifted = Hypergraph3(n, std::move(edges));

  Hypergraph3 moved = relabel(h, out.permutation());
  out.contains_original = std::all_of(moved.edges().begin(), moved.edges().end(),
                                      [&](const Triple& t) { return out.shifted.contains(t); });
  out.nu_frac_shifted = fractional_matching(out.shifted, lp_limit).primal.value;
  out.closure = check_shift_closure(out.shifted);
  return out;
}

LiftResult lift_link_matching(const ShiftedPair& pair, long s) {
  const Hypergraph3& h = pair.shifted;
  const int n = h.order();
  if (s < 0 || n < 3 * s + 3) throw std::invalid_argument("lift_link_matching: need n >= 3s + 3");

  // Removing vertex n keeps labels 1..n-1 unchanged.
  LinkGraph link = link_graph(h, n);
  GraphMatching gm = max_matching_graph(link.graph);
  LiftResult out;
  out.link_nu = gm.size;
  if (gm.size < s + 1) return out;

  std::vector<char> covered(n + 1, 0);
  std::vector<Pair> chosen(gm.pairs.begin(), gm.pairs.begin() + (s + 1));
  for (auto [a, b] : chosen) covered[a] = covered[b] = 1;
  std::vector<Vertex> spare;
  for (Vertex v = 1; v <= n && static_cast<long>(spare.size()) < s + 1; ++v)
    if (!covered[v]) spare.push_back(v);
  if (static_cast<long>(spare.size()) < s + 1) {
    throw std::logic_error("lift_link_matching: not enough unused vertices");
  }
  for (long i = 0; i <= s; ++i) {
    Triple t(chosen[i].first, chosen[i].second, spare[i]);
    if (!h.contains(t)) {
      throw std::logic_error("lift_link_matching: lifted triple " + to_string(t) +
                             " missing from a shift-closed hypergraph");
    }
    out.matching.edges.push_back(t);
  }
  out.ok = true;
  return out;
}

bool has_perfect_matching_on(const Hypergraph3& h, std::vector<Vertex> vertices) {
  if (vertices.size() % 3 != 0) return false;
  if (vertices.empty()) return true;
  std::sort(vertices.begin(), vertices.end());
  const Vertex first = vertices[0];
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!h.contains(Triple(first, vertices[i], vertices[j]))) continue;
      std::vector<Vertex> rest;
      rest.reserve(vertices.size() - 3);
      for (std::size_t k = 1; k < vertices.size(); ++k)
        if (k != i && k != j) rest.push_back(vertices[k]);
      if (has_perfect_matching_on(h, std::move(rest))) return true;
    }
  }
  return false;
}

std::vector<VertexSet> absorbing_sets(const Hypergraph3& h, const VertexSet& t) {
  if (t.size() != 3) throw std::invalid_argument("absorbing_sets: |T| must be 3");
  for (Vertex v : t)
    if (v > h.order()) throw std::invalid_argument("absorbing_sets: T outside V(H)");
  std::vector<Vertex> others;
  for (Vertex v = 1; v <= h.order(); ++v)
    if (!t.contains(v)) others.push_back(v);

  std::vector<VertexSet> out;
  const int k = 6;
  const int m = static_cast<int>(others.size());
  if (m < k) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::vector<Vertex> a(k);
    for (int i = 0; i < k; ++i) a[i] = others[idx[i]];
    if (has_perfect_matching_on(h, a)) {
      std::vector<Vertex> with_t = a;
      with_t.insert(with_t.end(), t.begin(), t.end());
      if (has_perfect_matching_on(h, std::move(with_t))) out.emplace_back(h.order(), a);
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

EdgeRemovalVerdict edge_removal_check(const Graph2& g, long s, long max_r, double tolerance,
                                      double slack) {
  const long n = g.order();
  if (s < 1 || n < s + 1) throw std::invalid_argument("edge_removal_check: need s >= 1 and n >= s + 1");
  EdgeRemovalVerdict out;
  out.rho = spectral_radius(g, tolerance).value;
  out.bound = split_graph_rho(s, n);
  if (compare_strict(out.rho, out.bound, slack) != Comparison::greater) return out;

  out.kind = EdgeRemovalVerdict::Kind::holds;
  const long m = static_cast<long>(g.size());
  const long r_max = std::min(max_r, s);
  for (long r = 0; r <= r_max && r <= n; ++r) {
    const double required = 0.5 * static_cast<double>((s - r) * (n - s));
    std::vector<Vertex> pick(r);
    for (long i = 0; i < r; ++i) pick[i] = static_cast<Vertex>(i + 1);
    for (;;) {
      ++out.sets_checked;
      long removed = 0;
      for (long i = 0; i < r; ++i) {
        removed += g.degree(pick[i]);
        for (long j = i + 1; j < r; ++j)
          if (g.adjacent(pick[i], pick[j])) --removed;
      }
      const long left = m - removed;
      if (!(static_cast<double>(left) > required)) {
        out.kind = EdgeRemovalVerdict::Kind::violated;
        out.violating_set = VertexSet(static_cast<int>(n), pick);
        out.edges_left = left;
        out.required = required;
        return out;
      }
      long i = r - 1;
      while (i >= 0 && pick[i] == n - r + i + 1) --i;
      if (i < 0) break;
      ++pick[i];
      for (long j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

std::uint64_t SearchSpace::size() const {
  if (kind == Kind::exhaustive) return std::uint64_t{1} << binomial(n, 3);
  return static_cast<std::uint64_t>(std::max<long>(samples, 0));
}

std::string SearchSpace::describe() const {
  std::ostringstream os;
  if (kind == Kind::exhaustive) {
    os << "exhaustive(" << n << ")";
  } else {
    os << "random(" << n << "," << p << "," << samples << "," << seed << ")";
  }
  return os.str();
}

Hypergraph3 search_instance(const SearchSpace& space, std::uint64_t index) {
  if (space.kind == SearchSpace::Kind::exhaustive) {
    static thread_local std::optional<ThreeGraphStream> stream;
    if (!stream || stream->order() != space.n) stream.emplace(space.n);
    return stream->at(index);
  }
  return random_3graph(space.n, space.p, derive_seed(space.seed, index)).hypergraph;
}

namespace {

bool is_flagged(const CheckReport& r) {
  if (r.verdict == Verdict::counterexample || r.verdict == Verdict::bug_suspect ||
      r.verdict == Verdict::out_of_range) {
    return true;
  }
  return r.verdict == Verdict::skipped && r.condition == Condition::holds;
}

void tally(SearchSummary& sum, const CheckReport& r) {
  ++sum.instances;
  switch (r.condition) {
    case Condition::holds: ++sum.condition_holds; break;
    case Condition::fails: ++sum.condition_fails; break;
    case Condition::indeterminate: ++sum.indeterminate; break;
  }
  switch (r.verdict) {
    case Verdict::consistent: ++sum.consistent; break;
    case Verdict::counterexample: ++sum.counterexample; break;
    case Verdict::bug_suspect: ++sum.bug_suspect; break;
    case Verdict::out_of_range: ++sum.out_of_range; break;
    case Verdict::skipped:
      ++sum.skipped;
      if (r.condition == Condition::holds) ++sum.budget_exhausted;
      break;
  }
}

}  // namespace

SearchSummary search(const SearchSpace& space, long s, Mode mode, const CheckOptions& options,
                     unsigned threads) {
  if (space.kind == SearchSpace::Kind::exhaustive && binomial(space.n, 3) > 24) {
    throw std::invalid_argument("search: exhaustive mode needs n <= 6");
  }
  if (space.kind == SearchSpace::Kind::random && !(space.p >= 0.0 && space.p <= 1.0)) {
    throw std::invalid_argument("search: p must lie in [0,1]");
  }
  if (s < 0 || space.n < s + 1) throw std::invalid_argument("search: need s >= 0 and n >= s + 1");

  CheckOptions opts = options;
  std::optional<SpectrumTable> table;
  if (!opts.table && space.n >= 1 && space.n - 1 <= 6) {
    table.emplace(space.n - 1, opts.tolerance);
    opts.table = &*table;
  }

  const std::uint64_t total = space.size();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(chunks, 1)));

  SearchSummary summary;
  std::mutex merge;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;

  auto worker = [&] {
    SearchSummary local;
    try {
      for (;;) {
        std::uint64_t c = next.fetch_add(1);
        if (c >= chunks) break;
        const std::uint64_t lo = c * kChunk, hi = std::min(total, lo + kChunk);
        for (std::uint64_t i = lo; i < hi; ++i) {
          Hypergraph3 h = search_instance(space, i);
          CheckReport r = verify_theorem(h, s, mode, opts);
          tally(local, r);
          if (is_flagged(r)) {
            r.id = space.describe() + "#" + std::to_string(i);
            r.instance = std::move(h);
            local.flagged.push_back(std::move(r));
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(merge);
      if (!failure) failure = std::current_exception();
      next.store(chunks);
    }
    std::lock_guard lock(merge);
    summary.instances += local.instances;
    summary.condition_holds += local.condition_holds;
    summary.condition_fails += local.condition_fails;
    summary.indeterminate += local.indeterminate;
    summary.consistent += local.consistent;
    summary.counterexample += local.counterexample;
    summary.bug_suspect += local.bug_suspect;
    summary.out_of_range += local.out_of_range;
    summary.skipped += local.skipped;
    summary.budget_exhausted += local.budget_exhausted;
    for (auto& r : local.flagged) summary.flagged.push_back(std::move(r));
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  auto index_of = [](const CheckReport& r) {
    return std::stoull(r.id.substr(r.id.rfind('#') + 1));
  };
  std::sort(summary.flagged.begin(), summary.flagged.end(),
            [&](const CheckReport& a, const CheckReport& b) { return index_of(a) < index_of(b); });
  return summary;
}

}  // namespace linkmatch
