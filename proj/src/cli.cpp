#include "linkmatch/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "linkmatch/constructions.hpp"
#include "linkmatch/harness.hpp"
#include "linkmatch/io.hpp"
#include "linkmatch/matching.hpp"
#include "linkmatch/spectral.hpp"

namespace linkmatch::cli {

namespace {

using io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  io::FileKind kind;
  std::optional<Hypergraph3> h;
  std::optional<Graph2> g;
};

Loaded load(const std::string& path) {
  std::string text;
  try {
    text = io::read_file(path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  Loaded out{io::detect_kind(text), std::nullopt, std::nullopt};
  try {
    switch (out.kind) {
      case io::FileKind::h3_text: out.h = io::parse_h3(text); break;
      case io::FileKind::h3_json: out.h = io::parse_h3_json(text); break;
      case io::FileKind::graph_text: out.g = io::parse_graph(text); break;
    }
  } catch (const io::ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
  return out;
}

Hypergraph3 load_h3(const std::string& path) {
  Loaded l = load(path);
  if (!l.h) throw InputError(path + ": expected a 3-graph, found a graph file");
  return std::move(*l.h);
}

std::vector<Vertex> parse_triple_arg(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<Vertex>(v));
    } catch (const std::exception&) {
      throw UsageError("--t expects three comma-separated vertices, got '" + text + "'");
    }
  }
  if (out.size() != 3) throw UsageError("--t expects three comma-separated vertices, got '" + text + "'");
  return out;
}

Mode mode_arg(const std::string& text) {
  auto m = parse_mode(text);
  if (!m) throw UsageError("unknown mode '" + text + "' (thm12|thm13|conj-matching|conj-pm)");
  return *m;
}

struct Globals {
  double tol = kDefaultTolerance;
  double slack = kDefaultSlack;
  bool no_timing = false;
  bool strict = false;
  std::string output;
};

struct Params {
  std::string file, family = "random", space = "exhaustive", mode, t, format = "h3";
  long s = -1;
  int n = -1;
  double p = 0.5;
  std::uint64_t seed = 0;
  long samples = 0;
  long budget = kDefaultNodeBudget;
  std::uint64_t limit = kDefaultLpLimit;
  bool allow_large = false;
  double gamma = 0.0;
  int vertex = 0;
  unsigned threads = 0;
  long lift = -1;
  long max_flagged = 20;
};

json cmd_gen(const Params& p, const Globals& g, std::ostream& out) {
  if (p.n < 0) throw UsageError("gen needs --n");
  LabeledInstance inst = [&] {
    if (p.family == "h1") {
      if (p.s < 0) throw UsageError("gen --family h1 needs --s");
      return h1(p.s, p.n);
    }
    if (p.family == "h2") {
      if (p.s < 0) throw UsageError("gen --family h2 needs --s");
      return h2(p.s, p.n);
    }
    if (p.family == "complete") return complete_instance(p.n);
    return random_3graph(p.n, p.p, p.seed);
  }();
  const std::string content =
      p.format == "json" ? io::h3_to_json(inst.hypergraph).dump(2) + "\n" : io::serialize_h3(inst.hypergraph);
  if (g.output.empty()) {
    out << content;
    return nullptr;
  }
  try {
    io::write_file(g.output, content);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  return {{"family", inst.family.tag()},
          {"file", g.output},
          {"n", inst.hypergraph.order()},
          {"edges", inst.hypergraph.size()},
          {"expected", io::to_json(inst.expected)}};
}

json cmd_rho(const Params& p, const Globals& g) {
  Loaded l = load(p.file);
  if (l.g) {
    const Graph2& gr = *l.g;
    SpectralReport r = spectral_radius(gr, g.tol);
    GraphMatching m = max_matching_graph(gr);
    json res = {{"kind", "graph"},
                {"n", gr.order()},
                {"edges", gr.size()},
                {"spectral", io::to_json(r)},
                {"stanley_bound", io::round12(stanley_bound(static_cast<long>(gr.size())))},
                {"hong_bound", io::round12(hong_bound(gr))},
                {"complement_sum_gap", io::round12(terpai_gap(gr, g.tol))},
                {"nu", m.size}};
    if (gr.order() >= 3 * m.size + 2) res["fyz_threshold"] = io::round12(threshold_fyz(m.size, gr.order()));
    if (p.s >= 0) {
      if (gr.order() < p.s + 1) throw UsageError("--s must satisfy n >= s + 1");
      const double th = split_graph_rho(p.s, gr.order());
      res["threshold"] = io::round12(th);
      switch (compare_strict(r.value, th, g.slack)) {
        case Comparison::greater: res["condition"] = "holds"; break;
        case Comparison::less: res["condition"] = "fails"; break;
        case Comparison::indeterminate: res["condition"] = "indeterminate"; break;
      }
    }
    return res;
  }
  const Hypergraph3& h = *l.h;
  if (p.vertex != 0) {
    if (p.vertex < 1 || p.vertex > h.order()) throw UsageError("--vertex outside 1..n");
    LinkGraph link = link_graph(h, p.vertex);
    return {{"kind", "h3"},
            {"n", h.order()},
            {"vertex", p.vertex},
            {"link_edges", link.graph.size()},
            {"spectral", io::to_json(spectral_radius(link.graph, g.tol))}};
  }
  json per = json::array();
  double best = 0.0;
  Vertex arg = 0;
  for (Vertex v = 1; v <= h.order(); ++v) {
    SpectralReport r = spectral_radius(link_graph(h, v).graph, g.tol);
    per.push_back({{"vertex", v}, {"rho", io::round12(r.value)}, {"iterations", r.iterations},
                   {"converged", r.converged}});
    if (arg == 0 || r.value < best) {
      best = r.value;
      arg = v;
    }
  }
  json res = {{"kind", "h3"}, {"n", h.order()}, {"edges", h.size()}, {"per_vertex_rho", per}};
  if (arg != 0) {
    res["min_rho"] = io::round12(best);
    res["argmin"] = arg;
  }
  if (p.s >= 0) {
    CheckOptions opts;
    opts.tolerance = g.tol;
    opts.slack = g.slack;
    CheckReport c = check_condition(h, p.s, opts);
    res["threshold"] = io::round12(c.threshold);
    res["condition"] = to_string(c.condition);
  }
  return res;
}

json cmd_match(const Params& p) {
  Loaded l = load(p.file);
  if (l.g) {
    GraphMatching m = max_matching_graph(*l.g);
    json pairs = json::array();
    for (auto [a, b] : m.pairs) pairs.push_back({a, b});
    return {{"kind", "graph"}, {"nu", m.size}, {"exact", true}, {"witness", pairs}};
  }
  SearchOptions opts;
  opts.budget = p.budget;
  MatchingSearch r = max_matching_3graph(*l.h, opts);
  return {{"kind", "h3"},
          {"nu", r.size},
          {"exact", r.exact},
          {"nodes", r.nodes},
          {"witness", io::to_json(r.matching)}};
}

json cmd_fracmatch(const Params& p) {
  Hypergraph3 h = load_h3(p.file);
  DualityCertificate cert = fractional_matching(h, p.limit, p.allow_large);
  const bool perfect = cert.primal.value * Rational(3) == Rational(h.order());
  return {{"n", h.order()},
          {"edges", h.size()},
          {"nu_frac", cert.primal.value.str()},
          {"perfect", perfect},
          {"pivots", cert.pivots},
          {"certificate", io::to_json(cert, h)}};
}

json cmd_check(const Params& p, const Globals& g, Verdict& verdict) {
  Hypergraph3 h = load_h3(p.file);
  if (p.s < 0) throw UsageError("check needs --s");
  CheckOptions opts;
  opts.tolerance = g.tol;
  opts.slack = g.slack;
  opts.budget = p.budget;
  opts.lp_limit = p.limit;
  if (p.gamma != 0.0) opts.gamma = p.gamma;
  if (h.order() < p.s + 1) throw UsageError("--s must satisfy n >= s + 1");
  CheckReport r = verify_theorem(h, p.s, mode_arg(p.mode), opts);
  verdict = r.verdict;
  json j = io::to_json(r);
  if (r.witness.certificate) j["witness"]["certificate"] = io::to_json(*r.witness.certificate, h);
  return j;
}

json cmd_search(const Params& p, const Globals& g, SearchSummary& summary) {
  if (p.n < 0 || p.s < 0) throw UsageError("search needs --n and --s");
  SearchSpace space;
  if (p.space == "exhaustive") {
    space.kind = SearchSpace::Kind::exhaustive;
    if (binomial(p.n, 3) > 24) throw UsageError("exhaustive search needs n <= 6");
  } else {
    space.kind = SearchSpace::Kind::random;
    if (p.samples <= 0) throw UsageError("random search needs --samples > 0");
  }
  if (p.n < p.s + 1) throw UsageError("--s must satisfy n >= s + 1");
  space.n = p.n;
  space.p = p.p;
  space.samples = p.samples;
  space.seed = p.seed;
  CheckOptions opts;
  opts.tolerance = g.tol;
  opts.slack = g.slack;
  opts.budget = p.budget;
  opts.lp_limit = p.limit;
  if (p.gamma != 0.0) opts.gamma = p.gamma;
  summary = search(space, p.s, mode_arg(p.mode), opts, p.threads);
  json j = io::to_json(summary);
  if (p.max_flagged >= 0 && j["flagged"].size() > static_cast<std::size_t>(p.max_flagged)) {
    j["flagged_total"] = j["flagged"].size();
    j["flagged"].erase(j["flagged"].begin() + p.max_flagged, j["flagged"].end());
  }
  j["space"] = space.describe();
  return j;
}

json cmd_shift(const Params& p) {
  Hypergraph3 h = load_h3(p.file);
  ShiftedPair pair = shift(h, p.limit);
  json j = io::to_json(pair);
  if (p.lift >= 0) {
    if (h.order() < 3 * p.lift + 3) throw UsageError("--lift S needs n >= 3S + 3");
    LiftResult lr = lift_link_matching(pair, p.lift);
    j["lift"] = {{"ok", lr.ok}, {"link_nu", lr.link_nu}, {"matching", io::to_json(lr.matching)}};
  }
  return j;
}

json cmd_absorb(const Params& p) {
  Hypergraph3 h = load_h3(p.file);
  std::vector<Vertex> tv = parse_triple_arg(p.t);
  for (Vertex v : tv)
    if (v < 1 || v > h.order()) throw UsageError("--t vertex outside 1..n");
  VertexSet t(h.order(), tv);
  std::vector<VertexSet> sets = absorbing_sets(h, t);
  json list = json::array();
  for (const auto& a : sets) list.push_back(a.members());
  return {{"n", h.order()}, {"t", t.members()}, {"count", sets.size()}, {"sets", list}};
}

}  // namespace

int outcome_code(long counterexamples, long bug_suspects, bool strict) {
  if (bug_suspects > 0) return kBugSuspect;
  if (counterexamples > 0 && strict) return kCounterexample;
  return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  Params p;

  CLI::App app{"Link-graph spectral conditions for matchings in 3-graphs", kToolName};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", g.tol, "eigensolver residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--slack", g.slack, "strict comparison slack")->check(CLI::NonNegativeNumber);
  app.add_flag("--no-timing", g.no_timing, "omit timing fields from reports");
  app.add_option("-o,--output", g.output, "write the report (gen: the instance) to FILE");

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--family", p.family)->required()->check(CLI::IsMember({"h1", "h2", "complete", "random"}));
  gen->add_option("--s", p.s);
  gen->add_option("--n", p.n)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--p", p.p)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", p.seed);
  gen->add_option("--format", p.format)->check(CLI::IsMember({"h3", "json"}));

  auto* rho = app.add_subcommand("rho", "link spectral radii");
  rho->add_option("file", p.file)->required();
  rho->add_option("--vertex", p.vertex);
  rho->add_option("--s", p.s)->check(CLI::NonNegativeNumber);

  auto* match = app.add_subcommand("match", "maximum matching");
  match->add_option("file", p.file)->required();
  match->add_option("--budget", p.budget)->check(CLI::PositiveNumber);

  auto* frac = app.add_subcommand("fracmatch", "exact fractional matching number");
  frac->add_option("file", p.file)->required();
  frac->add_option("--limit", p.limit);
  frac->add_flag("--allow-large", p.allow_large);

  auto* check = app.add_subcommand("check", "check one instance");
  check->add_option("file", p.file)->required();
  check->add_option("--s", p.s)->required()->check(CLI::NonNegativeNumber);
  check->add_option("--mode", p.mode)->required();
  check->add_option("--gamma", p.gamma)->check(CLI::Range(0.0, 1.0 / 3.0));
  check->add_option("--budget", p.budget)->check(CLI::PositiveNumber);
  check->add_option("--limit", p.limit);
  check->add_flag("--strict", g.strict, "exit 3 on a counterexample");

  auto* srch = app.add_subcommand("search", "search a space of instances");
  srch->add_option("--space", p.space)->required()->check(CLI::IsMember({"exhaustive", "random"}));
  srch->add_option("--n", p.n)->required()->check(CLI::NonNegativeNumber);
  srch->add_option("--s", p.s)->required()->check(CLI::NonNegativeNumber);
  srch->add_option("--p", p.p)->check(CLI::Range(0.0, 1.0));
  srch->add_option("--samples", p.samples);
  srch->add_option("--seed", p.seed);
  srch->add_option("--mode", p.mode)->required();
  srch->add_option("--gamma", p.gamma)->check(CLI::Range(0.0, 1.0 / 3.0));
  srch->add_option("--budget", p.budget)->check(CLI::PositiveNumber);
  srch->add_option("--limit", p.limit);
  srch->add_option("--threads", p.threads, "worker threads (0 = all cores)");
  srch->add_option("--max-flagged", p.max_flagged, "flagged reports kept in the output");
  srch->add_flag("--strict", g.strict, "exit 3 on a counterexample");

  auto* sh = app.add_subcommand("shift", "cover-weight shift of an instance");
  sh->add_option("file", p.file)->required();
  sh->add_option("--limit", p.limit);
  sh->add_option("--lift", p.lift, "also lift a link matching of size S+1");

  auto* absorb = app.add_subcommand("absorb", "absorbing 6-sets for a triple");
  absorb->add_option("file", p.file)->required();
  absorb->add_option("--t", p.t)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  json results;
  int code = kOk;
  json params = {{"tolerance", g.tol}, {"slack", g.slack}};
  try {
    if (*gen) {
      params.update({{"family", p.family}, {"n", p.n}, {"s", p.s}, {"p", p.p}, {"seed", p.seed}});
      results = cmd_gen(p, g, out);
      if (results.is_null()) return kOk;
    } else if (*rho) {
      params.update({{"file", p.file}, {"s", p.s}, {"vertex", p.vertex}});
      results = cmd_rho(p, g);
    } else if (*match) {
      params.update({{"file", p.file}, {"budget", p.budget}});
      results = cmd_match(p);
    } else if (*frac) {
      params.update({{"file", p.file}, {"limit", p.limit}, {"allow_large", p.allow_large}});
      results = cmd_fracmatch(p);
    } else if (*check) {
      params.update({{"file", p.file}, {"s", p.s}, {"mode", p.mode}, {"gamma", p.gamma}, {"budget", p.budget}});
      Verdict v = Verdict::skipped;
      results = cmd_check(p, g, v);
      code = outcome_code(v == Verdict::counterexample, v == Verdict::bug_suspect, g.strict);
    } else if (*srch) {
      params.update({{"space", p.space}, {"n", p.n}, {"s", p.s}, {"p", p.p}, {"samples", p.samples},
                     {"seed", p.seed}, {"mode", p.mode}, {"gamma", p.gamma}, {"budget", p.budget}});
      SearchSummary summary;
      results = cmd_search(p, g, summary);
      code = outcome_code(summary.counterexample, summary.bug_suspect, g.strict);
    } else if (*sh) {
      params.update({{"file", p.file}, {"limit", p.limit}, {"lift", p.lift}});
      results = cmd_shift(p);
    } else if (*absorb) {
      params.update({{"file", p.file}, {"t", p.t}});
      results = cmd_absorb(p);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const LpTooLarge& e) {
    err << "error: " << e.what() << " (raise --limit or pass --allow-large)\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kBugSuspect;
  }

  json report = {{"tool", kToolName}, {"version", kVersion}, {"command", args}, {"parameters", params},
                 {"results", results}};
  if (!g.no_timing) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report["timing"] = {{"wall_seconds", io::round12(secs)}};
  }
  const std::string text = report.dump(2) + "\n";
  if (!g.output.empty() && !*gen) {
    try {
      io::write_file(g.output, text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kInput;
    }
  } else {
    out << text;
  }
  return code;
}

}  // namespace linkmatch::cli
