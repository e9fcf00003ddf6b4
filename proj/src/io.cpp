#include "linkmatch/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace linkmatch::io {

namespace {

struct Header {
  int n = 0;
  long m = 0;
};

// Shared line reader for both text formats; `arity` is 3 or 2.
template <class OnEdge>
Header parse_lines(const std::string& text, const std::string& tag, int arity, OnEdge on_edge) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  Header hdr;
  long seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "c") continue;
    if (kind == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      std::string fmt;
      long n = -1, m = -1;
      if (!(ls >> fmt >> n >> m)) throw ParseError(lineno, "malformed header, expected 'p " + tag + " <n> <m>'");
      if (fmt != tag) throw ParseError(lineno, "expected format '" + tag + "', found '" + fmt + "'");
      if (n < 0 || m < 0 || n > std::numeric_limits<int>::max()) {
        throw ParseError(lineno, "header counts must be non-negative");
      }
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
      hdr = {static_cast<int>(n), m};
      have_header = true;
      continue;
    }
    if (kind == "e") {
      if (!have_header) throw ParseError(lineno, "edge before header");
      std::vector<long> v(arity);
      for (int i = 0; i < arity; ++i) {
        if (!(ls >> v[i])) throw ParseError(lineno, "expected " + std::to_string(arity) + " vertices");
      }
      std::string extra;
      if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
      for (long x : v) {
        if (x < 1 || x > hdr.n) {
          throw ParseError(lineno, "vertex " + std::to_string(x) + " outside 1.." + std::to_string(hdr.n));
        }
      }
      for (int i = 0; i < arity; ++i)
        for (int j = i + 1; j < arity; ++j)
          if (v[i] == v[j]) throw ParseError(lineno, "repeated vertex " + std::to_string(v[i]));
      for (int i = 0; i + 1 < arity; ++i)
        if (v[i] > v[i + 1]) throw ParseError(lineno, "vertices must be listed in increasing order");
      if (++seen > hdr.m) throw ParseError(lineno, "more edges than the header declares");
      on_edge(lineno, v);
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + kind + "'");
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  if (seen != hdr.m) {
    throw ParseError(lineno, "header declares " + std::to_string(hdr.m) + " edges, found " + std::to_string(seen));
  }
  return hdr;
}

}  // namespace

Hypergraph3 parse_h3(const std::string& text) {
  std::vector<Triple> edges;
  std::vector<int> lines;
  Header hdr = parse_lines(text, "h3", 3, [&](int lineno, const std::vector<long>& v) {
    edges.emplace_back(static_cast<Vertex>(v[0]), static_cast<Vertex>(v[1]), static_cast<Vertex>(v[2]));
    lines.push_back(lineno);
  });
  // Report duplicates with the line of the second occurrence.
  std::vector<std::size_t> idx(edges.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (edges[idx[i]] == edges[idx[i - 1]]) {
      throw ParseError(lines[idx[i]], "duplicate triple " + to_string(edges[idx[i]]));
    }
  }
  return Hypergraph3(hdr.n, std::move(edges));
}

std::string serialize_h3(const Hypergraph3& h) {
  std::string out = "p h3 " + std::to_string(h.order()) + " " + std::to_string(h.size()) + "\n";
  for (const auto& e : h.edges()) {
    out += "e " + std::to_string(e[0]) + " " + std::to_string(e[1]) + " " + std::to_string(e[2]) + "\n";
  }
  return out;
}

Graph2 parse_graph(const std::string& text) {
  std::vector<Pair> edges;
  std::vector<int> lines;
  Header hdr = parse_lines(text, "edge", 2, [&](int lineno, const std::vector<long>& v) {
    edges.emplace_back(static_cast<Vertex>(v[0]), static_cast<Vertex>(v[1]));
    lines.push_back(lineno);
  });
  std::vector<std::size_t> idx(edges.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (edges[idx[i]] == edges[idx[i - 1]]) throw ParseError(lines[idx[i]], "duplicate edge");
  }
  return Graph2(hdr.n, std::move(edges));
}

std::string serialize_graph(const Graph2& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [a, b] : g.edges()) out += "e " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

Hypergraph3 parse_h3_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j["n"].is_number_integer() ||
      !j["edges"].is_array()) {
    throw ParseError(0, "JSON instance needs integer 'n' and array 'edges'");
  }
  const long n = j["n"].get<long>();
  if (n < 0) throw ParseError(0, "'n' must be non-negative");
  std::vector<Triple> edges;
  std::size_t k = 0;
  for (const auto& e : j["edges"]) {
    ++k;
    if (!e.is_array() || e.size() != 3) throw ParseError(0, "edge " + std::to_string(k) + " is not a triple");
    std::array<long, 3> v{};
    for (int i = 0; i < 3; ++i) {
      if (!e[i].is_number_integer()) throw ParseError(0, "edge " + std::to_string(k) + " has a non-integer vertex");
      v[i] = e[i].get<long>();
      if (v[i] < 1 || v[i] > n) throw ParseError(0, "edge " + std::to_string(k) + " has a vertex outside 1..n");
    }
    try {
      edges.emplace_back(static_cast<Vertex>(v[0]), static_cast<Vertex>(v[1]), static_cast<Vertex>(v[2]));
    } catch (const std::invalid_argument& ex) {
      throw ParseError(0, "edge " + std::to_string(k) + ": " + ex.what());
    }
  }
  try {
    return Hypergraph3(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(0, ex.what());
  }
}

json h3_to_json(const Hypergraph3& h) {
  json edges = json::array();
  for (const auto& e : h.edges()) edges.push_back({e[0], e[1], e[2]});
  return {{"n", h.order()}, {"edges", edges}};
}

FileKind detect_kind(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '{') return FileKind::h3_json;
    std::istringstream ls(line.substr(pos));
    std::string kind, fmt;
    ls >> kind;
    if (kind == "c") continue;
    if (kind == "p" && (ls >> fmt) && fmt == "edge") return FileKind::graph_text;
    return FileKind::h3_text;
  }
  return FileKind::h3_text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json to_json(const Triple& t) { return {t[0], t[1], t[2]}; }

json to_json(const Matching3& m) {
  json edges = json::array();
  for (const auto& e : m.edges) edges.push_back(to_json(e));
  return edges;
}

json to_json(const SpectralReport& r) {
  return {{"value", round12(r.value)},
          {"residual", round12(r.residual)},
          {"iterations", r.iterations},
          {"tolerance", r.tolerance},
          {"component_count", r.component_count},
          {"converged", r.converged}};
}

json to_json(const FractionalAssignment& f, const Hypergraph3& h) {
  json weights = json::array();
  const bool matching = f.kind == FractionalAssignment::Kind::matching;
  for (std::size_t i = 0; i < f.weights.size(); ++i) {
    if (f.weights[i] == Rational(0)) continue;
    if (matching) {
      weights.push_back({{"edge", to_json(h.edges()[i])}, {"weight", f.weights[i].str()}});
    } else {
      weights.push_back({{"vertex", i + 1}, {"weight", f.weights[i].str()}});
    }
  }
  return {{"kind", matching ? "matching" : "cover"}, {"value", f.value.str()}, {"weights", weights}};
}

json to_json(const DualityCertificate& c, const Hypergraph3& h) {
  return {{"primal", to_json(c.primal, h)}, {"dual", to_json(c.dual, h)}, {"verified", c.verify(h)}};
}

json to_json(const CheckReport& r) {
  json rho = json::array();
  for (auto [v, x] : r.per_vertex_rho) rho.push_back({{"vertex", v}, {"rho", round12(x)}});
  json j = {{"id", r.id},
            {"n", r.n},
            {"s", r.s},
            {"per_vertex_rho", rho},
            {"min_rho", round12(r.min_rho)},
            {"argmin", r.argmin},
            {"threshold", round12(r.threshold)},
            {"condition", to_string(r.condition)},
            {"verdict", to_string(r.verdict)},
            {"notes", r.notes}};
  if (r.mode) j["mode"] = to_string(*r.mode);
  if (r.large_n_threshold) j["large_n_threshold"] = round12(*r.large_n_threshold);
  if (r.large_n_condition) j["large_n_condition"] = to_string(*r.large_n_condition);
  if (r.nu) j["nu"] = *r.nu;
  if (r.nu_frac) j["nu_frac"] = r.nu_frac->str();
  if (r.perfect_matching) j["perfect_matching"] = *r.perfect_matching;
  if (r.perfect_fractional) j["perfect_fractional"] = *r.perfect_fractional;
  json w = json::object();
  if (r.witness.matching) w["matching"] = to_json(*r.witness.matching);
  if (r.witness.certificate && r.instance) {
    w["certificate"] = to_json(*r.witness.certificate, *r.instance);
  } else if (r.witness.certificate) {
    w["certificate_value"] = r.witness.certificate->primal.value.str();
  }
  j["witness"] = w;
  if (r.instance) {
    j["instance"] = h3_to_json(*r.instance);
    j["instance_h3"] = serialize_h3(*r.instance);
  }
  return j;
}

json to_json(const SearchSummary& s) {
  json flagged = json::array();
  for (const auto& r : s.flagged) flagged.push_back(to_json(r));
  return {{"instances", s.instances},
          {"condition_holds", s.condition_holds},
          {"condition_fails", s.condition_fails},
          {"indeterminate", s.indeterminate},
          {"consistent", s.consistent},
          {"counterexample", s.counterexample},
          {"bug_suspect", s.bug_suspect},
          {"out_of_range", s.out_of_range},
          {"skipped", s.skipped},
          {"budget_exhausted", s.budget_exhausted},
          {"flagged", flagged}};
}

json to_json(const ShiftedPair& p) {
  json closure = {{"ok", p.closure.ok}, {"pairs_checked", p.closure.pairs_checked}};
  if (p.closure.violation) {
    closure["missing"] = to_json(p.closure.violation->first);
    closure["dominating_edge"] = to_json(p.closure.violation->second);
  }
  return {{"cover", to_json(p.cover, p.original)},
          {"order", p.order},
          {"shifted", h3_to_json(p.shifted)},
          {"nu_frac_original", p.nu_frac_original.str()},
          {"nu_frac_shifted", p.nu_frac_shifted.str()},
          {"nu_frac_preserved", p.nu_frac_preserved()},
          {"contains_original", p.contains_original},
          {"closure", closure}};
}

json to_json(const Expected& e) {
  json j = json::object();
  if (e.min_link_rho) j["min_link_rho"] = round12(*e.min_link_rho);
  if (e.nu) j["nu"] = *e.nu;
  if (e.nu_frac) j["nu_frac"] = e.nu_frac->str();
  return j;
}

}  // namespace linkmatch::io
