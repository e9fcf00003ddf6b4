#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "linkmatch/constructions.hpp"
#include "linkmatch/harness.hpp"
#include "linkmatch/hgraph.hpp"
#include "linkmatch/matching.hpp"
#include "linkmatch/spectral.hpp"

namespace linkmatch::io {

using nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// h3-text:
//   c <comment>            (anywhere)
//   p h3 <n> <m>
//   e <a> <b> <c>          (exactly m lines, 1 <= a < b < c <= n)
// Duplicate triples are rejected.
Hypergraph3 parse_h3(const std::string& text);
std::string serialize_h3(const Hypergraph3& h);

// Same layout with "p edge <n> <m>" and "e <a> <b>".
Graph2 parse_graph(const std::string& text);
std::string serialize_graph(const Graph2& g);

// {"n": n, "edges": [[a,b,c], ...]}
Hypergraph3 parse_h3_json(const std::string& text);
json h3_to_json(const Hypergraph3& h);

enum class FileKind { h3_text, h3_json, graph_text };

// Looks at the first non-comment content: '{' -> JSON, "p edge" -> graph.
FileKind detect_kind(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Doubles are rounded to 12 significant digits.
double round12(double x);

json to_json(const Triple& t);
json to_json(const Matching3& m);
json to_json(const SpectralReport& r);
json to_json(const FractionalAssignment& f, const Hypergraph3& h);
json to_json(const DualityCertificate& c, const Hypergraph3& h);
json to_json(const CheckReport& r);
json to_json(const SearchSummary& s);
json to_json(const ShiftedPair& p);
json to_json(const Expected& e);

}  // namespace linkmatch::io
