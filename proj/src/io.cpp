#include "twosep/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "twosep/errors.hpp"

namespace twosep {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream words(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string w; words >> w;) out.push_back(w);
  return out;
}

std::uint64_t number(const std::string& token, std::size_t line_no, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("line " + std::to_string(line_no) + ": " + what + " '" + token +
                     "' is not a nonnegative integer");
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what + " '" + token + "' is too large");
  }
}

}  // namespace

MultiGraph parse_edge_list(std::istream& in) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<EdgeSpec> edges;

  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": header must be 'n m'");
      n = number(tok[0], line_no, "vertex count");
      m = number(tok[1], line_no, "edge count");
      if (n == 0) throw ParseError("line " + std::to_string(line_no) + ": vertex count must be positive");
      have_header = true;
      continue;
    }
    if (tok.size() < 2 || tok.size() > 3)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v [mult]'");
    if (edges.size() == m)
      throw ParseError("line " + std::to_string(line_no) + ": more edge lines than the " + std::to_string(m) +
                       " declared");
    EdgeSpec e;
    const auto u = number(tok[0], line_no, "vertex");
    const auto v = number(tok[1], line_no, "vertex");
    e.mult = tok.size() == 3 ? number(tok[2], line_no, "multiplicity") : 1;
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError("line " + std::to_string(line_no) + ": vertex out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
    if (e.mult == 0) throw ParseError("line " + std::to_string(line_no) + ": multiplicity must be positive");
    e.u = static_cast<Vertex>(u);
    e.v = static_cast<Vertex>(v);
    edges.push_back(e);
  }
  if (!have_header) throw ParseError("empty input: missing 'n m' header");
  if (edges.size() != m)
    throw ParseError("declared " + std::to_string(m) + " edges but found " + std::to_string(edges.size()));
  if (n > 0xffffffffULL) throw ParseError("vertex count too large");
  return MultiGraph::build(static_cast<std::size_t>(n), edges);
}

MultiGraph parse_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

MultiGraph read_edge_list(const std::string& path) {
  if (path == "-") return parse_edge_list(std::cin);
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  return parse_edge_list(file);
}

std::string serialize_edge_list(const MultiGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.pair_count() << '\n';
  for (const auto& [pair, mult] : g.edges()) {
    out << pair.first << ' ' << pair.second;
    if (mult != 1) out << ' ' << mult;
    out << '\n';
  }
  return out.str();
}

}  // namespace twosep
