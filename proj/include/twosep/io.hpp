#pragma once

#include <iosfwd>
#include <string>

#include "twosep/graph.hpp"

namespace twosep {

/// Edge-list text: a header line "n m", then m lines "u v [mult]". Blank lines
/// and anything after '#' are ignored. Throws ParseError with a line number.
MultiGraph parse_edge_list(std::istream& in);
MultiGraph parse_edge_list_string(const std::string& text);

/// Reads a file; "-" means standard input. ParseError if it cannot be opened.
MultiGraph read_edge_list(const std::string& path);

/// One line per vertex pair, ordered by (u,v); the multiplicity is written
/// only when it is not 1.
std::string serialize_edge_list(const MultiGraph& g);

}  // namespace twosep
