#pragma once

#include <string>
#include <string_view>

#include "hamlab/graph.hpp"

namespace hamlab {

/// Parses one graph6 line (without trailing newline). Throws ParseError
/// carrying the byte offset of the offending character.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding: single-byte size header for n <= 62, the
/// standard extended header above that; body is the upper adjacency
/// triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ...
std::string write_graph6(const Graph& g);

}  // namespace hamlab
