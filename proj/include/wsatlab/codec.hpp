#pragma once

#include <string>
#include <string_view>

#include "wsatlab/graph.hpp"

namespace wsatlab {

// graph6 as published with nauty: N(n) followed by the upper triangle in
// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte + 63.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Plain edge list: a header line "n <count>" then one "u v" pair per line.
// Blank lines and '#' comments are ignored. Errors carry the line number.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Picks a codec by content: edge lists start with an "n" header, anything
/// else is treated as a single graph6 line.
Graph parse_graph_auto(std::string_view text);

}  // namespace wsatlab
