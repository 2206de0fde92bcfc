#pragma once

#include <string>
#include <string_view>

#include "zf/graph.hpp"

namespace zf {

/// graph6 short form, n <= 62.  Layout: first byte n+63, then the upper
/// triangle in column order (0,1),(0,2),(1,2),(0,3),... packed six bits per
/// byte (most significant first), zero-padded, each byte offset by 63.
/// Long-form headers (leading '~') are rejected.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Plain edge-list text: first line "n m", then m lines "u v" (0-based).
/// Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace zf
