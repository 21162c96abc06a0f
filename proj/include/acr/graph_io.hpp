#pragma once

#include <string>
#include <string_view>

#include "acr/graph.hpp"

namespace acr {

/// Standard graph6: the order (one byte n+63, or '~' plus three 6-bit bytes for
/// n >= 63), then the upper triangle in column-major order (for j = 1..n-1,
/// i = 0..j-1) packed six bits per byte, offset by 63, zero padded.
std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and trailing whitespace. Nonzero
/// padding bits are rejected so that encodings are unique.
Graph parse_graph6(std::string_view text);

/// Edge list "n; u-v, u-v, ..." (e.g. "4; 0-1, 1-2, 2-3"; "3;" is edgeless).
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

}  // namespace acr
