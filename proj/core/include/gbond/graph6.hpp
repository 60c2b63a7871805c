#pragma once

#include <string>
#include <string_view>

#include "gbond/graph.hpp"

namespace gbond {

// graph6 small format: one size byte, 62 vertices max.
inline constexpr int kMaxGraph6Vertices = 62;

// Encode in graph6 small format (no header, no trailing newline).
std::string to_graph6(const Graph& g);

// Decode a graph6 string. A leading ">>graph6<<" header is tolerated and
// stripped. Rejects the long-size forms (order > 62), out-of-range bytes,
// bad body length and nonzero padding bits.
Graph from_graph6(std::string_view text);

} // namespace gbond
