#pragma once

#include <string>
#include <string_view>

#include "packlab/graph.hpp"

namespace packlab {

// Standard graph6 text line: header-less printable ASCII, upper-triangle
// adjacency bits in column-major order, 6 bits per byte offset by 63.
std::string graph6_encode(const Graph& g);

// Strict decoder; any defect is reported with the byte offset where it was
// detected, including non-zero padding bits.
Graph graph6_decode(std::string_view line);

} // namespace packlab
