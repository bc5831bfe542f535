#pragma once

#include <vector>

#include "packlab/graph.hpp"

namespace packlab {

// Swap of the edges vx and uy for the non-edges vy and ux; preserves every
// vertex degree. All four vertices must be distinct.
struct EdgeExchangeSpec {
    int x, y, u, v;
};

Graph edge_exchange(const Graph& g, const EdgeExchangeSpec& spec);

// Swaps the neighborhoods of u and v (the transposition relabeling); when u
// and v are adjacent the edge uv is fixed so the result stays simple. The
// degree multiset is preserved and the operation is an involution.
Graph vertex_interchange(const Graph& g, int u, int v);

// E(g1) intersect E(g2); empty iff g1 + g2 is a packing.
std::vector<std::pair<int, int>> bad_pairs(const Graph& g1, const Graph& g2);
int count_bad_pairs(const Graph& g1, const Graph& g2);

} // namespace packlab
