#pragma once

#include "packlab/graph.hpp"

namespace packlab {

// Named construction helpers. Path and cycle builders take the number of
// edges: build_path_edges(k) has k+1 vertices, build_cycle_edges(k) has k.
Graph build_complete(int k);
Graph build_independent(int k);
Graph build_complete_bipartite(int a, int b);
Graph build_cycle_edges(int k);
Graph build_path_edges(int k);
Graph build_star(int t); // K^{1,t}, the center is vertex 0

Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph build_disjoint_copies(int copies, const Graph& g);

// Tyshkevich unigraph families. U2(l,t) is l disjoint edges plus a star with
// t leaves; U3(l) is a 4-cycle sharing exactly one vertex with l triangles.
Graph build_u2(int l, int t);
Graph build_u3(int l);

} // namespace packlab
