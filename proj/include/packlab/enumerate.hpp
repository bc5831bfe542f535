#pragma once

#include <functional>
#include <vector>

#include "packlab/graph.hpp"

namespace packlab {

inline constexpr int default_enumeration_cap = 9;

// One canonical representative per isomorphism class of order n, sorted by
// canonical graph6 bytes. Built by extending the classes of order n-1 with
// one vertex and deduplicating by canonical form.
std::vector<Graph> enumerate_graphs(int n, int cap = default_enumeration_cap);

// Same classes as graph6 lines, cheaper to hold for large n.
std::vector<std::string> enumerate_graph6(int n, int cap = default_enumeration_cap);

// All 2^C(n,2) labeled graphs, for oracle use at tiny orders.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit);

} // namespace packlab
