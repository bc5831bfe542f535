#pragma once

#include <optional>
#include <vector>

#include "packlab/graph.hpp"

namespace packlab {

// Injective map carrying every edge of the forest f into g, found by greedy
// tree-by-tree placement with full backtracking. Whenever |V(g)| >= |V(f)|
// and delta(g) >= |E(f)| a mapping exists and is returned; nullopt only
// after the complete search fails outside that guarantee.
std::optional<std::vector<int>> forest_embed(const Graph& f, const Graph& g);

} // namespace packlab
