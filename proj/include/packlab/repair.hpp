#pragma once

#include <optional>

#include "packlab/degree_sequence.hpp"
#include "packlab/graph.hpp"
#include "packlab/packing.hpp"

namespace packlab {

// A realization of pi(g1) whose bad pairs against g2 all touch the anchor
// vertex, which carries the minimum positive degree of g1.
struct NearPacking {
    Graph realization;
    int anchor = -1;
};

// Strips a minimum-positive-degree vertex via the anchored realization,
// packs the reduced sequence exactly, then re-attaches the anchor to the
// vertices left one short. With try_direct_first the exact solver runs
// first, so already packable pairs come back with zero bad pairs.
std::optional<NearPacking> near_packing(const Graph& g1, const Graph& g2,
                                        const SearchBudget& budget = {},
                                        bool try_direct_first = true);

// Local search over degree-preserving moves (vertex interchanges, 2-edge
// exchanges, cyclic 3-edge exchanges) that strictly reduce the bad-pair
// count. Returns PACKED when it reaches zero, otherwise BUDGET_EXHAUSTED;
// it never claims unpackability.
PackingResult exchange_repair(const NearPacking& np, const Graph& g2,
                              const SearchBudget& budget = {});

// Realization with an independent set of size at least k: merges cycle and
// max-clique components into other components by edge exchanges, then falls
// back to exhaustive realization search.
std::optional<Graph> realization_with_independent_set(const DegreeSequence& seq, int k,
                                                      const SearchBudget& budget = {});

} // namespace packlab
