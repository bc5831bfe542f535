#pragma once

#include <optional>
#include <vector>

#include "packlab/graph.hpp"
#include "packlab/packing.hpp"

namespace packlab {

// Exact search for a spanning subgraph of g with deg(v) = f(v) for every v.
// Throws ParityViolation when the f-sum is odd and Infeasible when some f(v)
// falls outside 0..deg_g(v); returns nullopt when the exhaustive search
// proves no factor exists.
std::optional<Graph> find_f_factor(const Graph& g, const std::vector<int>& f,
                                   const SearchBudget& budget = {});

// Grows an r-factor edge-disjoint from g2[x_set] by stacking factors of
// degree min{3, k-r}, falling back to the exact sequence solver when the
// growth stalls. g1_positive must be k-regular and the result lives on
// |x_set| vertices.
PackingResult pack_regular_by_factor_growth(const Graph& g1_positive, const Graph& g2,
                                            const std::vector<int>& x_set,
                                            const SearchBudget& budget = {});

} // namespace packlab
