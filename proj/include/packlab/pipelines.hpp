#pragma once

#include <string>
#include <vector>

#include "packlab/graph.hpp"
#include "packlab/packing.hpp"

namespace packlab {

// Result of running a proof's construction. `used_fallback` marks that the
// whole-instance exact solver had to finish the job; when that fallback
// succeeds after the construction failed, `anomaly` is set so the harness
// can flag the divergence instead of hiding it.
struct PipelineResult {
    PackingResult result;
    bool used_fallback = false;
    bool anomaly = false;
    std::string note;
};

// Component-wise pack of the cyclic components, then forest embedding into
// the untouched vertices. Needs omega(forest part) >= delta2 + 1.
PipelineResult pipeline_lemma9(const Graph& g1, const Graph& g2, const SearchBudget& budget = {});

// Dominating-clique core plus forest under the BEC bound.
PipelineResult pipeline_theorem10(const Graph& g1, const Graph& g2,
                                  const SearchBudget& budget = {});

// Unigraph core plus forest under the BEC bound; the witness is isomorphic
// to g1 itself.
PipelineResult pipeline_theorem12(const Graph& g1, const Graph& g2,
                                  const SearchBudget& budget = {});

// Regular positive part packed into g2[x_set] by factor growth.
PipelineResult pipeline_theorem5(const Graph& g1, const Graph& g2, const std::vector<int>& x_set,
                                 const SearchBudget& budget = {});

// k-factor split: pack the diminished sequence, then grow the k-factor on
// top of the combined graph.
PipelineResult pipeline_theorem7(const Graph& g1, const Graph& g2, int k,
                                 const SearchBudget& budget = {});

// Matching part of size >= 2*delta2+1 packed after the rest.
PipelineResult pipeline_large_matching(const Graph& g1, const Graph& g2,
                                       const SearchBudget& budget = {});

// Split core plus matching under the BEC bound.
PipelineResult pipeline_split(const Graph& g1, const Graph& g2, const SearchBudget& budget = {});

struct EquitableColoring {
    std::vector<std::vector<int>> classes;
};

// Packs g with a balanced union of k+1 cliques and reads the color classes
// off the clique blocks. Needs max_degree(g) <= k; failure to pack would
// contradict the Hajnal-Szemeredi theorem and is raised as PackingFailed.
EquitableColoring equitable_coloring_via_packing(const Graph& g, int k,
                                                 const SearchBudget& budget = {});

} // namespace packlab
