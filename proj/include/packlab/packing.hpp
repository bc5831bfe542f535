#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "packlab/degree_sequence.hpp"
#include "packlab/graph.hpp"

namespace packlab {

enum class PackStatus { packed, unpackable, budget_exhausted };
enum class PackMode { embed, sequence, component_wise };

const char* pack_status_name(PackStatus status);
const char* pack_mode_name(PackMode mode);

struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
    long long max_millis = 30'000; // <= 0 disables the wall clock
};

struct SearchStats {
    std::uint64_t nodes = 0;
    long long millis = 0;
};

// UNPACKABLE only ever comes out of an exhausted exact search; a witness is
// present exactly when the status is packed.
struct PackingResult {
    PackStatus status = PackStatus::budget_exhausted;
    PackMode mode = PackMode::embed;
    std::optional<Graph> witness;
    std::optional<std::vector<int>> embedding; // embed mode: g1 vertex -> host vertex
    SearchStats stats;
};

// Exact backtracking embedding of g1 into the complement of g2.
PackingResult pack_embed(const Graph& g1, const Graph& g2, const SearchBudget& budget = {});

// Exact search for a graph with the degree multiset of g1 and no edge of g2.
PackingResult pack_sequence(const Graph& g1, const Graph& g2, const SearchBudget& budget = {});

// Like pack_sequence, but the witness components must biject to g1's
// components with matching degree sequences.
PackingResult pack_component_wise(const Graph& g1, const Graph& g2,
                                  const SearchBudget& budget = {});

// Component-wise placement of explicit components into a host, with the
// positive-degree witness vertices restricted to `allowed`. The witness lives
// on the host's vertex set. Used by the pipeline constructions.
PackingResult pack_components_masked(const std::vector<Graph>& comps, const Graph& host,
                                     std::uint64_t allowed, const SearchBudget& budget = {});

// Sequence-mode placement of a bare degree multiset into a host (never
// reports unpackable vs the original pair semantics; it is a building block).
PackingResult pack_terms(const std::vector<int>& terms, const Graph& host, std::uint64_t allowed,
                         const SearchBudget& budget = {});

// Re-checks a result from scratch: witness presence, edge-disjointness and
// the mode contract against the instance pair.
bool validate_packing(const PackingResult& result, const Graph& g1, const Graph& g2);

} // namespace packlab
