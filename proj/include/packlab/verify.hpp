#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "packlab/enumerate.hpp"
#include "packlab/packing.hpp"

namespace packlab {

enum class TheoremId {
    bec_half,
    theorem4,
    theorem5,
    forest_embed,
    lemma9,
    theorem12,
    problem1,
};

const char* theorem_id_name(TheoremId id);
TheoremId parse_theorem_id(const std::string& name);

struct RunConfig {
    TheoremId theorem = TheoremId::bec_half;
    int min_order = 0;
    int max_order = 5;
    // Node budget only: a wall-clock cutoff would make reports depend on
    // machine speed and scheduling.
    std::uint64_t budget_nodes = 10'000'000;
    int workers = 1;
    std::uint64_t seed = 0;
    int enumeration_cap = default_enumeration_cap;
    int invariance_samples = 1000;
};

// Aggregate of one exhaustive run. The buckets partition the
// hypothesis-satisfied instances:
//   hypothesis_satisfied = packed + excluded_by_exception + budget_exhausted
//                          + counterexamples.
struct VerificationReport {
    std::string theorem;
    int min_order = 0;
    int max_order = 0;
    std::uint64_t instances = 0;
    std::uint64_t hypothesis_satisfied = 0;
    std::uint64_t packed = 0;
    std::uint64_t excluded_by_exception = 0;
    std::uint64_t budget_exhausted = 0;
    std::vector<std::pair<std::string, std::string>> counterexamples;
    std::vector<std::pair<std::string, std::string>> exception_instances;
    std::vector<std::string> anomalies; // pipeline fallbacks, invariance failures
    std::uint64_t search_nodes = 0;
};

// Confronts a theorem with every small instance in range. Pairs are
// enumerated up to isomorphism on both sides; a seeded spot-check of random
// relabelings guards the invariance assumption. Workers share nothing and
// results merge in instance order, so the report is independent of the
// worker count.
VerificationReport verify_theorem(const RunConfig& config);

} // namespace packlab
