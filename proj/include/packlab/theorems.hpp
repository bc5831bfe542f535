#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "packlab/graph.hpp"
#include "packlab/packing.hpp"

namespace packlab {

// Outcome of evaluating one theorem hypothesis on a pair, with the derived
// quantities the inequalities were computed from. All arithmetic is exact
// integer arithmetic; rational bounds are cross-multiplied.
struct HypothesisReport {
    std::string theorem;
    bool satisfied = false;
    bool trivially_true = false;
    std::map<std::string, bool> clauses;
    int n = 0;
    int delta1 = 0;
    int delta2 = 0;
    int min_delta = 0;
    std::optional<int> dplus;   // undefined when g1 is edgeless
    std::optional<int> g_slack; // 0 when delta1 == dplus, else delta2 - 1
    std::optional<int> k;
};

// The slack term of the main inequality; g1 must have an edge.
int g_value(const Graph& g1, const Graph& g2);

// (delta1+1)(delta2+1) <= n+1.
HypothesisReport check_bec(const Graph& g1, const Graph& g2);

// (delta1+1)(delta2+1) <= n+1+min{delta1,delta2}+g; edgeless g1 is reported
// trivially true.
HypothesisReport check_main(const Graph& g1, const Graph& g2);

// (delta1+1)(delta2+1) <= n+min{delta1,delta2}, or
// <= n+min{delta1+delta2, 2*delta2} when the positive part is not regular.
HypothesisReport check_cor4(const Graph& g1, const Graph& g2);

// delta(g1) >= 1, n*delta1 >= (delta1+Delta1)(delta2+1) and
// n*delta1 > (delta1+Delta1)(delta1+Delta1-3), evaluated exactly.
HypothesisReport check_katerinis(const Graph& g1, const Graph& g2);

// |g1+| >= 2*delta2 + 2(k-1) for a k-regular positive part; throws
// NotRegular when the positive part is not regular.
HypothesisReport check_theorem5_hypothesis(const Graph& g1, const Graph& g2);

// (delta1+1)(delta2+1) <= n+min{delta1+k*delta2, k+(k+1)delta2},
// |g1+| >= 2(delta1+delta2)-1, and some realization of pi(g1+) has a
// k-factor (established by search).
HypothesisReport check_theorem7_hypothesis(const Graph& g1, const Graph& g2, int k);

// The per-bijection conclusion of the f-factor theorem: the prescription
// f(v_i) = d_{phi(i)} admits a factor inside the complement of g2.
bool katerinis_conclusion_holds(const Graph& g1, const Graph& g2, const std::vector<int>& phi,
                                const SearchBudget& budget = {});

// Samples `samples` random bijections plus the identity; true when every
// sampled prescription packs. Only meaningful when the hypothesis holds.
bool katerinis_spot_check(const Graph& g1, const Graph& g2, int samples, std::uint64_t seed,
                          const SearchBudget& budget = {});

} // namespace packlab
