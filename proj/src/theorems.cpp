#include "packlab/theorems.hpp"

#include <algorithm>
#include <random>

#include "packlab/degree_sequence.hpp"
#include "packlab/factors.hpp"

namespace packlab {

int g_value(const Graph& g1, const Graph& g2) {
    int dplus = delta_plus(g1);
    return max_degree(g1) == dplus ? 0 : max_degree(g2) - 1;
}

namespace {

HypothesisReport base_report(const char* id, const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order()) fail(Errc::size_mismatch, "graphs must share a vertex set");
    HypothesisReport rep;
    rep.theorem = id;
    rep.n = g1.order();
    rep.delta1 = max_degree(g1);
    rep.delta2 = max_degree(g2);
    rep.min_delta = std::min(rep.delta1, rep.delta2);
    if (g1.edge_count() > 0) {
        rep.dplus = delta_plus(g1);
        rep.g_slack = g_value(g1, g2);
    }
    return rep;
}

} // namespace

HypothesisReport check_bec(const Graph& g1, const Graph& g2) {
    HypothesisReport rep = base_report("bec", g1, g2);
    rep.clauses["bec_bound"] = (rep.delta1 + 1) * (rep.delta2 + 1) <= rep.n + 1;
    rep.satisfied = rep.clauses["bec_bound"];
    return rep;
}

HypothesisReport check_main(const Graph& g1, const Graph& g2) {
    HypothesisReport rep = base_report("bec-half", g1, g2);
    if (!rep.dplus) {
        rep.trivially_true = true;
        rep.satisfied = true;
        rep.clauses["edgeless_g1"] = true;
        return rep;
    }
    rep.clauses["main_bound"] =
        (rep.delta1 + 1) * (rep.delta2 + 1) <= rep.n + 1 + rep.min_delta + *rep.g_slack;
    rep.satisfied = rep.clauses["main_bound"];
    return rep;
}

HypothesisReport check_cor4(const Graph& g1, const Graph& g2) {
    HypothesisReport rep = base_report("theorem4", g1, g2);
    int lhs = (rep.delta1 + 1) * (rep.delta2 + 1);
    rep.clauses["first_bound"] = lhs <= rep.n + rep.min_delta;
    bool positive_regular = true;
    if (g1.edge_count() > 0) positive_regular = is_regular(positive_part(g1).graph);
    rep.clauses["positive_part_not_regular"] = !positive_regular;
    rep.clauses["second_bound"] =
        lhs <= rep.n + std::min(rep.delta1 + rep.delta2, 2 * rep.delta2);
    rep.satisfied = rep.clauses["first_bound"] ||
                    (!positive_regular && rep.clauses["second_bound"]);
    return rep;
}

HypothesisReport check_katerinis(const Graph& g1, const Graph& g2) {
    HypothesisReport rep = base_report("theorem1", g1, g2);
    long long small1 = min_degree(g1);
    long long n = rep.n, d1 = rep.delta1, d2 = rep.delta2;
    rep.clauses["min_degree_positive"] = small1 >= 1;
    rep.clauses["order_bound"] = n * small1 >= (small1 + d1) * (d2 + 1);
    rep.clauses["strict_order_bound"] = n * small1 > (small1 + d1) * (small1 + d1 - 3);
    rep.satisfied = rep.clauses["min_degree_positive"] && rep.clauses["order_bound"] &&
                    rep.clauses["strict_order_bound"];
    return rep;
}

HypothesisReport check_theorem5_hypothesis(const Graph& g1, const Graph& g2) {
    HypothesisReport rep = base_report("theorem5", g1, g2);
    if (g1.edge_count() == 0) fail(Errc::not_regular, "positive part is empty");
    Graph plus = positive_part(g1).graph;
    if (!is_regular(plus)) fail(Errc::not_regular, "positive part is not regular");
    rep.k = plus.degree(0);
    rep.clauses["positive_order"] = plus.order() >= 2 * rep.delta2 + 2 * (*rep.k - 1);
    rep.clauses["exception_window"] = plus.order() == 2 * rep.delta2;
    rep.satisfied = rep.clauses["positive_order"];
    return rep;
}

HypothesisReport check_theorem7_hypothesis(const Graph& g1, const Graph& g2, int k) {
    if (k < 1) fail(Errc::bad_parameter, "theorem 7 needs k >= 1");
    HypothesisReport rep = base_report("theorem7", g1, g2);
    rep.k = k;
    int lhs = (rep.delta1 + 1) * (rep.delta2 + 1);
    rep.clauses["bound"] =
        lhs <= rep.n + std::min(rep.delta1 + k * rep.delta2, k + (k + 1) * rep.delta2);

    int plus_order = 0;
    std::vector<int> plus_terms;
    for (int v = 0; v < g1.order(); ++v) {
        if (g1.degree(v) > 0) {
            ++plus_order;
            plus_terms.push_back(g1.degree(v));
        }
    }
    rep.clauses["positive_order"] = plus_order >= 2 * (rep.delta1 + rep.delta2) - 1;

    // Some realization of the positive part must carry a k-factor.
    std::sort(plus_terms.begin(), plus_terms.end(), std::greater<int>());
    bool factor_found = false;
    if (plus_order > 0 && plus_terms.back() >= k) {
        for_each_labeled_realization(plus_terms, [&](const Graph& w) {
            try {
                if (find_f_factor(w, std::vector<int>(static_cast<std::size_t>(w.order()), k))) {
                    factor_found = true;
                    return false;
                }
            } catch (const Error&) {
            }
            return true;
        });
    }
    rep.clauses["k_factor_realization"] = factor_found;
    rep.satisfied =
        rep.clauses["bound"] && rep.clauses["positive_order"] && rep.clauses["k_factor_realization"];
    return rep;
}

bool katerinis_conclusion_holds(const Graph& g1, const Graph& g2, const std::vector<int>& phi,
                                const SearchBudget& budget) {
    if (g1.order() != g2.order()) fail(Errc::size_mismatch, "graphs must share a vertex set");
    if (static_cast<int>(phi.size()) != g1.order())
        fail(Errc::bad_parameter, "bijection size must match the order");
    std::vector<int> sorted;
    for (int v = 0; v < g1.order(); ++v) sorted.push_back(g1.degree(v));
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    std::vector<int> f(static_cast<std::size_t>(g1.order()));
    for (int i = 0; i < g1.order(); ++i) f[i] = sorted[phi[i]];
    Graph host = complement(g2);
    for (int v = 0; v < host.order(); ++v)
        if (f[v] > host.degree(v)) return false;
    try {
        return find_f_factor(host, f, budget).has_value();
    } catch (const Error& e) {
        if (e.code() == Errc::parity_violation || e.code() == Errc::infeasible) return false;
        throw;
    }
}

bool katerinis_spot_check(const Graph& g1, const Graph& g2, int samples, std::uint64_t seed,
                          const SearchBudget& budget) {
    std::vector<int> phi(static_cast<std::size_t>(g1.order()));
    for (int i = 0; i < g1.order(); ++i) phi[i] = i;
    if (!katerinis_conclusion_holds(g1, g2, phi, budget)) return false;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::shuffle(phi.begin(), phi.end(), rng);
        if (!katerinis_conclusion_holds(g1, g2, phi, budget)) return false;
    }
    return true;
}

} // namespace packlab
