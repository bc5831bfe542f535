#include "packlab/recognizers.hpp"

#include <algorithm>
#include <bit>

#include "packlab/canonical.hpp"
#include "packlab/degree_sequence.hpp"
#include "packlab/families.hpp"

namespace packlab {

const char* exception_name(ExceptionKind::Family family) {
    switch (family) {
    case ExceptionKind::F1: return "F1";
    case ExceptionKind::F2: return "F2";
    case ExceptionKind::F3: return "F3";
    case ExceptionKind::F4: return "F4";
    }
    return "?";
}

namespace {

bool clique_search(const Graph& g, int size, std::uint64_t candidates, int depth) {
    if (depth == size) return true;
    if (std::popcount(candidates) < size - depth) return false;
    std::uint64_t scan = candidates;
    while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        if (clique_search(g, size, scan & g.neighbors(v), depth + 1)) return true;
    }
    return false;
}

} // namespace

bool has_clique(const Graph& g, int size) {
    if (size <= 0) return true;
    return clique_search(g, size, g.vertex_mask(), 0);
}

std::set<ExceptionKind> match_exceptions(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order()) fail(Errc::size_mismatch, "graphs must share a vertex set");
    std::set<ExceptionKind> out;
    int n = g1.order();
    int d1 = max_degree(g1), d2 = max_degree(g2);

    if (n == 6) {
        Graph f1_left = disjoint_union(build_cycle_edges(5), build_independent(1));
        if (isomorphic(g1, f1_left) && isomorphic(g2, build_disjoint_copies(2, build_complete(3))))
            out.insert({ExceptionKind::F1});
    }
    if (d2 >= 1 && d2 <= d1 && n == d1 * (d2 + 1)) {
        Graph f2_left = disjoint_union(build_complete(d1 + 1), build_independent(d1 * d2 - 1));
        if (isomorphic(g1, f2_left) &&
            isomorphic(g2, build_disjoint_copies(d1, build_complete(d2 + 1))))
            out.insert({ExceptionKind::F2, d1, d2});
    }
    bool g1_is_matching = d2 >= 1 && n == 2 * d2 &&
                          isomorphic(g1, build_disjoint_copies(d2, build_complete(2)));
    if (g1_is_matching && d2 % 2 == 1 && isomorphic(g2, build_complete_bipartite(d2, d2)))
        out.insert({ExceptionKind::F3, -1, d2});
    if (g1_is_matching && has_clique(g2, d2 + 1)) out.insert({ExceptionKind::F4, -1, d2});
    return out;
}

namespace {

// Assigns vertices to clique or independent side, largest degree first.
bool split_assign(const Graph& g, const std::vector<int>& order, std::size_t at,
                  std::uint64_t clique, std::uint64_t indep, std::uint64_t& clique_out) {
    if (at == order.size()) {
        clique_out = clique;
        return true;
    }
    int v = order[at];
    std::uint64_t bit = std::uint64_t{1} << v;
    if ((clique & ~g.neighbors(v)) == 0 &&
        split_assign(g, order, at + 1, clique | bit, indep, clique_out))
        return true;
    if ((indep & g.neighbors(v)) == 0 &&
        split_assign(g, order, at + 1, clique, indep | bit, clique_out))
        return true;
    return false;
}

} // namespace

std::optional<SplitWitness> is_split(const Graph& g) {
    std::vector<int> order;
    for (int v = 0; v < g.order(); ++v) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    std::uint64_t clique_mask = 0;
    if (!split_assign(g, order, 0, 0, 0, clique_mask)) return std::nullopt;
    SplitWitness w;
    for (int v = 0; v < g.order(); ++v) {
        if (clique_mask >> v & 1)
            w.clique.push_back(v);
        else
            w.independent.push_back(v);
    }
    return w;
}

namespace {

bool dominating_clique_search(const Graph& g, int size, int depth, int from,
                              std::uint64_t candidates, std::uint64_t clique,
                              std::uint64_t dominated, std::vector<int>& picked) {
    if (depth == size) return dominated == g.vertex_mask();
    std::uint64_t scan = candidates & ~((std::uint64_t{1} << from) - 1);
    while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        picked.push_back(v);
        if (dominating_clique_search(g, size, depth + 1, v + 1, candidates & g.neighbors(v),
                                     clique | (std::uint64_t{1} << v),
                                     dominated | g.neighbors(v) | (std::uint64_t{1} << v), picked))
            return true;
        picked.pop_back();
    }
    return false;
}

} // namespace

std::optional<DominatingCliqueWitness> has_dominating_clique(const Graph& g) {
    if (g.order() == 0) return DominatingCliqueWitness{};
    for (int size = 1; size <= g.order(); ++size) {
        std::vector<int> picked;
        if (dominating_clique_search(g, size, 0, 0, g.vertex_mask(), 0, 0, picked))
            return DominatingCliqueWitness{std::move(picked)};
    }
    return std::nullopt;
}

bool is_unigraph(const Graph& g, int cap) {
    if (g.order() > cap)
        fail(Errc::order_too_large, "unigraph oracle capped at order " + std::to_string(cap));
    std::string canon = canonical_form(g).bytes;
    bool unigraph = true;
    for_each_labeled_realization(degree_sequence(g).terms(), [&](const Graph& h) {
        if (canonical_form(h).bytes != canon) {
            unigraph = false;
            return false;
        }
        return true;
    });
    return unigraph;
}

} // namespace packlab
