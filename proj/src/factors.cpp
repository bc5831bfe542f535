#include "packlab/factors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace packlab {

namespace {

struct FactorSearch {
    const Graph& g;
    std::vector<int> order; // descending f, ties by index
    std::vector<int> residual;
    Graph h;
    std::uint64_t nodes = 0;
    std::uint64_t node_cap;

    bool feasible(std::size_t from) const {
        // Every unfinished vertex still needs enough live partners.
        std::uint64_t live = 0;
        for (std::size_t i = from; i < order.size(); ++i)
            if (residual[order[i]] > 0) live |= std::uint64_t{1} << order[i];
        long long total = 0;
        for (std::size_t i = from; i < order.size(); ++i) {
            int v = order[i];
            total += residual[v];
            if (residual[v] > std::popcount(g.neighbors(v) & live)) return false;
        }
        return total % 2 == 0;
    }

    bool choose(std::size_t at, int v, int need, const std::vector<int>& cands, std::size_t from) {
        if (++nodes > node_cap) return false;
        if (need == 0) return feasible(at + 1) ? run(at + 1) : false;
        if (cands.size() - from < static_cast<std::size_t>(need)) return false;
        for (std::size_t i = from; i + need <= cands.size(); ++i) {
            int u = cands[i];
            if (residual[u] == 0) continue;
            h.add_edge(v, u);
            --residual[u];
            if (choose(at, v, need - 1, cands, i + 1)) return true;
            ++residual[u];
            h.remove_edge(v, u);
            if (nodes > node_cap) return false;
        }
        return false;
    }

    bool run(std::size_t at) {
        while (at < order.size() && residual[order[at]] == 0) ++at;
        if (at == order.size()) return true;
        int v = order[at];
        std::vector<int> cands;
        for (std::size_t j = at + 1; j < order.size(); ++j) {
            int u = order[j];
            if (residual[u] > 0 && g.has_edge(v, u)) cands.push_back(u);
        }
        int need = residual[v];
        residual[v] = 0;
        if (choose(at, v, need, cands, 0)) return true;
        residual[v] = need;
        return false;
    }
};

} // namespace

std::optional<Graph> find_f_factor(const Graph& g, const std::vector<int>& f,
                                   const SearchBudget& budget) {
    if (static_cast<int>(f.size()) != g.order())
        fail(Errc::bad_parameter, "f must assign a target to every vertex");
    long long total = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (f[v] < 0 || f[v] > g.degree(v))
            fail(Errc::infeasible, "target degree outside 0..deg(v) at vertex " + std::to_string(v));
        total += f[v];
    }
    if (total % 2 != 0) fail(Errc::parity_violation, "target degrees have odd sum");

    FactorSearch search{g, {}, f, Graph(g.order()), 0, budget.max_nodes};
    for (int v = 0; v < g.order(); ++v) search.order.push_back(v);
    std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        return f[a] != f[b] ? f[a] > f[b] : a < b;
    });
    if (!search.feasible(0)) return std::nullopt;
    if (search.run(0)) return search.h;
    if (search.nodes > search.node_cap) fail(Errc::budget_exhausted, "f-factor search budget spent");
    return std::nullopt;
}

PackingResult pack_regular_by_factor_growth(const Graph& g1_positive, const Graph& g2,
                                            const std::vector<int>& x_set,
                                            const SearchBudget& budget) {
    if (!is_regular(g1_positive) || g1_positive.order() == 0)
        fail(Errc::not_regular, "factor growth needs a regular non-empty graph");
    if (static_cast<int>(x_set.size()) != g1_positive.order())
        fail(Errc::size_mismatch, "x_set must have one slot per positive vertex");
    int m = g1_positive.order();
    int k = g1_positive.degree(0);
    Graph hostpiece = induced_subgraph(g2, x_set);

    Graph grown(m);
    int r = 0;
    while (r < k) {
        int step = std::min(3, k - r);
        // Next factor must avoid both the host piece and what we grew so far.
        Graph room(m);
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v)
                if (!hostpiece.has_edge(u, v) && !grown.has_edge(u, v)) room.add_edge(u, v);
        std::optional<Graph> factor;
        try {
            factor = find_f_factor(room, std::vector<int>(static_cast<std::size_t>(m), step), budget);
        } catch (const Error& e) {
            if (e.code() != Errc::infeasible && e.code() != Errc::parity_violation) throw;
        }
        if (!factor) break;
        for (auto [u, v] : factor->edges()) grown.add_edge(u, v);
        r += step;
    }

    if (r == k) {
        PackingResult result;
        result.mode = PackMode::sequence;
        result.status = PackStatus::packed;
        result.witness = grown;
        return result;
    }
    return pack_sequence(g1_positive, hostpiece, budget);
}

} // namespace packlab
