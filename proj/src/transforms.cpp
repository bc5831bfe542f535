#include "packlab/transforms.hpp"

#include <bit>

namespace packlab {

Graph edge_exchange(const Graph& g, const EdgeExchangeSpec& spec) {
    auto [x, y, u, v] = spec;
    int ids[4] = {x, y, u, v};
    for (int a = 0; a < 4; ++a) {
        if (ids[a] < 0 || ids[a] >= g.order())
            fail(Errc::invalid_exchange, "exchange vertex out of range");
        for (int b = a + 1; b < 4; ++b)
            if (ids[a] == ids[b]) fail(Errc::invalid_exchange, "exchange vertices must be distinct");
    }
    if (!g.has_edge(v, x)) fail(Errc::invalid_exchange, "vx is not an edge");
    if (!g.has_edge(u, y)) fail(Errc::invalid_exchange, "uy is not an edge");
    if (g.has_edge(v, y)) fail(Errc::invalid_exchange, "vy is already an edge");
    if (g.has_edge(u, x)) fail(Errc::invalid_exchange, "ux is already an edge");

    Graph out = g;
    out.remove_edge(v, x);
    out.remove_edge(u, y);
    out.add_edge(v, y);
    out.add_edge(u, x);
    return out;
}

Graph vertex_interchange(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        fail(Errc::bad_parameter, "interchange vertex out of range");
    if (u == v) return g;
    std::vector<int> relabel(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) relabel[i] = i;
    relabel[u] = v;
    relabel[v] = u;
    return permute(g, relabel);
}

std::vector<std::pair<int, int>> bad_pairs(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order()) fail(Errc::size_mismatch, "graphs must share a vertex set");
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : g1.edges())
        if (g2.has_edge(a, b)) out.emplace_back(a, b);
    return out;
}

int count_bad_pairs(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order()) fail(Errc::size_mismatch, "graphs must share a vertex set");
    int total = 0;
    for (int v = 0; v < g1.order(); ++v)
        total += std::popcount(g1.neighbors(v) & g2.neighbors(v));
    return total / 2;
}

} // namespace packlab
