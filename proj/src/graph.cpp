#include "packlab/graph.hpp"

#include <algorithm>
#include <bit>

namespace packlab {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > max_order) fail(Errc::bad_parameter, "graph order out of range");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) fail(Errc::bad_parameter, "vertex id out of range");
}

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) fail(Errc::bad_parameter, "self-loops are not allowed");
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
}

void Graph::toggle_edge(int u, int v) {
    if (has_edge(u, v))
        remove_edge(u, v);
    else
        add_edge(u, v);
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t upper = rows_[u] >> (u + 1) << (u + 1);
        while (upper) {
            int v = std::countr_zero(upper);
            upper &= upper - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = g.order();
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

bool is_regular(const Graph& g) { return max_degree(g) == min_degree(g); }

namespace {

// Expands a seed vertex to its whole component, as a bitmask.
std::uint64_t component_mask(const Graph& g, int seed, std::uint64_t unseen) {
    std::uint64_t comp = std::uint64_t{1} << seed;
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t scan = frontier;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            next |= g.neighbors(v);
        }
        frontier = next & unseen & ~comp;
        comp |= frontier;
    }
    return comp;
}

} // namespace

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::uint64_t unseen = g.vertex_mask();
    while (unseen) {
        int seed = std::countr_zero(unseen);
        std::uint64_t comp = component_mask(g, seed, unseen);
        unseen &= ~comp;
        std::vector<int> verts;
        while (comp) {
            verts.push_back(std::countr_zero(comp));
            comp &= comp - 1;
        }
        out.push_back(std::move(verts));
    }
    return out;
}

int component_count(const Graph& g) {
    int count = 0;
    std::uint64_t unseen = g.vertex_mask();
    while (unseen) {
        int seed = std::countr_zero(unseen);
        unseen &= ~component_mask(g, seed, unseen);
        ++count;
    }
    return count;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || component_count(g) == 1; }

bool is_forest(const Graph& g) { return g.edge_count() == g.order() - component_count(g); }

namespace {

// Branch and bound maximum independent set over a candidate mask.
void mis_search(const Graph& g, std::uint64_t candidates, std::uint64_t chosen, int& best,
                std::uint64_t& best_set) {
    int size = std::popcount(chosen);
    if (size + std::popcount(candidates) <= best) return;
    if (!candidates) {
        if (size > best) {
            best = size;
            best_set = chosen;
        }
        return;
    }
    // Branch on the candidate of largest degree within the candidate set.
    int pick = -1, pick_deg = -1;
    std::uint64_t scan = candidates;
    while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        int d = std::popcount(g.neighbors(v) & candidates);
        if (d > pick_deg) {
            pick_deg = d;
            pick = v;
        }
    }
    mis_search(g, candidates & ~(g.neighbors(pick) | (std::uint64_t{1} << pick)),
               chosen | (std::uint64_t{1} << pick), best, best_set);
    mis_search(g, candidates & ~(std::uint64_t{1} << pick), chosen, best, best_set);
}

} // namespace

std::uint64_t max_independent_set(const Graph& g) {
    int best = 0;
    std::uint64_t best_set = 0;
    mis_search(g, g.vertex_mask(), 0, best, best_set);
    return best_set;
}

int independence_number(const Graph& g) { return std::popcount(max_independent_set(g)); }

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

Graph permute(const Graph& g, const std::vector<int>& relabel) {
    if (static_cast<int>(relabel.size()) != g.order())
        fail(Errc::bad_parameter, "relabeling size does not match graph order");
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(relabel[u], relabel[v]);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

PositivePart positive_part(const Graph& g) {
    std::vector<int> verts;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) verts.push_back(v);
    if (verts.empty()) fail(Errc::no_positive_vertex, "graph has no vertex of positive degree");
    return PositivePart{induced_subgraph(g, verts), std::move(verts)};
}

int delta_plus(const Graph& g) {
    int best = -1;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d > 0 && (best < 0 || d < best)) best = d;
    }
    if (best < 0) fail(Errc::no_positive_vertex, "delta_plus of an edgeless graph is undefined");
    return best;
}

} // namespace packlab
