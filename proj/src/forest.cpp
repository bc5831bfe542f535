#include "packlab/forest.hpp"

#include <algorithm>
#include <bit>

namespace packlab {

namespace {

struct ForestSearch {
    const Graph& f;
    const Graph& g;
    std::vector<int> order;  // forest vertices, tree by tree in BFS order
    std::vector<int> parent; // BFS parent within the forest, -1 for roots
    std::vector<int> image;  // forest vertex -> g vertex
    std::uint64_t used = 0;

    bool dfs(std::size_t at) {
        if (at == order.size()) return true;
        int u = order[at];
        std::uint64_t cands;
        if (parent[u] < 0)
            cands = ~used & g.vertex_mask();
        else
            cands = ~used & g.neighbors(image[parent[u]]);
        while (cands) {
            int v = std::countr_zero(cands);
            cands &= cands - 1;
            image[u] = v;
            used |= std::uint64_t{1} << v;
            if (dfs(at + 1)) return true;
            used &= ~(std::uint64_t{1} << v);
            image[u] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> forest_embed(const Graph& f, const Graph& g) {
    if (!is_forest(f)) fail(Errc::not_a_forest, "pattern must be a forest");
    if (g.order() < f.order()) fail(Errc::bad_parameter, "host has fewer vertices than the forest");

    // Trees largest first; isolated forest vertices go last, any free slot
    // suits them.
    auto trees = components(f);
    std::sort(trees.begin(), trees.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });

    ForestSearch search{f, g, {}, std::vector<int>(static_cast<std::size_t>(f.order()), -1),
                        std::vector<int>(static_cast<std::size_t>(f.order()), -1)};
    for (const auto& tree : trees) {
        int root = *std::max_element(tree.begin(), tree.end(), [&](int a, int b) {
            return f.degree(a) != f.degree(b) ? f.degree(a) < f.degree(b) : a > b;
        });
        std::vector<int> queue{root};
        std::uint64_t seen = std::uint64_t{1} << root;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            search.order.push_back(u);
            std::uint64_t nbrs = f.neighbors(u) & ~seen;
            while (nbrs) {
                int w = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                seen |= std::uint64_t{1} << w;
                search.parent[w] = u;
                queue.push_back(w);
            }
        }
    }

    if (!search.dfs(0)) return std::nullopt;
    return search.image;
}

} // namespace packlab
