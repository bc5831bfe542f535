#include "packlab/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>

#include "packlab/graph6.hpp"

namespace packlab {

std::vector<int> equitable_colors(const Graph& g) {
    int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    int classes = n > 0 ? 1 : 0;
    for (;;) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[v];
            s.push_back(color[v]);
            std::uint64_t nbrs = g.neighbors(v);
            std::vector<int> around;
            while (nbrs) {
                around.push_back(color[std::countr_zero(nbrs)]);
                nbrs &= nbrs - 1;
            }
            std::sort(around.begin(), around.end());
            s.insert(s.end(), around.begin(), around.end());
        }
        std::map<std::vector<int>, int> ids;
        for (int v = 0; v < n; ++v) ids.emplace(sig[v], 0);
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        for (int v = 0; v < n; ++v) color[v] = ids[sig[v]];
        if (next == classes) break;
        classes = next;
    }
    return color;
}

namespace {

constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> cells; // vertices per refinement cell, ascending
    std::vector<int> cell_of_position;   // which cell supplies each position
    std::vector<int> perm;               // position -> vertex
    std::vector<char> used;
    std::vector<std::uint64_t> cur_rows;
    std::vector<std::uint64_t> best_rows;
    std::vector<int> best_perm;

    // Adjacency bits of v against the already placed prefix, earliest
    // position as most significant bit, so integer order is string order.
    std::uint64_t row_bits(int v, int depth) const {
        std::uint64_t bits = 0;
        for (int i = 0; i < depth; ++i) bits = bits << 1 | (g.has_edge(v, perm[i]) ? 1 : 0);
        return bits;
    }

    void dfs(int depth) {
        if (depth == n) {
            best_perm = perm;
            return;
        }
        for (int v : cells[cell_of_position[depth]]) {
            if (used[v]) continue;
            std::uint64_t row = row_bits(v, depth);
            if (row > best_rows[depth]) continue;
            if (row < best_rows[depth]) {
                best_rows[depth] = row;
                std::fill(best_rows.begin() + depth + 1, best_rows.end(), kUnset);
            }
            perm[depth] = v;
            used[v] = 1;
            dfs(depth + 1);
            used[v] = 0;
        }
    }
};

// True when every cell and cell pair is all-edges or no-edges; any
// cell-respecting order is then canonical.
bool partition_homogeneous(const Graph& g, const std::vector<std::vector<int>>& cells) {
    for (std::size_t a = 0; a < cells.size(); ++a) {
        for (std::size_t b = a; b < cells.size(); ++b) {
            int present = 0, possible = 0;
            if (a == b) {
                int k = static_cast<int>(cells[a].size());
                possible = k * (k - 1) / 2;
                for (std::size_t i = 0; i < cells[a].size(); ++i)
                    for (std::size_t j = i + 1; j < cells[a].size(); ++j)
                        present += g.has_edge(cells[a][i], cells[a][j]) ? 1 : 0;
            } else {
                possible = static_cast<int>(cells[a].size() * cells[b].size());
                for (int u : cells[a])
                    for (int v : cells[b]) present += g.has_edge(u, v) ? 1 : 0;
            }
            if (present != 0 && present != possible) return false;
        }
    }
    return true;
}

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    int n = g.order();
    std::vector<int> color = equitable_colors(g);
    int classes = 0;
    for (int c : color) classes = std::max(classes, c + 1);
    std::vector<std::vector<int>> cells(static_cast<std::size_t>(classes));
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);

    std::vector<int> order; // position -> vertex
    if (partition_homogeneous(g, cells)) {
        for (auto& cell : cells) order.insert(order.end(), cell.begin(), cell.end());
    } else {
        CanonSearch search{g, n, cells, {}, std::vector<int>(n, -1), std::vector<char>(n, 0),
                           {},      {},   {}};
        for (std::size_t c = 0; c < cells.size(); ++c)
            search.cell_of_position.insert(search.cell_of_position.end(), cells[c].size(),
                                           static_cast<int>(c));
        search.best_rows.assign(static_cast<std::size_t>(n), kUnset);
        search.dfs(0);
        order = search.best_perm;
    }

    CanonicalForm out;
    out.labeling.assign(static_cast<std::size_t>(n), 0);
    for (int pos = 0; pos < n; ++pos) out.labeling[order[pos]] = pos;
    out.bytes = graph6_encode(permute(g, out.labeling));
    return out;
}

Graph canonical_graph(const Graph& g) { return permute(g, canonical_form(g).labeling); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a).bytes == canonical_form(b).bytes;
}

} // namespace packlab
