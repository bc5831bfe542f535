#pragma once

// Brute-force oracles for the test suite. Deliberately independent of the
// library's search paths: isomorphism is checked by trying permutations,
// packings and factors by enumerating labeled graphs and edge subsets.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "packlab/enumerate.hpp"
#include "packlab/graph.hpp"

namespace oracles {

using packlab::Graph;

inline bool isomorphic_by_permutations(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    int n = a.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = u + 1; v < n && match; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

// Degree multisets realized by some simple graph on n vertices.
inline std::set<std::vector<int>> realizable_multisets(int n) {
    std::set<std::vector<int>> out;
    packlab::for_each_labeled_graph(n, [&](const Graph& g) { out.insert(sorted_degrees(g)); });
    return out;
}

// Does any realization of g1's degree multiset avoid every edge of g2?
inline bool pack_sequence_exists(const Graph& g1, const Graph& g2) {
    std::vector<int> want = sorted_degrees(g1);
    bool found = false;
    packlab::for_each_labeled_graph(g1.order(), [&](const Graph& h) {
        if (found || sorted_degrees(h) != want) return;
        for (auto [u, v] : h.edges())
            if (g2.has_edge(u, v)) return;
        found = true;
    });
    return found;
}

// f-factor existence by enumerating every edge subset of g.
inline bool f_factor_exists(const Graph& g, const std::vector<int>& f) {
    auto edges = g.edges();
    if (edges.size() > 24) return false; // oracle scale guard
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (mask >> i & 1) {
                ++deg[edges[i].first];
                ++deg[edges[i].second];
            }
        }
        if (deg == f) return true;
    }
    return false;
}

// All distinct degree multisets of length n with terms in 0..n-1.
inline std::vector<std::vector<int>> all_multisets(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_term) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int t = std::min(max_term, n - 1); t >= 0; --t) {
            cur.push_back(t);
            rec(remaining - 1, t);
            cur.pop_back();
        }
    };
    rec(n, n - 1);
    return out;
}

} // namespace oracles
