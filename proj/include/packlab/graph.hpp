#pragma once

#include <cstdint>
#include <vector>

#include "packlab/errors.hpp"

namespace packlab {

// Simple undirected labeled graph on vertices 0..n-1, adjacency kept as one
// 64-bit row mask per vertex. All library operations treat graphs as values.
class Graph {
public:
    static constexpr int max_order = 64;

    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    bool has_edge(int u, int v) const { return u != v && (rows_[u] >> v & 1u); }
    std::uint64_t neighbors(int v) const { return rows_[v]; }
    int degree(int v) const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && rows_ == other.rows_; }

    std::uint64_t vertex_mask() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

// Structural queries. All are pure; graphs are never mutated.
int max_degree(const Graph& g);
int min_degree(const Graph& g);
bool is_regular(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
int component_count(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
int independence_number(const Graph& g);
std::uint64_t max_independent_set(const Graph& g);

Graph complement(const Graph& g);
Graph permute(const Graph& g, const std::vector<int>& relabel);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Subgraph induced by the positive-degree vertices, plus the original ids of
// its vertices in order.
struct PositivePart {
    Graph graph;
    std::vector<int> vertices;
};
PositivePart positive_part(const Graph& g);

// Minimum degree over the positive-degree vertices. Errors when g is edgeless.
int delta_plus(const Graph& g);

} // namespace packlab
