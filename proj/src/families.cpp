#include "packlab/families.hpp"

namespace packlab {

Graph build_complete(int k) {
    if (k < 0) fail(Errc::bad_parameter, "complete graph needs k >= 0");
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

Graph build_independent(int k) {
    if (k < 0) fail(Errc::bad_parameter, "independent set needs k >= 0");
    return Graph(k);
}

Graph build_complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) fail(Errc::bad_parameter, "bipartite sides must be non-negative");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph build_cycle_edges(int k) {
    if (k < 3) fail(Errc::bad_parameter, "cycle needs at least 3 edges");
    Graph g(k);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    return g;
}

Graph build_path_edges(int k) {
    if (k < 0) fail(Errc::bad_parameter, "path needs k >= 0 edges");
    Graph g(k + 1);
    for (int v = 0; v < k; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph build_star(int t) {
    if (t < 0) fail(Errc::bad_parameter, "star needs t >= 0 leaves");
    Graph g(t + 1);
    for (int v = 1; v <= t; ++v) g.add_edge(0, v);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph g(g1.order() + g2.order());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(g1.order() + u, g1.order() + v);
    return g;
}

Graph build_disjoint_copies(int copies, const Graph& g) {
    if (copies < 0) fail(Errc::bad_parameter, "copy count must be non-negative");
    Graph out(0);
    for (int i = 0; i < copies; ++i) out = disjoint_union(out, g);
    return out;
}

Graph build_u2(int l, int t) {
    if (l < 1 || t < 1) fail(Errc::bad_parameter, "U2(l,t) needs l >= 1 and t >= 1");
    return disjoint_union(build_disjoint_copies(l, build_complete(2)), build_star(t));
}

Graph build_u3(int l) {
    if (l < 0) fail(Errc::bad_parameter, "U3(l) needs l >= 0");
    // C4 on 0..3; triangles {0, 4+2i, 5+2i} all share vertex 0.
    Graph g(4 + 2 * l);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    for (int i = 0; i < l; ++i) {
        int a = 4 + 2 * i, b = 5 + 2 * i;
        g.add_edge(0, a);
        g.add_edge(0, b);
        g.add_edge(a, b);
    }
    return g;
}

} // namespace packlab
