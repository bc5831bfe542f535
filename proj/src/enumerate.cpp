#include "packlab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "packlab/canonical.hpp"
#include "packlab/graph6.hpp"

namespace packlab {

std::vector<std::string> enumerate_graph6(int n, int cap) {
    if (n < 0) fail(Errc::bad_parameter, "order must be non-negative");
    if (n > cap) fail(Errc::order_too_large, "order " + std::to_string(n) +
                                                 " exceeds enumeration cap " + std::to_string(cap));
    std::vector<std::string> level{graph6_encode(Graph(0))};
    for (int k = 1; k <= n; ++k) {
        std::set<std::string> next;
        for (const auto& line : level) {
            Graph parent = graph6_decode(line);
            // New vertex k-1 attached to every subset of the old vertices.
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
                Graph child(k);
                for (auto [u, v] : parent.edges()) child.add_edge(u, v);
                std::uint64_t scan = mask;
                while (scan) {
                    int u = std::countr_zero(scan);
                    scan &= scan - 1;
                    child.add_edge(u, k - 1);
                }
                next.insert(canonical_form(child).bytes);
            }
        }
        level.assign(next.begin(), next.end());
    }
    return level;
}

std::vector<Graph> enumerate_graphs(int n, int cap) {
    std::vector<Graph> out;
    for (const auto& line : enumerate_graph6(n, cap)) out.push_back(graph6_decode(line));
    return out;
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit) {
    if (n < 0 || n > 6) fail(Errc::order_too_large, "labeled enumeration is for tiny orders only");
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (mask >> bit & 1) g.add_edge(u, v);
        visit(g);
    }
}

} // namespace packlab
