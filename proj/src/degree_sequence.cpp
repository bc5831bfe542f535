#include "packlab/degree_sequence.hpp"

#include <algorithm>
#include <numeric>

namespace packlab {

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
    for (int t : terms_)
        if (t < 0) fail(Errc::bad_parameter, "degree sequence terms must be non-negative");
    std::sort(terms_.begin(), terms_.end(), std::greater<int>());
}

int DegreeSequence::sum() const { return std::accumulate(terms_.begin(), terms_.end(), 0); }

bool DegreeSequence::all_zero() const { return terms_.empty() || terms_.front() == 0; }

DegreeSequence degree_sequence(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    return DegreeSequence(std::move(d));
}

namespace {

// Erdos-Gallai inequalities over an already sorted non-increasing sequence.
bool graphical_sorted(const std::vector<int>& d) {
    int n = static_cast<int>(d.size());
    long long total = 0;
    for (int t : d) total += t;
    if (total % 2 != 0) return false;
    long long head = 0;
    for (int k = 1; k <= n; ++k) {
        head += d[k - 1];
        long long tail = 0;
        for (int i = k; i < n; ++i) tail += std::min(d[i], k);
        if (head > static_cast<long long>(k) * (k - 1) + tail) return false;
    }
    return true;
}

} // namespace

bool is_graphical(const DegreeSequence& seq) {
    if (seq.length() == 0) return true;
    if (seq.term(0) > seq.length() - 1) return false;
    return graphical_sorted(seq.terms());
}

namespace {

// Lays off max-residual vertices against the largest remaining residuals.
// Ties always break toward the smallest vertex index.
void complete_havel_hakimi(Graph& g, std::vector<int>& residual) {
    int n = g.order();
    for (;;) {
        int v = -1;
        for (int i = 0; i < n; ++i)
            if (residual[i] > 0 && (v < 0 || residual[i] > residual[v])) v = i;
        if (v < 0) break;
        int need = residual[v];
        residual[v] = 0;
        for (int e = 0; e < need; ++e) {
            int u = -1;
            for (int i = 0; i < n; ++i) {
                if (i == v || residual[i] <= 0 || g.has_edge(v, i)) continue;
                if (u < 0 || residual[i] > residual[u]) u = i;
            }
            if (u < 0) fail(Errc::not_graphical, "sequence is not graphical");
            g.add_edge(v, u);
            --residual[u];
        }
    }
}

} // namespace

Graph havel_hakimi_realize(const DegreeSequence& seq) {
    if (!is_graphical(seq)) fail(Errc::not_graphical, "sequence is not graphical");
    Graph g(seq.length());
    std::vector<int> residual(seq.terms());
    complete_havel_hakimi(g, residual);
    return g;
}

std::pair<Graph, int> anchored_realize(const DegreeSequence& seq, int anchor_degree) {
    if (!is_graphical(seq)) fail(Errc::not_graphical, "sequence is not graphical");
    if (seq.all_zero()) fail(Errc::no_positive_term, "sequence has no positive term");

    int y = -1;
    for (int i = 0; i < seq.length(); ++i)
        if (seq.term(i) > 0) y = i;
    if (seq.term(y) != anchor_degree)
        fail(Errc::bad_parameter, "anchor degree must be the minimum positive term");

    // Lay off y against the anchor_degree highest-degree slots first
    // (Kleitman-Wang keeps the residual graphical), then finish greedily.
    Graph g(seq.length());
    std::vector<int> residual(seq.terms());
    residual[y] = 0;
    for (int i = 0; i < anchor_degree; ++i) {
        g.add_edge(y, i);
        --residual[i];
    }
    complete_havel_hakimi(g, residual);
    return {g, y};
}

namespace {

struct RealizationSearch {
    int n;
    Graph g;
    std::vector<int> residual;
    const std::function<bool(const Graph&)>* visit;

    bool suffix_feasible(int from) const {
        std::vector<int> rest(residual.begin() + from, residual.end());
        std::sort(rest.begin(), rest.end(), std::greater<int>());
        if (!rest.empty() && rest.front() > static_cast<int>(rest.size()) - 1) return false;
        return graphical_sorted(rest);
    }

    // Picks `need` neighbors for v among candidates[at..], then moves on.
    bool choose(int v, int need, const std::vector<int>& candidates, std::size_t at) {
        if (need == 0) {
            if (!suffix_feasible(v + 1)) return true;
            return run(v + 1);
        }
        if (candidates.size() - at < static_cast<std::size_t>(need)) return true;
        for (std::size_t i = at; i + need <= candidates.size(); ++i) {
            int u = candidates[i];
            g.add_edge(v, u);
            --residual[u];
            bool keep_going = choose(v, need - 1, candidates, i + 1);
            ++residual[u];
            g.remove_edge(v, u);
            if (!keep_going) return false;
        }
        return true;
    }

    bool run(int v) {
        if (v == n) return (*visit)(g);
        if (residual[v] == 0) return run(v + 1);
        std::vector<int> candidates;
        for (int u = v + 1; u < n; ++u)
            if (residual[u] > 0) candidates.push_back(u);
        int need = residual[v];
        residual[v] = 0;
        bool keep_going = choose(v, need, candidates, 0);
        residual[v] = need;
        return keep_going;
    }
};

} // namespace

bool for_each_labeled_realization(const std::vector<int>& degrees,
                                  const std::function<bool(const Graph&)>& visit) {
    int n = static_cast<int>(degrees.size());
    RealizationSearch search{n, Graph(n), degrees, &visit};
    for (int d : degrees)
        if (d < 0 || d > n - 1) return true;
    if (!search.suffix_feasible(0)) return true;
    return search.run(0);
}

} // namespace packlab
