#include "packlab/packing.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>

#include "packlab/canonical.hpp"
#include "packlab/transforms.hpp"

namespace packlab {

const char* pack_status_name(PackStatus status) {
    switch (status) {
    case PackStatus::packed: return "PACKED";
    case PackStatus::unpackable: return "UNPACKABLE";
    case PackStatus::budget_exhausted: return "BUDGET_EXHAUSTED";
    }
    return "?";
}

const char* pack_mode_name(PackMode mode) {
    switch (mode) {
    case PackMode::embed: return "embed";
    case PackMode::sequence: return "sequence";
    case PackMode::component_wise: return "componentwise";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetGuard {
    const SearchBudget& budget;
    SearchStats& stats;
    Clock::time_point start = Clock::now();
    bool hit = false;

    // Counts one search node; false once the budget is spent.
    bool tick() {
        if (hit) return false;
        if (++stats.nodes > budget.max_nodes) {
            hit = true;
            return false;
        }
        if (budget.max_millis > 0 && (stats.nodes & 0xfff) == 0) {
            auto ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
            if (ms > budget.max_millis) {
                hit = true;
                return false;
            }
        }
        return true;
    }

    void finish() {
        stats.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    }
};

std::vector<std::uint64_t> complement_rows(const Graph& g) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        rows[v] = ~g.neighbors(v) & ~(std::uint64_t{1} << v) & g.vertex_mask();
    return rows;
}

// ---------------------------------------------------------------------------
// Embedding search: place the pattern into the complement of the host,
// most-constrained pattern vertex first.

struct EmbedSearch {
    const Graph& pattern;
    std::vector<std::uint64_t> comp; // complement adjacency of the host
    std::vector<std::uint64_t> degree_ok; // per pattern vertex: hosts with enough room
    std::vector<int> order;
    std::vector<int> place; // pattern vertex -> host vertex
    std::uint64_t used = 0;
    BudgetGuard& guard;

    bool dfs(std::size_t at) {
        if (at == order.size()) return true;
        if (!guard.tick()) return false;
        int u = order[at];
        std::uint64_t cands = ~used & degree_ok[u];
        for (int w = 0; w < pattern.order(); ++w)
            if (place[w] >= 0 && pattern.has_edge(u, w)) cands &= comp[place[w]];
        while (cands) {
            int v = std::countr_zero(cands);
            cands &= cands - 1;
            place[u] = v;
            used |= std::uint64_t{1} << v;
            if (dfs(at + 1)) return true;
            used &= ~(std::uint64_t{1} << v);
            place[u] = -1;
            if (guard.hit) return false;
        }
        return false;
    }
};

// Pattern order: seed with the highest degree, then grow by the number of
// already ordered neighbors so candidate masks stay tight.
std::vector<int> embed_order(const Graph& pattern) {
    int n = pattern.order();
    std::vector<int> order;
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (done[v]) continue;
            int links = 0;
            for (int w : order)
                if (pattern.has_edge(v, w)) ++links;
            int deg = pattern.degree(v);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        order.push_back(best);
        done[best] = 1;
    }
    return order;
}

// ---------------------------------------------------------------------------
// Sequence search: choose which host vertices carry which positive degrees,
// then build the edges inside the host complement. The emit callback returns
// false to stop the whole enumeration.

struct SequenceEnum {
    const Graph& host;
    std::vector<std::uint64_t> comp;
    std::uint64_t allowed;
    std::vector<std::pair<int, int>> classes; // (degree value, multiplicity), value descending
    BudgetGuard& guard;
    const std::function<bool(const Graph&)>& emit;

    Graph h;
    std::vector<int> target;   // assigned degree per host vertex
    std::vector<int> residual; // while building edges
    std::vector<int> positive; // chosen carriers, ascending

    explicit SequenceEnum(const Graph& host_, std::uint64_t allowed_,
                          const std::vector<int>& pos_terms, BudgetGuard& guard_,
                          const std::function<bool(const Graph&)>& emit_)
        : host(host_), comp(complement_rows(host_)), allowed(allowed_), guard(guard_), emit(emit_),
          h(host_.order()), target(static_cast<std::size_t>(host_.order()), 0) {
        for (int t : pos_terms) {
            if (!classes.empty() && classes.back().first == t)
                ++classes.back().second;
            else
                classes.emplace_back(t, 1);
        }
    }

    bool run() {
        int want = 0;
        for (auto& [value, count] : classes) want += count;
        if (want > std::popcount(allowed)) return true;
        return assign(0, classes.empty() ? 0 : classes[0].second, 0);
    }

    bool residual_feasible() const {
        std::vector<int> rest;
        for (std::size_t i = 0; i < positive.size(); ++i)
            if (residual[positive[i]] > 0) rest.push_back(residual[positive[i]]);
        std::sort(rest.begin(), rest.end(), std::greater<int>());
        if (!rest.empty() && rest.front() > static_cast<int>(rest.size()) - 1) return false;
        long long total = 0;
        for (int t : rest) total += t;
        if (total % 2 != 0) return false;
        long long head = 0;
        for (std::size_t k = 1; k <= rest.size(); ++k) {
            head += rest[k - 1];
            long long tail = 0;
            for (std::size_t i = k; i < rest.size(); ++i)
                tail += std::min(rest[i], static_cast<int>(k));
            if (head > static_cast<long long>(k) * (k - 1) + tail) return false;
        }
        return true;
    }

    bool assign(std::size_t cls, int remaining, int min_v) {
        if (!guard.tick()) return false;
        if (cls == classes.size()) return edges_start();
        if (remaining == 0)
            return assign(cls + 1, cls + 1 < classes.size() ? classes[cls + 1].second : 0, 0);
        int value = classes[cls].first;
        for (int v = min_v; v < host.order(); ++v) {
            if (!(allowed >> v & 1) || target[v] != 0) continue;
            if (std::popcount(comp[v] & allowed) < value) continue;
            target[v] = value;
            bool keep = assign(cls, remaining - 1, v + 1);
            target[v] = 0;
            if (!keep) return false;
        }
        return true;
    }

    bool edges_start() {
        positive.clear();
        residual.assign(static_cast<std::size_t>(host.order()), 0);
        for (int v = 0; v < host.order(); ++v) {
            if (target[v] > 0) {
                positive.push_back(v);
                residual[v] = target[v];
            }
        }
        if (!residual_feasible()) return true;
        return realize(0);
    }

    // Completes carriers in ascending index order; edges only go forward.
    bool realize(std::size_t at) {
        if (!guard.tick()) return false;
        while (at < positive.size() && residual[positive[at]] == 0) ++at;
        if (at == positive.size()) return emit(h);
        int v = positive[at];
        std::vector<int> cands;
        for (std::size_t j = at + 1; j < positive.size(); ++j) {
            int u = positive[j];
            if (residual[u] > 0 && (comp[v] >> u & 1)) cands.push_back(u);
        }
        int need = residual[v];
        if (static_cast<int>(cands.size()) < need) return true;
        residual[v] = 0;
        bool keep = choose(at, v, need, cands, 0);
        residual[v] = need;
        return keep;
    }

    bool choose(std::size_t at, int v, int need, const std::vector<int>& cands, std::size_t from) {
        if (need == 0) {
            if (!residual_feasible()) return true;
            return realize(at + 1);
        }
        if (cands.size() - from < static_cast<std::size_t>(need)) return true;
        for (std::size_t i = from; i + need <= cands.size(); ++i) {
            int u = cands[i];
            if (residual[u] == 0) continue;
            h.add_edge(v, u);
            --residual[u];
            bool keep = choose(at, v, need - 1, cands, i + 1);
            ++residual[u];
            h.remove_edge(v, u);
            if (!keep) return false;
        }
        return true;
    }
};

std::vector<int> positive_terms(const Graph& g) {
    std::vector<int> terms;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) terms.push_back(g.degree(v));
    std::sort(terms.begin(), terms.end(), std::greater<int>());
    return terms;
}

bool positive_subgraph_connected(const Graph& h) {
    std::uint64_t pos = 0;
    for (int v = 0; v < h.order(); ++v)
        if (h.degree(v) > 0) pos |= std::uint64_t{1} << v;
    if (!pos) return true;
    std::uint64_t comp = std::uint64_t{1} << std::countr_zero(pos);
    for (;;) {
        std::uint64_t grown = comp;
        std::uint64_t scan = comp;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            grown |= h.neighbors(v);
        }
        if (grown == comp) break;
        comp = grown;
    }
    return comp == pos;
}

// ---------------------------------------------------------------------------
// Component-wise search: place whole components one at a time, largest
// first, with identical components forced into ascending position.

struct ComponentInfo {
    std::vector<int> terms; // positive degrees, descending
    std::string canon;
    int size = 0;
};

struct ComponentSearch {
    const Graph& host;
    std::vector<ComponentInfo> comps;
    std::uint64_t allowed;
    BudgetGuard& guard;

    Graph acc;
    std::uint64_t used = 0;
    std::optional<Graph> found;

    ComponentSearch(const Graph& host_, std::uint64_t allowed_, BudgetGuard& guard_)
        : host(host_), allowed(allowed_), guard(guard_), acc(host_.order()) {}

    static int min_vertex(std::uint64_t mask) { return std::countr_zero(mask); }

    bool place(std::size_t i, int prev_min) {
        if (i == comps.size()) {
            found = acc;
            return false; // stop everything
        }
        bool same_as_prev = i > 0 && comps[i].canon == comps[i - 1].canon;
        std::function<bool(const Graph&)> emit = [&](const Graph& h) {
            std::uint64_t pos = 0;
            for (int v = 0; v < h.order(); ++v)
                if (h.degree(v) > 0) pos |= std::uint64_t{1} << v;
            if (same_as_prev && min_vertex(pos) <= prev_min) return true;
            if (!positive_subgraph_connected(h)) return true;
            for (auto [a, b] : h.edges()) acc.add_edge(a, b);
            std::uint64_t saved = used;
            used |= pos;
            bool keep = place(i + 1, min_vertex(pos));
            used = saved;
            for (auto [a, b] : h.edges()) acc.remove_edge(a, b);
            return keep;
        };
        SequenceEnum inner(host, allowed & ~used, comps[i].terms, guard, emit);
        return inner.run();
    }
};

std::vector<ComponentInfo> component_infos(const std::vector<Graph>& parts) {
    std::vector<ComponentInfo> out;
    for (const auto& part : parts) {
        if (part.order() <= 1) continue; // trivial components carry no edges
        ComponentInfo info;
        info.size = part.order();
        for (int v = 0; v < part.order(); ++v) info.terms.push_back(part.degree(v));
        std::sort(info.terms.begin(), info.terms.end(), std::greater<int>());
        info.canon = canonical_form(part).bytes;
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(), [](const ComponentInfo& a, const ComponentInfo& b) {
        if (a.size != b.size) return a.size > b.size;
        return a.canon < b.canon;
    });
    return out;
}

PackingResult finish(PackingResult result, BudgetGuard& guard, bool found) {
    guard.finish();
    if (found)
        result.status = PackStatus::packed;
    else
        result.status = guard.hit ? PackStatus::budget_exhausted : PackStatus::unpackable;
    return result;
}

} // namespace

PackingResult pack_embed(const Graph& g1, const Graph& g2, const SearchBudget& budget) {
    if (g1.order() != g2.order()) fail(Errc::size_mismatch, "graphs must share a vertex set");
    PackingResult result;
    result.mode = PackMode::embed;
    BudgetGuard guard{budget, result.stats};

    if (count_bad_pairs(g1, g2) == 0) {
        std::vector<int> identity(static_cast<std::size_t>(g1.order()));
        for (int v = 0; v < g1.order(); ++v) identity[v] = v;
        result.witness = g1;
        result.embedding = std::move(identity);
        return finish(std::move(result), guard, true);
    }

    EmbedSearch search{g1,
                       complement_rows(g2),
                       {},
                       embed_order(g1),
                       std::vector<int>(static_cast<std::size_t>(g1.order()), -1),
                       0,
                       guard};
    search.degree_ok.assign(static_cast<std::size_t>(g1.order()), 0);
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g2.order(); ++v)
            if (std::popcount(search.comp[v]) >= g1.degree(u))
                search.degree_ok[u] |= std::uint64_t{1} << v;

    bool found = search.dfs(0);
    if (found) {
        Graph witness(g2.order());
        for (auto [a, b] : g1.edges()) witness.add_edge(search.place[a], search.place[b]);
        result.witness = std::move(witness);
        result.embedding = search.place;
    }
    return finish(std::move(result), guard, found);
}

PackingResult pack_sequence(const Graph& g1, const Graph& g2, const SearchBudget& budget) {
    if (g1.order() != g2.order()) fail(Errc::size_mismatch, "graphs must share a vertex set");
    PackingResult result;
    result.mode = PackMode::sequence;
    BudgetGuard guard{budget, result.stats};

    if (count_bad_pairs(g1, g2) == 0) {
        result.witness = g1;
        return finish(std::move(result), guard, true);
    }

    std::optional<Graph> witness;
    std::function<bool(const Graph&)> emit = [&](const Graph& h) {
        witness = h;
        return false;
    };
    SequenceEnum search(g2, g2.vertex_mask(), positive_terms(g1), guard, emit);
    search.run();
    result.witness = witness;
    return finish(std::move(result), guard, witness.has_value());
}

PackingResult pack_terms(const std::vector<int>& terms, const Graph& host, std::uint64_t allowed,
                         const SearchBudget& budget) {
    PackingResult result;
    result.mode = PackMode::sequence;
    BudgetGuard guard{budget, result.stats};

    std::vector<int> pos;
    for (int t : terms) {
        if (t < 0) fail(Errc::bad_parameter, "degree terms must be non-negative");
        if (t > 0) pos.push_back(t);
    }
    std::sort(pos.begin(), pos.end(), std::greater<int>());

    std::optional<Graph> witness;
    std::function<bool(const Graph&)> emit = [&](const Graph& h) {
        witness = h;
        return false;
    };
    SequenceEnum search(host, allowed & host.vertex_mask(), pos, guard, emit);
    search.run();
    result.witness = witness;
    return finish(std::move(result), guard, witness.has_value());
}

PackingResult pack_components_masked(const std::vector<Graph>& comps, const Graph& host,
                                     std::uint64_t allowed, const SearchBudget& budget) {
    PackingResult result;
    result.mode = PackMode::component_wise;
    BudgetGuard guard{budget, result.stats};

    ComponentSearch search(host, allowed & host.vertex_mask(), guard);
    search.comps = component_infos(comps);
    search.place(0, -1);
    result.witness = search.found;
    return finish(std::move(result), guard, search.found.has_value());
}

PackingResult pack_component_wise(const Graph& g1, const Graph& g2, const SearchBudget& budget) {
    if (g1.order() != g2.order()) fail(Errc::size_mismatch, "graphs must share a vertex set");
    PackingResult result;
    result.mode = PackMode::component_wise;
    BudgetGuard guard{budget, result.stats};

    if (count_bad_pairs(g1, g2) == 0) {
        result.witness = g1;
        return finish(std::move(result), guard, true);
    }

    std::vector<Graph> parts;
    for (const auto& verts : components(g1)) parts.push_back(induced_subgraph(g1, verts));
    ComponentSearch search(g2, g2.vertex_mask(), guard);
    search.comps = component_infos(parts);
    search.place(0, -1);
    result.witness = search.found;
    return finish(std::move(result), guard, search.found.has_value());
}

namespace {

std::vector<std::vector<int>> component_degree_profile(const Graph& g) {
    std::vector<std::vector<int>> profile;
    for (const auto& verts : components(g)) {
        Graph part = induced_subgraph(g, verts);
        std::vector<int> degrees;
        for (int v = 0; v < part.order(); ++v) degrees.push_back(part.degree(v));
        std::sort(degrees.begin(), degrees.end(), std::greater<int>());
        profile.push_back(std::move(degrees));
    }
    std::sort(profile.begin(), profile.end());
    return profile;
}

} // namespace

bool validate_packing(const PackingResult& result, const Graph& g1, const Graph& g2) {
    if (result.status != PackStatus::packed) return !result.witness.has_value();
    if (!result.witness) return false;
    const Graph& w = *result.witness;
    if (w.order() != g2.order() || g1.order() != g2.order()) return false;
    if (count_bad_pairs(w, g2) != 0) return false;
    switch (result.mode) {
    case PackMode::embed: {
        if (!isomorphic(w, g1)) return false;
        if (result.embedding) {
            const auto& emb = *result.embedding;
            if (static_cast<int>(emb.size()) != g1.order()) return false;
            std::uint64_t seen = 0;
            for (int host : emb) {
                if (host < 0 || host >= w.order() || (seen >> host & 1)) return false;
                seen |= std::uint64_t{1} << host;
            }
            Graph image(w.order());
            for (auto [a, b] : g1.edges()) image.add_edge(emb[a], emb[b]);
            if (!(image == w)) return false;
        }
        return true;
    }
    case PackMode::sequence:
        return degree_sequence(w) == degree_sequence(g1);
    case PackMode::component_wise:
        return component_degree_profile(w) == component_degree_profile(g1);
    }
    return false;
}

} // namespace packlab
