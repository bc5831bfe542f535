#include "packlab/repair.hpp"

#include <algorithm>
#include <bit>

#include "packlab/transforms.hpp"

namespace packlab {

std::optional<NearPacking> near_packing(const Graph& g1, const Graph& g2,
                                        const SearchBudget& budget, bool try_direct_first) {
    if (g1.order() != g2.order()) fail(Errc::size_mismatch, "graphs must share a vertex set");
    if (g1.edge_count() == 0) fail(Errc::no_edges, "g1 must have at least one edge");
    int dplus = delta_plus(g1);

    if (try_direct_first) {
        PackingResult direct = pack_sequence(g1, g2, budget);
        if (direct.status == PackStatus::packed) {
            const Graph& w = *direct.witness;
            for (int v = 0; v < w.order(); ++v)
                if (w.degree(v) == dplus) return NearPacking{w, v};
        }
    }

    // Anchored Havel-Hakimi shape: slot y goes to zero and the top dplus
    // slots each drop by one; pack that reduced multiset exactly.
    DegreeSequence seq = degree_sequence(g1);
    std::vector<int> reduced = seq.terms();
    for (int i = seq.length() - 1; i >= 0; --i) {
        if (reduced[i] > 0) {
            reduced[i] = 0;
            break;
        }
    }
    for (int i = 0; i < dplus; ++i) --reduced[i];

    PackingResult packed = pack_terms(reduced, g2, g2.vertex_mask(), budget);
    if (packed.status == PackStatus::budget_exhausted)
        fail(Errc::budget_exhausted, "near-packing search budget spent");
    if (packed.status != PackStatus::packed) return std::nullopt;
    const Graph& base = *packed.witness;

    // The anchor needs dplus re-attachment targets: one vertex of degree
    // terms[i]-1 for each stripped slot. Prefer choices that avoid edges of
    // g2 at the anchor, so the bad pairs it cannot avoid stay minimal.
    std::vector<int> wanted;
    for (int i = 0; i < dplus; ++i) wanted.push_back(seq.term(i) - 1);

    std::optional<NearPacking> best;
    int best_bad = -1;
    for (int y = 0; y < base.order(); ++y) {
        if (base.degree(y) != 0) continue;
        std::vector<char> taken(static_cast<std::size_t>(base.order()), 0);
        taken[y] = 1;
        std::vector<int> targets;
        bool ok = true;
        for (int value : wanted) {
            int pick = -1;
            for (int v = 0; v < base.order() && pick < 0; ++v)
                if (!taken[v] && base.degree(v) == value && !g2.has_edge(y, v)) pick = v;
            for (int v = 0; v < base.order() && pick < 0; ++v)
                if (!taken[v] && base.degree(v) == value) pick = v;
            if (pick < 0) {
                ok = false;
                break;
            }
            taken[pick] = 1;
            targets.push_back(pick);
        }
        if (!ok) continue;
        int bad = 0;
        for (int t : targets) bad += g2.has_edge(y, t) ? 1 : 0;
        if (best_bad < 0 || bad < best_bad) {
            Graph h = base;
            for (int t : targets) h.add_edge(y, t);
            best = NearPacking{std::move(h), y};
            best_bad = bad;
        }
        if (best_bad == 0) break;
    }
    // A zero slot for the anchor always exists in the reduced multiset, and
    // the decremented degrees are all present, so `best` is set here; the
    // greedy target matching consumes exactly the decremented slots.
    if (!best) fail(Errc::packing_failed, "re-attachment bookkeeping failed");
    return best;
}

namespace {

struct RepairState {
    const Graph& g2;
    Graph h;
    SearchStats& stats;
    std::uint64_t node_cap;
    bool out_of_budget = false;

    bool tick() {
        if (++stats.nodes > node_cap) out_of_budget = true;
        return !out_of_budget;
    }

    int bad() const { return count_bad_pairs(h, g2); }

    // First strictly improving move wins; enumeration order is fixed.
    bool improve() {
        int current = bad();

        for (int u = 0; u < h.order(); ++u) {
            for (int v = u + 1; v < h.order(); ++v) {
                if (!tick()) return false;
                Graph trial = vertex_interchange(h, u, v);
                if (count_bad_pairs(trial, g2) < current) {
                    h = std::move(trial);
                    return true;
                }
            }
        }

        auto edges = h.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                auto [a, b] = edges[i];
                auto [c, d] = edges[j];
                if (a == c || a == d || b == c || b == d) continue;
                int swaps[2][2] = {{c, d}, {d, c}};
                for (auto [p, q] : swaps) {
                    if (!tick()) return false;
                    if (h.has_edge(a, p) || h.has_edge(b, q)) continue;
                    Graph trial = h;
                    trial.remove_edge(a, b);
                    trial.remove_edge(c, d);
                    trial.add_edge(a, p);
                    trial.add_edge(b, q);
                    if (count_bad_pairs(trial, g2) < current) {
                        h = std::move(trial);
                        return true;
                    }
                }
            }
        }

        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                for (std::size_t k = j + 1; k < edges.size(); ++k) {
                    int verts[6] = {edges[i].first,  edges[i].second, edges[j].first,
                                    edges[j].second, edges[k].first,  edges[k].second};
                    bool distinct = true;
                    for (int a = 0; a < 6 && distinct; ++a)
                        for (int b = a + 1; b < 6 && distinct; ++b)
                            if (verts[a] == verts[b]) distinct = false;
                    if (!distinct) continue;
                    // Cyclic shift over the three edges in every orientation.
                    for (int o = 0; o < 8; ++o) {
                        for (int dir = 0; dir < 2; ++dir) {
                            if (!tick()) return false;
                            int p[3] = {verts[0], verts[2], verts[4]};
                            int q[3] = {verts[1], verts[3], verts[5]};
                            for (int e = 0; e < 3; ++e)
                                if (o >> e & 1) std::swap(p[e], q[e]);
                            int add[3][2];
                            for (int e = 0; e < 3; ++e) {
                                int next = dir == 0 ? (e + 1) % 3 : (e + 2) % 3;
                                add[e][0] = q[e];
                                add[e][1] = p[next];
                            }
                            bool clear = true;
                            for (auto& pr : add)
                                if (h.has_edge(pr[0], pr[1])) clear = false;
                            if (!clear) continue;
                            Graph trial = h;
                            for (int e = 0; e < 3; ++e) trial.remove_edge(p[e], q[e]);
                            for (auto& pr : add) trial.add_edge(pr[0], pr[1]);
                            if (count_bad_pairs(trial, g2) < current) {
                                h = std::move(trial);
                                return true;
                            }
                        }
                    }
                }
            }
        }
        return false;
    }
};

} // namespace

PackingResult exchange_repair(const NearPacking& np, const Graph& g2, const SearchBudget& budget) {
    if (np.realization.order() != g2.order())
        fail(Errc::size_mismatch, "near-packing and g2 must share a vertex set");
    for (auto [a, b] : bad_pairs(np.realization, g2))
        if (a != np.anchor && b != np.anchor)
            fail(Errc::bad_parameter, "near-packing has a bad pair away from its anchor");

    PackingResult result;
    result.mode = PackMode::sequence;
    RepairState state{g2, np.realization, result.stats, budget.max_nodes};
    while (state.bad() > 0 && !state.out_of_budget) {
        if (!state.improve()) break;
    }
    if (state.bad() == 0) {
        result.status = PackStatus::packed;
        result.witness = std::move(state.h);
    } else {
        result.status = PackStatus::budget_exhausted;
    }
    return result;
}

std::optional<Graph> realization_with_independent_set(const DegreeSequence& seq, int k,
                                                      const SearchBudget& budget) {
    if (!is_graphical(seq)) fail(Errc::not_graphical, "sequence is not graphical");
    int delta1 = seq.length() > 0 ? seq.term(0) : 0;
    Graph h = havel_hakimi_realize(seq);

    for (;;) {
        if (independence_number(h) >= k) return h;

        // A component that is a cycle or a largest clique pins the
        // independence number down; merge it into another component.
        auto comps = components(h);
        std::vector<int> inside, outside_edge;
        for (const auto& comp : comps) {
            Graph part = induced_subgraph(h, comp);
            bool cycle = part.order() >= 3 && is_regular(part) && part.order() > 0 &&
                         part.degree(0) == 2 && is_connected(part);
            bool clique = part.order() == delta1 + 1 &&
                          part.edge_count() == part.order() * (part.order() - 1) / 2;
            if (!cycle && !clique) continue;
            std::uint64_t mask = 0;
            for (int v : comp) mask |= std::uint64_t{1} << v;
            // Lexicographically first edge fully outside this component.
            for (auto [u, u2] : h.edges()) {
                if ((mask >> u & 1) || (mask >> u2 & 1)) continue;
                inside = comp;
                outside_edge = {u, u2};
                break;
            }
            if (!inside.empty()) break;
        }
        if (inside.empty()) break;

        int v = inside[0];
        int v2 = -1;
        for (int w : inside)
            if (w != v && h.has_edge(v, w)) {
                v2 = w;
                break;
            }
        h.remove_edge(v, v2);
        h.remove_edge(outside_edge[0], outside_edge[1]);
        h.add_edge(outside_edge[0], v);
        h.add_edge(outside_edge[1], v2);
    }

    // Exact fallback over every labeled realization.
    std::optional<Graph> found;
    std::uint64_t seen = 0;
    for_each_labeled_realization(seq.terms(), [&](const Graph& cand) {
        if (++seen > budget.max_nodes) fail(Errc::budget_exhausted, "realization search budget spent");
        if (independence_number(cand) >= k) {
            found = cand;
            return false;
        }
        return true;
    });
    return found;
}

} // namespace packlab
