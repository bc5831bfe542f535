#include "packlab/pipelines.hpp"

#include <algorithm>
#include <bit>

#include "packlab/canonical.hpp"
#include "packlab/degree_sequence.hpp"
#include "packlab/factors.hpp"
#include "packlab/families.hpp"
#include "packlab/forest.hpp"
#include "packlab/recognizers.hpp"
#include "packlab/theorems.hpp"
#include "packlab/transforms.hpp"

namespace packlab {

namespace {

struct Parts {
    std::vector<std::vector<int>> verts;
    std::vector<Graph> graphs;
};

Parts split_components(const Graph& g) {
    Parts parts;
    parts.verts = components(g);
    for (const auto& comp : parts.verts) parts.graphs.push_back(induced_subgraph(g, comp));
    return parts;
}

bool component_is_tree(const Graph& comp) { return comp.edge_count() == comp.order() - 1; }

Graph compact_union(const Parts& parts, const std::vector<std::size_t>& picks) {
    Graph out(0);
    for (std::size_t i : picks) out = disjoint_union(out, parts.graphs[i]);
    return out;
}

std::vector<int> positive_terms_of(const Graph& g) {
    std::vector<int> terms;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) terms.push_back(g.degree(v));
    return terms;
}

std::vector<int> isolated_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out.push_back(v);
    return out;
}

PipelineResult from_result(PackingResult result, std::string note) {
    PipelineResult out;
    out.result = std::move(result);
    out.note = std::move(note);
    return out;
}

// Whole-instance exact solve after the construction failed; success there
// is flagged, not silently accepted.
PipelineResult fallback(PackMode mode, const Graph& g1, const Graph& g2,
                        const SearchBudget& budget, const std::string& note) {
    PackingResult exact;
    switch (mode) {
    case PackMode::embed: exact = pack_embed(g1, g2, budget); break;
    case PackMode::sequence: exact = pack_sequence(g1, g2, budget); break;
    case PackMode::component_wise: exact = pack_component_wise(g1, g2, budget); break;
    }
    PipelineResult out;
    out.used_fallback = true;
    out.anomaly = exact.status == PackStatus::packed;
    out.note = note;
    out.result = std::move(exact);
    return out;
}

// Core components placed component-wise, then the forest embedded into the
// complement induced on the untouched vertices.
struct CoreForestOutcome {
    bool ok = false;
    bool budget_hit = false;
    bool core_unpackable = false;
    Graph witness;
};

CoreForestOutcome pack_core_then_embed_forest(const std::vector<Graph>& core_comps,
                                              const Graph& forest, const Graph& g2,
                                              std::uint64_t allowed, const SearchBudget& budget) {
    CoreForestOutcome out;
    PackingResult core = pack_components_masked(core_comps, g2, allowed, budget);
    if (core.status == PackStatus::budget_exhausted) {
        out.budget_hit = true;
        return out;
    }
    if (core.status != PackStatus::packed) {
        out.core_unpackable = true;
        return out;
    }

    std::vector<int> open = isolated_vertices(*core.witness);
    if (static_cast<int>(open.size()) < forest.order()) return out;
    auto image = forest_embed(forest, complement(induced_subgraph(g2, open)));
    if (!image) return out;

    Graph witness = *core.witness;
    for (auto [a, b] : forest.edges()) witness.add_edge(open[(*image)[a]], open[(*image)[b]]);
    out.ok = true;
    out.witness = std::move(witness);
    return out;
}

PackingResult packed_result(Graph witness, PackMode mode) {
    PackingResult res;
    res.status = PackStatus::packed;
    res.mode = mode;
    res.witness = std::move(witness);
    return res;
}

} // namespace

PipelineResult pipeline_lemma9(const Graph& g1, const Graph& g2, const SearchBudget& budget) {
    if (g1.order() != g2.order()) fail(Errc::size_mismatch, "graphs must share a vertex set");
    Parts parts = split_components(g1);
    std::vector<Graph> core;
    std::vector<std::size_t> forest_ids;
    for (std::size_t i = 0; i < parts.graphs.size(); ++i) {
        if (component_is_tree(parts.graphs[i]))
            forest_ids.push_back(i);
        else
            core.push_back(parts.graphs[i]);
    }
    Graph forest = compact_union(parts, forest_ids);
    int delta2 = max_degree(g2);
    if (static_cast<int>(forest_ids.size()) < delta2 + 1)
        fail(Errc::hypothesis_unmet, "forest part needs at least delta2+1 components");

    auto built = pack_core_then_embed_forest(core, forest, g2, g2.vertex_mask(), budget);
    if (built.ok)
        return from_result(packed_result(std::move(built.witness), PackMode::component_wise),
                           "core packed component-wise, forest embedded");
    if (built.budget_hit) {
        PipelineResult out;
        out.result.mode = PackMode::component_wise;
        out.result.status = PackStatus::budget_exhausted;
        return out;
    }
    // The core failing to pack means the lemma premise itself is unmet.
    if (built.core_unpackable)
        fail(Errc::hypothesis_unmet, "core does not component-wise pack with g2");
    return fallback(PackMode::component_wise, g1, g2, budget, "forest embedding fell through");
}

namespace {

// Theorem-10 style construction for a chosen core (with a dominating
// clique, possibly empty) and forest remainder.
PipelineResult dominating_core_construction(const Graph& g1, const Graph& g2,
                                            const std::vector<Graph>& core_comps,
                                            const Graph& forest, int forest_components,
                                            const SearchBudget& budget, PackMode claim_mode) {
    int delta1 = max_degree(g1);
    int delta2 = max_degree(g2);

    if (forest_components >= delta2 + 1) {
        auto built = pack_core_then_embed_forest(core_comps, forest, g2, g2.vertex_mask(), budget);
        if (built.ok)
            return from_result(packed_result(std::move(built.witness), claim_mode),
                               "many-component forest route");
        if (built.budget_hit) {
            PipelineResult out;
            out.result.mode = claim_mode;
            out.result.status = PackStatus::budget_exhausted;
            return out;
        }
        return fallback(claim_mode, g1, g2, budget, "many-component forest route fell through");
    }

    // Few components, few edges: park the forest inside an independent set
    // of g2, then pack the core around it.
    std::uint64_t indep = max_independent_set(g2);
    if (std::popcount(indep) < delta1 + 1 || forest.order() > delta1 + 1)
        return fallback(claim_mode, g1, g2, budget, "independent-set route unavailable");
    std::vector<int> slots;
    while (indep && static_cast<int>(slots.size()) < forest.order()) {
        slots.push_back(std::countr_zero(indep));
        indep &= indep - 1;
    }
    std::uint64_t placed = 0;
    for (int v : slots) placed |= std::uint64_t{1} << v;

    PackingResult core = pack_components_masked(core_comps, g2, g2.vertex_mask() & ~placed, budget);
    if (core.status == PackStatus::budget_exhausted) {
        PipelineResult out;
        out.result.mode = claim_mode;
        out.result.status = PackStatus::budget_exhausted;
        return out;
    }
    if (core.status != PackStatus::packed)
        return fallback(claim_mode, g1, g2, budget, "core around independent set fell through");

    Graph witness = *core.witness;
    for (auto [a, b] : forest.edges()) witness.add_edge(slots[a], slots[b]);
    return from_result(packed_result(std::move(witness), claim_mode),
                       "forest parked in an independent set");
}

} // namespace

PipelineResult pipeline_theorem10(const Graph& g1, const Graph& g2, const SearchBudget& budget) {
    if (g1.order() != g2.order()) fail(Errc::size_mismatch, "graphs must share a vertex set");
    if (!check_bec(g1, g2).satisfied)
        fail(Errc::hypothesis_unmet, "the BEC bound does not hold for the pair");
    int delta2 = max_degree(g2);

    Parts parts = split_components(g1);
    std::vector<std::size_t> order(parts.graphs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return parts.graphs[a].order() != parts.graphs[b].order()
                   ? parts.graphs[a].order() > parts.graphs[b].order()
                   : a < b;
    });

    bool decomposition_seen = false;
    // Candidate cores: each component with a dominating clique, then the
    // empty core when every component is a tree.
    std::vector<std::optional<std::size_t>> candidates;
    for (std::size_t idx : order) candidates.emplace_back(idx);
    candidates.emplace_back(std::nullopt);

    for (const auto& pick : candidates) {
        std::vector<Graph> core_comps;
        std::vector<std::size_t> forest_ids;
        bool feasible = true;
        for (std::size_t i = 0; i < parts.graphs.size(); ++i) {
            if (pick && i == *pick) {
                core_comps.push_back(parts.graphs[i]);
                continue;
            }
            if (!component_is_tree(parts.graphs[i])) {
                feasible = false;
                break;
            }
            forest_ids.push_back(i);
        }
        if (!feasible) continue;
        if (pick && !has_dominating_clique(parts.graphs[*pick])) continue;
        decomposition_seen = true;

        Graph forest = compact_union(parts, forest_ids);
        int omega = static_cast<int>(forest_ids.size());
        if (omega < delta2 + 1 && forest.edge_count() > 2 * delta2 - 1) continue;
        return dominating_core_construction(g1, g2, core_comps, forest, omega, budget,
                                            PackMode::component_wise);
    }
    fail(decomposition_seen ? Errc::hypothesis_unmet : Errc::decomposition_not_found,
         decomposition_seen ? "no decomposition satisfies the forest clause"
                            : "no dominating-clique core plus forest partition exists");
}

PipelineResult pipeline_theorem12(const Graph& g1, const Graph& g2, const SearchBudget& budget) {
    if (g1.order() != g2.order()) fail(Errc::size_mismatch, "graphs must share a vertex set");
    if (!check_bec(g1, g2).satisfied)
        fail(Errc::hypothesis_unmet, "the BEC bound does not hold for the pair");
    int delta2 = max_degree(g2);

    Parts parts = split_components(g1);
    std::size_t m = parts.graphs.size();
    if (m > 16) fail(Errc::order_too_large, "too many components for decomposition discovery");

    bool decomposition_seen = false;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    for (std::uint32_t mask : masks) {
        std::vector<std::size_t> core_ids, forest_ids;
        for (std::size_t i = 0; i < m; ++i)
            (mask >> i & 1 ? core_ids : forest_ids).push_back(i);
        bool forest_ok = true;
        for (std::size_t i : forest_ids)
            if (!component_is_tree(parts.graphs[i])) forest_ok = false;
        if (!forest_ok) continue;
        Graph core = compact_union(parts, core_ids);
        if (core.order() > 8) continue; // unigraph oracle cap
        if (core.order() > 0 && !is_unigraph(core)) continue;
        Graph forest = compact_union(parts, forest_ids);
        int omega = static_cast<int>(forest_ids.size());
        decomposition_seen = true;
        if (omega < delta2 + 1 && forest.edge_count() > 2 * delta2 - 1) continue;

        PipelineResult built;
        if (core.order() == 0) {
            // Whole graph is a forest; embed it directly.
            auto image = forest_embed(g1, complement(g2));
            if (image) {
                Graph witness(g2.order());
                for (auto [a, b] : g1.edges()) witness.add_edge((*image)[a], (*image)[b]);
                built = from_result(packed_result(std::move(witness), PackMode::embed),
                                    "forest embedded directly");
            } else {
                built = fallback(PackMode::embed, g1, g2, budget, "forest embedding fell through");
            }
        } else {
            std::vector<Graph> core_comps;
            for (std::size_t i : core_ids) core_comps.push_back(parts.graphs[i]);
            built = dominating_core_construction(g1, g2, core_comps, forest, omega, budget,
                                                 PackMode::embed);
        }
        if (built.result.status == PackStatus::packed && !built.used_fallback) {
            // The unigraph core makes the witness a literal copy of g1.
            if (!isomorphic(*built.result.witness, g1))
                return fallback(PackMode::embed, g1, g2, budget,
                                "witness not isomorphic to g1 despite unigraph core");
        }
        return built;
    }
    fail(decomposition_seen ? Errc::hypothesis_unmet : Errc::decomposition_not_found,
         decomposition_seen ? "no decomposition satisfies the forest clause"
                            : "no unigraph plus forest partition exists");
}

PipelineResult pipeline_theorem5(const Graph& g1, const Graph& g2, const std::vector<int>& x_set,
                                 const SearchBudget& budget) {
    HypothesisReport rep = check_theorem5_hypothesis(g1, g2);
    if (!rep.satisfied) fail(Errc::hypothesis_unmet, "positive part is too small");
    Graph plus = positive_part(g1).graph;
    PipelineResult out = from_result(pack_regular_by_factor_growth(plus, g2, x_set, budget),
                                     "factor growth on g2[X]");
    if (rep.clauses.at("exception_window")) {
        auto kinds = match_exceptions(plus, induced_subgraph(g2, x_set));
        for (const auto& kind : kinds)
            if (kind.family == ExceptionKind::F3 || kind.family == ExceptionKind::F4)
                out.note += "; exception window matched " + std::string(exception_name(kind.family));
    }
    return out;
}

PipelineResult pipeline_theorem7(const Graph& g1, const Graph& g2, int k,
                                 const SearchBudget& budget) {
    HypothesisReport rep = check_theorem7_hypothesis(g1, g2, k);
    if (!rep.satisfied) fail(Errc::hypothesis_unmet, "theorem 7 hypothesis does not hold");

    // A realization of the positive part together with a k-factor of it.
    std::vector<int> plus_terms = positive_terms_of(g1);
    std::sort(plus_terms.begin(), plus_terms.end(), std::greater<int>());
    int m = static_cast<int>(plus_terms.size());
    std::optional<Graph> carrier, factor;
    for_each_labeled_realization(plus_terms, [&](const Graph& w) {
        try {
            auto f = find_f_factor(w, std::vector<int>(static_cast<std::size_t>(m), k), budget);
            if (f) {
                carrier = w;
                factor = f;
                return false;
            }
        } catch (const Error&) {
        }
        return true;
    });
    if (!carrier) fail(Errc::hypothesis_unmet, "no realization of the positive part has a k-factor");

    Graph diminished = *carrier;
    for (auto [a, b] : factor->edges()) diminished.remove_edge(a, b);

    PackingResult first = pack_terms(positive_terms_of(diminished), g2, g2.vertex_mask(), budget);
    if (first.status != PackStatus::packed)
        return fallback(PackMode::sequence, g1, g2, budget, "diminished sequence did not pack");

    // The factor occupies the packed positive vertices plus enough spares.
    std::vector<int> x_set;
    for (int v = 0; v < first.witness->order(); ++v)
        if (first.witness->degree(v) > 0) x_set.push_back(v);
    for (int v = 0; v < first.witness->order() && static_cast<int>(x_set.size()) < m; ++v)
        if (first.witness->degree(v) == 0) x_set.push_back(v);
    std::sort(x_set.begin(), x_set.end());

    Graph combined = g2;
    for (auto [a, b] : first.witness->edges()) combined.add_edge(a, b);
    PackingResult growth = pack_regular_by_factor_growth(*factor, combined, x_set, budget);
    if (growth.status != PackStatus::packed)
        return fallback(PackMode::sequence, g1, g2, budget, "factor growth did not pack");

    Graph witness = *first.witness;
    for (auto [a, b] : growth.witness->edges()) witness.add_edge(x_set[a], x_set[b]);
    if (!(degree_sequence(witness) == degree_sequence(g1)) || count_bad_pairs(witness, g2) != 0)
        return fallback(PackMode::sequence, g1, g2, budget, "recombined witness failed validation");
    return from_result(packed_result(std::move(witness), PackMode::sequence),
                       "witness positive part carries a k-factor");
}

namespace {

struct MatchingSplit {
    std::vector<std::size_t> small_ids; // components with at most one edge's worth of degree
    std::vector<std::size_t> rest_ids;
    int small_order = 0;
};

MatchingSplit matching_split(const Parts& parts) {
    MatchingSplit split;
    for (std::size_t i = 0; i < parts.graphs.size(); ++i) {
        if (max_degree(parts.graphs[i]) <= 1) {
            split.small_ids.push_back(i);
            split.small_order += parts.graphs[i].order();
        } else {
            split.rest_ids.push_back(i);
        }
    }
    return split;
}

// Packs pi(first) anywhere, then pi(second) into the untouched slots.
PipelineResult two_stage_sequence(const Graph& g1, const Graph& g2, const Graph& first,
                                  const Graph& second, const SearchBudget& budget,
                                  const std::string& note) {
    PackingResult a = pack_terms(positive_terms_of(first), g2, g2.vertex_mask(), budget);
    if (a.status != PackStatus::packed)
        return fallback(PackMode::sequence, g1, g2, budget, note + "; first stage fell through");
    std::vector<int> open = isolated_vertices(*a.witness);
    PackingResult b = pack_terms(positive_terms_of(second), induced_subgraph(g2, open),
                                 ~std::uint64_t{0}, budget);
    if (b.status != PackStatus::packed)
        return fallback(PackMode::sequence, g1, g2, budget, note + "; second stage fell through");
    Graph witness = *a.witness;
    for (auto [u, v] : b.witness->edges()) witness.add_edge(open[u], open[v]);
    return from_result(packed_result(std::move(witness), PackMode::sequence), note);
}

} // namespace

PipelineResult pipeline_large_matching(const Graph& g1, const Graph& g2,
                                       const SearchBudget& budget) {
    if (g1.order() != g2.order()) fail(Errc::size_mismatch, "graphs must share a vertex set");
    if (!check_bec(g1, g2).satisfied)
        fail(Errc::hypothesis_unmet, "the BEC bound does not hold for the pair");
    Parts parts = split_components(g1);
    MatchingSplit split = matching_split(parts);
    int delta2 = max_degree(g2);
    if (split.small_order < 2 * delta2 + 1)
        fail(Errc::hypothesis_unmet, "matching part needs at least 2*delta2+1 vertices");
    Graph rest = compact_union(parts, split.rest_ids);
    Graph small = compact_union(parts, split.small_ids);
    return two_stage_sequence(g1, g2, rest, small, budget,
                              "rest packed first, large matching second");
}

PipelineResult pipeline_split(const Graph& g1, const Graph& g2, const SearchBudget& budget) {
    if (g1.order() != g2.order()) fail(Errc::size_mismatch, "graphs must share a vertex set");
    if (!check_bec(g1, g2).satisfied)
        fail(Errc::hypothesis_unmet, "the BEC bound does not hold for the pair");
    Parts parts = split_components(g1);
    MatchingSplit split = matching_split(parts);
    Graph core = compact_union(parts, split.rest_ids);
    if (!is_split(core)) fail(Errc::hypothesis_unmet, "edged part is not a split graph");

    int delta1 = max_degree(g1), delta2 = max_degree(g2);
    Graph small = compact_union(parts, split.small_ids);
    if (split.small_order >= 2 * delta2 + 1)
        return two_stage_sequence(g1, g2, core, small, budget,
                                  "split core first, large matching second");
    if (split.small_order <= std::min(delta1, delta2) + delta2 - 1)
        return two_stage_sequence(g1, g2, small, core, budget,
                                  "small matching first, split core second");
    // The middle window contradicts the BEC bound per the lemma's proof.
    return fallback(PackMode::sequence, g1, g2, budget, "matching size in the impossible window");
}

EquitableColoring equitable_coloring_via_packing(const Graph& g, int k,
                                                 const SearchBudget& budget) {
    if (k < 0) fail(Errc::bad_parameter, "color count must be non-negative");
    if (max_degree(g) > k) fail(Errc::degree_too_high, "needs max_degree(g) <= k");
    int n = g.order();
    int blocks = k + 1;
    int base = n / blocks, extra = n % blocks;

    Graph tmpl(n);
    std::vector<int> block_of(static_cast<std::size_t>(n), -1);
    int at = 0;
    for (int b = 0; b < blocks && at < n; ++b) {
        int size = base + (b < extra ? 1 : 0);
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) tmpl.add_edge(at + i, at + j);
        for (int i = 0; i < size; ++i) block_of[at + i] = b;
        at += size;
    }

    PackingResult res = pack_embed(g, tmpl, budget);
    if (res.status != PackStatus::packed || !res.embedding)
        fail(Errc::packing_failed, "clique-template packing failed unexpectedly");

    EquitableColoring coloring;
    coloring.classes.assign(static_cast<std::size_t>(blocks), {});
    for (int v = 0; v < n; ++v) coloring.classes[block_of[(*res.embedding)[v]]].push_back(v);
    return coloring;
}

} // namespace packlab
