#include <doctest.h>

#include "packlab/canonical.hpp"
#include "packlab/degree_sequence.hpp"
#include "packlab/families.hpp"
#include "packlab/pipelines.hpp"
#include "packlab/transforms.hpp"

using namespace packlab;

TEST_CASE("lemma 9 pipeline") {
    // C4 core plus three trivial trees against a 2-regular host on 7.
    Graph g1 = disjoint_union(build_cycle_edges(4), build_independent(3));
    Graph g2 = build_cycle_edges(7);
    PipelineResult out = pipeline_lemma9(g1, g2);
    REQUIRE(out.result.status == PackStatus::packed);
    CHECK_FALSE(out.used_fallback);
    CHECK(validate_packing(out.result, g1, g2));

    // Too few forest components.
    Graph tight = disjoint_union(build_cycle_edges(4), build_independent(1));
    Graph host5 = build_cycle_edges(5);
    CHECK_THROWS_AS((void)pipeline_lemma9(tight, host5), Error);
}

TEST_CASE("theorem 10 pipeline") {
    // K3 core (a dominating clique) plus a 4-component forest, against C7.
    Graph g1 = disjoint_union(build_complete(3), build_independent(4));
    Graph g2 = build_cycle_edges(7);
    PipelineResult out = pipeline_theorem10(g1, g2);
    REQUIRE(out.result.status == PackStatus::packed);
    CHECK_FALSE(out.anomaly);
    CHECK(validate_packing(out.result, g1, g2));

    // The BEC bound failing is a hypothesis error.
    CHECK_THROWS_AS((void)pipeline_theorem10(build_complete(4), build_complete(4)), Error);
}

TEST_CASE("theorem 12 pipeline") {
    // U3(0) = C4 core plus four isolated vertices, host C8: 3*3 <= 9.
    Graph g1 = disjoint_union(build_u3(0), build_independent(4));
    Graph g2 = build_cycle_edges(8);
    PipelineResult out = pipeline_theorem12(g1, g2);
    REQUIRE(out.result.status == PackStatus::packed);
    CHECK_FALSE(out.used_fallback);
    CHECK(out.result.mode == PackMode::embed);
    REQUIRE(out.result.witness.has_value());
    CHECK(isomorphic(*out.result.witness, g1));
    CHECK(count_bad_pairs(*out.result.witness, g2) == 0);

    // C5 core without a dominating clique routes through the lemma.
    Graph g3 = disjoint_union(build_cycle_edges(5), build_independent(4));
    Graph g4 = disjoint_union(build_cycle_edges(4), build_independent(5));
    PipelineResult c5route = pipeline_theorem12(g3, g4);
    REQUIRE(c5route.result.status == PackStatus::packed);
    CHECK_FALSE(c5route.used_fallback);
    CHECK(isomorphic(*c5route.result.witness, g3));
}

TEST_CASE("theorem 5 pipeline") {
    Graph c4 = build_cycle_edges(4);
    Graph host = disjoint_union(build_disjoint_copies(2, build_complete(2)),
                                build_independent(0));
    PipelineResult out = pipeline_theorem5(c4, host, {0, 1, 2, 3});
    REQUIRE(out.result.status == PackStatus::packed);

    Graph three_k2 = build_disjoint_copies(3, build_complete(2));
    Graph k33 = build_complete_bipartite(3, 3);
    PipelineResult excluded = pipeline_theorem5(three_k2, k33, {0, 1, 2, 3, 4, 5});
    CHECK(excluded.result.status == PackStatus::unpackable);
    CHECK(excluded.note.find("F3") != std::string::npos);
}

TEST_CASE("theorem 7 pipeline") {
    // 2K2 positive part with a 1-factor, sparse host.
    Graph g1 = build_disjoint_copies(2, build_complete(2));
    Graph g2 = Graph::from_edges(4, {{0, 1}});
    PipelineResult out = pipeline_theorem7(g1, g2, 1);
    REQUIRE(out.result.status == PackStatus::packed);
    CHECK(validate_packing(out.result, g1, g2));
}

TEST_CASE("large matching pipeline") {
    // K3 plus a 5-vertex matching part against a sparse host on 8.
    Graph g1 = disjoint_union(build_complete(3),
                              disjoint_union(build_disjoint_copies(2, build_complete(2)),
                                             build_independent(1)));
    Graph g2 = disjoint_union(build_disjoint_copies(2, build_complete(2)), build_independent(4));
    REQUIRE(g1.order() == 8);
    PipelineResult out = pipeline_large_matching(g1, g2);
    REQUIRE(out.result.status == PackStatus::packed);
    CHECK(validate_packing(out.result, g1, g2));

    // |M| below 2*delta2+1 is a hypothesis error.
    Graph small = disjoint_union(build_complete(3), build_independent(2));
    CHECK_THROWS_AS((void)pipeline_large_matching(small, build_cycle_edges(5)), Error);
}

TEST_CASE("split pipeline") {
    // Star core (split) plus one spare edge against a sparse host.
    Graph g1 = disjoint_union(build_star(3), build_disjoint_copies(2, build_independent(2)));
    REQUIRE(g1.order() == 8);
    Graph g2 = disjoint_union(build_cycle_edges(3), build_independent(5));
    PipelineResult out = pipeline_split(g1, g2);
    REQUIRE(out.result.status == PackStatus::packed);
    CHECK(validate_packing(out.result, g1, g2));

    // A 2K2 edged part is not split.
    Graph not_split = disjoint_union(build_disjoint_copies(2, build_path_edges(2)),
                                     build_independent(2));
    CHECK_THROWS_AS((void)pipeline_split(not_split, build_cycle_edges(8)), Error);
}

TEST_CASE("equitable coloring via packing") {
    EquitableColoring c5 = equitable_coloring_via_packing(build_cycle_edges(5), 2);
    std::vector<std::size_t> sizes;
    for (const auto& cls : c5.classes) sizes.push_back(cls.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 2});

    EquitableColoring all = equitable_coloring_via_packing(build_independent(6), 0);
    REQUIRE(all.classes.size() == 1);
    CHECK(all.classes[0].size() == 6);

    EquitableColoring k4 = equitable_coloring_via_packing(build_complete(4), 3);
    CHECK(k4.classes.size() == 4);
    for (const auto& cls : k4.classes) CHECK(cls.size() == 1);

    CHECK_THROWS_AS((void)equitable_coloring_via_packing(build_complete(4), 2), Error);

    // Classes are independent and balanced for every small bounded-degree g.
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            if (max_degree(g) > 3) continue;
            for (int k : {max_degree(g), max_degree(g) + 1}) {
                EquitableColoring coloring = equitable_coloring_via_packing(g, k);
                std::size_t lo = n, hi = 0;
                std::size_t total = 0;
                for (const auto& cls : coloring.classes) {
                    lo = std::min(lo, cls.size());
                    hi = std::max(hi, cls.size());
                    total += cls.size();
                    for (std::size_t i = 0; i < cls.size(); ++i)
                        for (std::size_t j = i + 1; j < cls.size(); ++j)
                            CHECK_FALSE(g.has_edge(cls[i], cls[j]));
                }
                CHECK(total == static_cast<std::size_t>(n));
                CHECK(hi - lo <= 1);
            }
        }
    }
}
