#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "packlab/canonical.hpp"
#include "packlab/degree_sequence.hpp"
#include "packlab/families.hpp"
#include "packlab/recognizers.hpp"

using namespace packlab;

namespace {

Graph f1_left() { return disjoint_union(build_cycle_edges(5), build_independent(1)); }
Graph two_k3() { return build_disjoint_copies(2, build_complete(3)); }

std::set<ExceptionKind::Family> families(const Graph& a, const Graph& b) {
    std::set<ExceptionKind::Family> out;
    for (const auto& kind : match_exceptions(a, b)) out.insert(kind.family);
    return out;
}

} // namespace

TEST_CASE("exception families") {
    CHECK(families(f1_left(), two_k3()) == std::set{ExceptionKind::F1});
    CHECK(families(build_disjoint_copies(3, build_complete(2)), build_complete_bipartite(3, 3)) ==
          std::set{ExceptionKind::F3});

    Graph k3i3 = disjoint_union(build_complete(3), build_independent(3));
    auto kinds = match_exceptions(k3i3, two_k3());
    REQUIRE(kinds.size() == 1);
    CHECK(kinds.begin()->family == ExceptionKind::F2);
    CHECK(kinds.begin()->delta1 == 2);
    CHECK(kinds.begin()->delta2 == 2);

    CHECK(families(build_complete(2), build_complete(2)) ==
          std::set{ExceptionKind::F3, ExceptionKind::F4});
    CHECK(families(build_disjoint_copies(2, build_complete(2)), build_cycle_edges(4)).empty());

    Graph k4k2 = disjoint_union(build_complete(4), build_complete(2));
    CHECK(families(build_disjoint_copies(3, build_complete(2)), k4k2) ==
          std::set{ExceptionKind::F4});

    CHECK_THROWS_AS((void)match_exceptions(Graph(3), Graph(4)), Error);
}

TEST_CASE("exception matching is isomorphism invariant") {
    std::mt19937_64 rng(31);
    auto shuffle_of = [&](const Graph& g) {
        std::vector<int> p(static_cast<std::size_t>(g.order()));
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return permute(g, p);
    };
    std::vector<std::pair<Graph, Graph>> pairs{
        {f1_left(), two_k3()},
        {build_disjoint_copies(3, build_complete(2)), build_complete_bipartite(3, 3)},
        {disjoint_union(build_complete(3), build_independent(3)), two_k3()},
        {build_disjoint_copies(2, build_complete(2)), build_cycle_edges(4)},
    };
    for (const auto& [a, b] : pairs) {
        auto base = match_exceptions(a, b);
        for (int round = 0; round < 50; ++round)
            CHECK(match_exceptions(shuffle_of(a), shuffle_of(b)) == base);
    }
}

TEST_CASE("split recognition") {
    auto whole = is_split(build_complete(5));
    REQUIRE(whole);
    CHECK(whole->clique.size() == 5);
    CHECK(whole->independent.empty());

    CHECK_FALSE(is_split(build_cycle_edges(4)));
    CHECK_FALSE(is_split(build_cycle_edges(5)));
    CHECK_FALSE(is_split(build_disjoint_copies(2, build_complete(2))));

    REQUIRE(is_split(build_star(3)));

    // Witness sides really are a clique and an independent set.
    for (const Graph& g : enumerate_graphs(6)) {
        auto w = is_split(g);
        if (!w) continue;
        for (std::size_t i = 0; i < w->clique.size(); ++i)
            for (std::size_t j = i + 1; j < w->clique.size(); ++j)
                CHECK(g.has_edge(w->clique[i], w->clique[j]));
        for (std::size_t i = 0; i < w->independent.size(); ++i)
            for (std::size_t j = i + 1; j < w->independent.size(); ++j)
                CHECK_FALSE(g.has_edge(w->independent[i], w->independent[j]));
    }
}

TEST_CASE("split graphs are closed under complement and realization") {
    for (int n = 0; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            bool split = is_split(g).has_value();
            CHECK(is_split(complement(g)).has_value() == split);
            if (split && n >= 1) {
                for_each_labeled_realization(degree_sequence(g).terms(), [&](const Graph& h) {
                    CHECK(is_split(h).has_value());
                    return true;
                });
            }
        }
    }
}

TEST_CASE("dominating cliques") {
    for (int k = 1; k <= 6; ++k) {
        auto w = has_dominating_clique(build_complete(k));
        REQUIRE(w);
        CHECK(w->clique.size() == 1);
    }
    CHECK_FALSE(has_dominating_clique(build_cycle_edges(5)));
    auto square = has_dominating_clique(build_cycle_edges(4));
    REQUIRE(square);
    CHECK(square->clique.size() == 2);
    CHECK_FALSE(has_dominating_clique(build_u3(1)));
    CHECK_FALSE(has_dominating_clique(build_u3(2)));
}

TEST_CASE("unigraph oracle") {
    CHECK(is_unigraph(build_cycle_edges(5)));
    CHECK(is_unigraph(build_cycle_edges(4)));
    CHECK(is_unigraph(build_path_edges(3))); // the 4-vertex path
    CHECK(is_unigraph(build_complete(6)));
    CHECK(is_unigraph(build_u2(1, 2)));
    CHECK(is_unigraph(build_u2(2, 3)));
    CHECK(is_unigraph(build_u3(1)));
    CHECK_FALSE(is_unigraph(build_cycle_edges(6)));
    CHECK_FALSE(is_unigraph(build_disjoint_copies(2, build_cycle_edges(3))));
    CHECK_THROWS_AS((void)is_unigraph(Graph(9)), Error);
}

TEST_CASE("tyshkevich consequence at small orders") {
    // Connected unigraphs either have a dominating clique or are C5 / U3(l).
    std::string c5 = canonical_form(build_cycle_edges(5)).bytes;
    std::string u31 = canonical_form(build_u3(1)).bytes;
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            if (!is_connected(g) || !is_unigraph(g)) continue;
            if (has_dominating_clique(g)) continue;
            std::string canon = canonical_form(g).bytes;
            CHECK((canon == c5 || canon == u31));
        }
    }
}

TEST_CASE("builders") {
    CHECK(isomorphic(build_u3(0), build_cycle_edges(4)));
    CHECK(build_u3(1).order() == 6);
    CHECK(build_u3(2).order() == 8);
    CHECK(max_degree(build_u3(2)) == 6); // shared vertex has degree 2+2l

    CHECK(degree_sequence(build_u2(2, 3)).terms() ==
          std::vector<int>{3, 1, 1, 1, 1, 1, 1, 1});

    Graph k33 = build_complete_bipartite(3, 3);
    CHECK(k33.order() == 6);
    CHECK(k33.edge_count() == 9);
    CHECK(is_regular(k33));

    CHECK(build_path_edges(0).order() == 1);
    CHECK(build_cycle_edges(5).edge_count() == 5);
    CHECK_THROWS_AS((void)build_cycle_edges(2), Error);
    CHECK_THROWS_AS((void)build_u2(0, 1), Error);
    CHECK_THROWS_AS((void)build_u3(-1), Error);
    CHECK(disjoint_union(build_complete(2), build_complete(3)).order() == 5);
    CHECK(build_disjoint_copies(3, build_complete(2)).edge_count() == 3);
}
