// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit status 0 only when all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "packlab/canonical.hpp"
#include "packlab/certificate.hpp"
#include "packlab/degree_sequence.hpp"
#include "packlab/factors.hpp"
#include "packlab/families.hpp"
#include "packlab/graph6.hpp"
#include "packlab/pipelines.hpp"
#include "packlab/recognizers.hpp"
#include "packlab/repair.hpp"
#include "packlab/theorems.hpp"
#include "packlab/transforms.hpp"
#include "packlab/verify.hpp"

using namespace packlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& label, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << label;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

void run(int id, const std::string& label, const std::function<std::pair<bool, std::string>()>& fn) {
    try {
        auto [ok, detail] = fn();
        report(id, label, ok, detail);
    } catch (const std::exception& e) {
        report(id, label, false, std::string("exception: ") + e.what());
    }
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << "s";
    return out.str();
}

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 2 : static_cast<int>(std::min(hw, 8u));
}

Graph f1_left() { return disjoint_union(build_cycle_edges(5), build_independent(1)); }
Graph two_k3() { return build_disjoint_copies(2, build_complete(3)); }

struct ExceptionExpectation {
    Graph g1, g2;
    std::set<ExceptionKind::Family> families;
    PackStatus status;
    std::string name;
};

std::pair<bool, std::string> check_exception_case(const ExceptionExpectation& expect) {
    auto start = Clock::now();
    PackingResult res = pack_sequence(expect.g1, expect.g2);
    std::set<ExceptionKind::Family> seen;
    for (const auto& kind : match_exceptions(expect.g1, expect.g2)) seen.insert(kind.family);
    double elapsed = seconds_since(start);
    bool ok = res.status == expect.status && seen == expect.families && elapsed < 1.0;
    return {ok, expect.name + " " + pack_status_name(res.status) + " in " + fmt_seconds(elapsed)};
}

} // namespace

int main() {
    run(1, "exception F1 with the main inequality satisfied at 9 <= 9", [] {
        auto start = Clock::now();
        Graph g1 = f1_left(), g2 = two_k3();
        PackingResult res = pack_sequence(g1, g2);
        auto kinds = match_exceptions(g1, g2);
        HypothesisReport rep = check_main(g1, g2);
        double elapsed = seconds_since(start);
        bool ok = res.status == PackStatus::unpackable && kinds.size() == 1 &&
                  kinds.begin()->family == ExceptionKind::F1 && rep.satisfied &&
                  (rep.delta1 + 1) * (rep.delta2 + 1) == 9 &&
                  rep.n + 1 + rep.min_delta + *rep.g_slack == 9 && elapsed < 1.0;
        return std::pair{ok, fmt_seconds(elapsed)};
    });

    run(2, "exceptions F2-F4 at smallest parameters plus packable control", [] {
        std::vector<ExceptionExpectation> cases{
            {disjoint_union(build_complete(3), build_independent(3)), two_k3(),
             {ExceptionKind::F2}, PackStatus::unpackable, "F2"},
            {build_disjoint_copies(3, build_complete(2)), build_complete_bipartite(3, 3),
             {ExceptionKind::F3}, PackStatus::unpackable, "F3"},
            {build_disjoint_copies(3, build_complete(2)),
             disjoint_union(build_complete(4), build_complete(2)),
             {ExceptionKind::F4}, PackStatus::unpackable, "F4"},
            {build_disjoint_copies(2, build_complete(2)), build_complete_bipartite(2, 2),
             {}, PackStatus::packed, "control"},
        };
        std::string detail;
        bool all = true;
        for (const auto& c : cases) {
            auto [ok, line] = check_exception_case(c);
            all = all && ok;
            detail += (detail.empty() ? "" : "; ") + line;
        }
        return std::pair{all, detail};
    });

    run(3, "main theorem exhaustive to order 6: no counterexamples", [] {
        auto start = Clock::now();
        RunConfig config;
        config.theorem = TheoremId::bec_half;
        config.max_order = 6;
        config.workers = worker_count();
        VerificationReport rep = verify_theorem(config);
        bool ok = rep.counterexamples.empty() && rep.budget_exhausted == 0 &&
                  rep.anomalies.empty() &&
                  rep.hypothesis_satisfied ==
                      rep.packed + rep.excluded_by_exception + rep.counterexamples.size();
        std::ostringstream detail;
        detail << rep.instances << " pairs, " << rep.packed << " packed, "
               << rep.excluded_by_exception << " excluded, " << fmt_seconds(seconds_since(start));
        return std::pair{ok, detail.str()};
    });

    run(4, "theorem 4 exhaustive to order 6: no counterexamples", [] {
        auto start = Clock::now();
        RunConfig config;
        config.theorem = TheoremId::theorem4;
        config.max_order = 6;
        config.workers = worker_count();
        VerificationReport rep = verify_theorem(config);
        bool ok = rep.counterexamples.empty() && rep.budget_exhausted == 0 && rep.anomalies.empty();
        std::ostringstream detail;
        detail << rep.instances << " pairs, " << rep.packed << " packed, "
               << fmt_seconds(seconds_since(start));
        return std::pair{ok, detail.str()};
    });

    run(5, "forest embedding guarantee exhaustive to order 6", [] {
        auto start = Clock::now();
        RunConfig config;
        config.theorem = TheoremId::forest_embed;
        config.max_order = 6;
        config.workers = worker_count();
        VerificationReport rep = verify_theorem(config);
        double elapsed = seconds_since(start);
        bool ok = rep.counterexamples.empty() && elapsed < 300.0;
        std::ostringstream detail;
        detail << rep.hypothesis_satisfied << " qualifying pairs, " << fmt_seconds(elapsed);
        return std::pair{ok, detail.str()};
    });

    run(6, "lemma 9 / theorem 12 pipelines build every qualifying instance", [] {
        auto start = Clock::now();
        std::vector<Graph> cores;
        for (int m = 1; m <= 7; ++m) cores.push_back(build_complete(m));
        cores.push_back(build_cycle_edges(4));
        cores.push_back(build_cycle_edges(5));
        for (int l = 1; l <= 3; ++l)
            for (int t = 1; t <= 5; ++t)
                if (2 * l + t + 1 <= 7) cores.push_back(build_u2(l, t));
        cores.push_back(build_u3(1));

        std::vector<std::vector<Graph>> forests_by_order(8), hosts_by_order(8);
        for (int n = 0; n <= 7; ++n) {
            for (const Graph& g : enumerate_graphs(n)) {
                hosts_by_order[n].push_back(g);
                if (is_forest(g)) forests_by_order[n].push_back(g);
            }
        }

        std::uint64_t tried12 = 0, tried9 = 0;
        std::uint64_t bad = 0;
        std::string first_bad;
        for (const Graph& core : cores) {
            for (int extra = 0; extra + core.order() <= 7; ++extra) {
                for (const Graph& forest : forests_by_order[extra]) {
                    Graph g1 = disjoint_union(core, forest);
                    int n = g1.order();
                    for (const Graph& g2 : hosts_by_order[n]) {
                        if (!check_bec(g1, g2).satisfied) continue;
                        try {
                            PipelineResult out = pipeline_theorem12(g1, g2);
                            ++tried12;
                            if (out.result.status != PackStatus::packed || out.used_fallback ||
                                out.anomaly) {
                                ++bad;
                                if (first_bad.empty())
                                    first_bad = "t12 " + graph6_encode(g1) + " vs " +
                                                graph6_encode(g2) + ": " + out.note;
                            }
                        } catch (const Error& e) {
                            if (e.code() != Errc::hypothesis_unmet &&
                                e.code() != Errc::decomposition_not_found)
                                throw;
                        }
                        try {
                            PipelineResult out = pipeline_lemma9(g1, g2);
                            ++tried9;
                            if (out.result.status != PackStatus::packed || out.used_fallback ||
                                out.anomaly) {
                                ++bad;
                                if (first_bad.empty())
                                    first_bad = "l9 " + graph6_encode(g1) + " vs " +
                                                graph6_encode(g2) + ": " + out.note;
                            }
                        } catch (const Error& e) {
                            if (e.code() != Errc::hypothesis_unmet &&
                                e.code() != Errc::decomposition_not_found)
                                throw;
                        }
                    }
                }
            }
        }
        std::ostringstream detail;
        detail << tried12 << " theorem-12 and " << tried9 << " lemma-9 qualifying instances, "
               << bad << " failures, " << fmt_seconds(seconds_since(start));
        if (!first_bad.empty()) detail << "; first: " << first_bad;
        return std::pair{bad == 0 && (tried12 + tried9) > 0, detail.str()};
    });

    run(7, "f-factor search agrees with spanning-subgraph enumeration to order 5", [] {
        auto start = Clock::now();
        std::uint64_t checked = 0, disagreements = 0;
        for (int n = 1; n <= 5; ++n) {
            for (const Graph& g : enumerate_graphs(n)) {
                std::vector<int> f(static_cast<std::size_t>(n), 0);
                for (;;) {
                    bool in_range = true;
                    long long sum = 0;
                    for (int v = 0; v < n; ++v) {
                        if (f[v] > g.degree(v)) in_range = false;
                        sum += f[v];
                    }
                    if (in_range && sum % 2 == 0) {
                        ++checked;
                        bool found = find_f_factor(g, f).has_value();
                        bool oracle = [&] {
                            auto edges = g.edges();
                            for (std::uint64_t mask = 0;
                                 mask < (std::uint64_t{1} << edges.size()); ++mask) {
                                std::vector<int> deg(static_cast<std::size_t>(n), 0);
                                for (std::size_t i = 0; i < edges.size(); ++i)
                                    if (mask >> i & 1) {
                                        ++deg[edges[i].first];
                                        ++deg[edges[i].second];
                                    }
                                if (deg == f) return true;
                            }
                            return false;
                        }();
                        if (found != oracle) ++disagreements;
                    }
                    int at = 0;
                    while (at < n && ++f[at] > n - 1) f[at++] = 0;
                    if (at == n) break;
                }
            }
        }
        std::ostringstream detail;
        detail << checked << " prescriptions, " << disagreements << " disagreements, "
               << fmt_seconds(seconds_since(start));
        return std::pair{disagreements == 0, detail.str()};
    });

    run(8, "unigraph oracle and the dominating-clique consequence to order 8", [] {
        auto start = Clock::now();
        bool families_ok = true;
        for (int m = 1; m <= 8 && families_ok; ++m) families_ok = is_unigraph(build_complete(m));
        families_ok = families_ok && is_unigraph(build_cycle_edges(4)) &&
                      is_unigraph(build_cycle_edges(5)) && is_unigraph(build_path_edges(3));
        for (int l = 1; families_ok; ++l) {
            if (2 * l + 2 + 1 > 8) break;
            for (int t = 1; 2 * l + t + 1 <= 8; ++t)
                families_ok = families_ok && is_unigraph(build_u2(l, t));
        }
        for (int l = 0; l <= 2 && families_ok; ++l) families_ok = is_unigraph(build_u3(l));
        families_ok = families_ok && !is_unigraph(build_cycle_edges(6)) &&
                      !is_unigraph(build_disjoint_copies(2, build_cycle_edges(3)));

        std::set<std::string> exceptional;
        exceptional.insert(canonical_form(build_cycle_edges(5)).bytes);
        for (int l = 0; l <= 2; ++l) exceptional.insert(canonical_form(build_u3(l)).bytes);

        std::uint64_t connected_unigraphs = 0, violations = 0;
        for (int n = 1; n <= 8; ++n) {
            auto lines = enumerate_graph6(n);
            for (const auto& line : lines) {
                Graph g = graph6_decode(line);
                if (!is_connected(g) || !is_unigraph(g)) continue;
                ++connected_unigraphs;
                if (has_dominating_clique(g)) continue;
                if (!exceptional.count(canonical_form(g).bytes)) ++violations;
            }
        }
        std::ostringstream detail;
        detail << connected_unigraphs << " connected unigraphs, " << violations << " violations, "
               << fmt_seconds(seconds_since(start));
        return std::pair{families_ok && violations == 0, detail.str()};
    });

    run(9, "ten thousand randomized transformations preserve degrees", [] {
        auto start = Clock::now();
        std::mt19937_64 rng(20250810);
        std::uniform_int_distribution<int> order(4, 10);
        std::uniform_int_distribution<int> coin(0, 1);

        int exchanges = 0, interchanges = 0, violations = 0;
        while (exchanges < 10'000 || interchanges < 10'000) {
            int n = order(rng);
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (coin(rng)) g.add_edge(u, v);
            DegreeSequence before = degree_sequence(g);

            auto edges = g.edges();
            if (exchanges < 10'000 && edges.size() >= 2) {
                std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
                auto [v, x] = edges[pick(rng)];
                auto [u, y] = edges[pick(rng)];
                bool distinct = v != u && v != y && x != u && x != y;
                if (distinct && !g.has_edge(v, y) && !g.has_edge(u, x)) {
                    Graph swapped = edge_exchange(g, {.x = x, .y = y, .u = u, .v = v});
                    for (int w = 0; w < n; ++w)
                        if (swapped.degree(w) != g.degree(w)) ++violations;
                    ++exchanges;
                }
            }
            if (interchanges < 10'000) {
                std::uniform_int_distribution<int> pv(0, n - 1);
                int a = pv(rng), b = pv(rng);
                Graph once = vertex_interchange(g, a, b);
                if (!(degree_sequence(once) == before)) ++violations;
                if (!(vertex_interchange(once, a, b) == g)) ++violations;
                ++interchanges;
            }
        }
        std::ostringstream detail;
        detail << exchanges << " exchanges, " << interchanges << " interchanges, " << violations
               << " violations, " << fmt_seconds(seconds_since(start));
        return std::pair{violations == 0, detail.str()};
    });

    run(10, "equitable coloring through packing to order 8", [] {
        auto start = Clock::now();
        std::uint64_t colored = 0, violations = 0;
        for (int n = 1; n <= 8; ++n) {
            for (const auto& line : enumerate_graph6(n)) {
                Graph g = graph6_decode(line);
                int delta = max_degree(g);
                if (delta > 3) continue;
                for (int k : {delta, delta + 1}) {
                    EquitableColoring coloring = equitable_coloring_via_packing(g, k);
                    ++colored;
                    std::size_t lo = static_cast<std::size_t>(n), hi = 0, total = 0;
                    for (const auto& cls : coloring.classes) {
                        lo = std::min(lo, cls.size());
                        hi = std::max(hi, cls.size());
                        total += cls.size();
                        for (std::size_t i = 0; i < cls.size(); ++i)
                            for (std::size_t j = i + 1; j < cls.size(); ++j)
                                if (g.has_edge(cls[i], cls[j])) ++violations;
                    }
                    if (total != static_cast<std::size_t>(n) || hi - lo > 1) ++violations;
                }
            }
        }
        std::ostringstream detail;
        detail << colored << " colorings, " << violations << " violations, "
               << fmt_seconds(seconds_since(start));
        return std::pair{colored > 0 && violations == 0, detail.str()};
    });

    run(11, "near-packing plus repair reaches a packing on every covered pair", [] {
        auto start = Clock::now();
        std::uint64_t covered = 0, failures_here = 0;
        for (int n = 2; n <= 6; ++n) {
            auto lines = enumerate_graph6(n);
            std::vector<Graph> classes;
            for (const auto& line : lines) classes.push_back(graph6_decode(line));
            for (const Graph& g1 : classes) {
                if (g1.edge_count() == 0) continue;
                for (const Graph& g2 : classes) {
                    if (!check_main(g1, g2).satisfied) continue;
                    if (!match_exceptions(g1, g2).empty()) continue;
                    ++covered;
                    auto np = near_packing(g1, g2);
                    if (!np) {
                        ++failures_here;
                        continue;
                    }
                    PackingResult repaired = exchange_repair(*np, g2);
                    if (repaired.status == PackStatus::packed) continue;
                    if (pack_sequence(g1, g2).status != PackStatus::packed) ++failures_here;
                }
            }
        }
        std::ostringstream detail;
        detail << covered << " covered pairs, " << failures_here << " failures, "
               << fmt_seconds(seconds_since(start));
        return std::pair{covered > 0 && failures_here == 0, detail.str()};
    });

    run(12, "verification reports are byte-identical across worker counts", [] {
        auto start = Clock::now();
        RunConfig one;
        one.theorem = TheoremId::bec_half;
        one.max_order = 5;
        one.workers = 1;
        one.seed = 424242;
        RunConfig eight = one;
        eight.workers = 8;
        std::string a = report_json(verify_theorem(one)).dump(2);
        std::string b = report_json(verify_theorem(eight)).dump(2);
        std::ostringstream detail;
        detail << a.size() << " bytes each, " << fmt_seconds(seconds_since(start));
        return std::pair{a == b, detail.str()};
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures == 0 ? 0 : 1;
}
