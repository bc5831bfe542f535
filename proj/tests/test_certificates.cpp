#include <doctest.h>

#include "packlab/certificate.hpp"
#include "packlab/families.hpp"
#include "packlab/graph6.hpp"

using namespace packlab;
using nlohmann::json;

namespace {

json sample_certificate(PackStatus wanted) {
    Graph g1, g2;
    if (wanted == PackStatus::packed) {
        g1 = build_disjoint_copies(2, build_complete(2));
        g2 = build_complete_bipartite(2, 2);
    } else {
        g1 = disjoint_union(build_cycle_edges(5), build_independent(1));
        g2 = build_disjoint_copies(2, build_complete(3));
    }
    PackingResult res = pack_sequence(g1, g2);
    REQUIRE(res.status == wanted);
    return certificate_json(g1, g2, res);
}

} // namespace

TEST_CASE("emitted certificates validate") {
    json packed = sample_certificate(PackStatus::packed);
    CHECK(certificate_validate(packed));
    CHECK(packed["schema"] == schema_tag);

    json unpackable = sample_certificate(PackStatus::unpackable);
    CHECK(certificate_validate(unpackable));
    CHECK(unpackable["exceptions"][0]["family"] == "F1");
    CHECK(unpackable["hypothesis"]["satisfied"] == true);
}

TEST_CASE("tampered certificates fail closed") {
    json doc = sample_certificate(PackStatus::packed);

    json shared_edge = doc;
    shared_edge["witness"] = shared_edge["instance"]["g2"]; // witness = g2 itself
    CHECK_FALSE(certificate_validate(shared_edge));

    json wrong_hypothesis = doc;
    wrong_hypothesis["hypothesis"]["satisfied"] = !doc["hypothesis"]["satisfied"].get<bool>();
    CHECK_FALSE(certificate_validate(wrong_hypothesis));

    json wrong_exceptions = doc;
    wrong_exceptions["exceptions"].push_back({{"family", "F1"}});
    CHECK_FALSE(certificate_validate(wrong_exceptions));

    json missing_witness = doc;
    missing_witness.erase("witness");
    CHECK_THROWS_AS((void)certificate_validate(missing_witness), Error);

    json spurious_witness = sample_certificate(PackStatus::unpackable);
    spurious_witness["witness"] = spurious_witness["instance"]["g1"];
    CHECK_THROWS_AS((void)certificate_validate(spurious_witness), Error);

    json bad_schema = doc;
    bad_schema["schema"] = "packlab/999";
    CHECK_THROWS_AS((void)certificate_validate(bad_schema), Error);
}

TEST_CASE("verification reports are worker-count independent") {
    RunConfig one;
    one.theorem = TheoremId::bec_half;
    one.max_order = 4;
    one.workers = 1;
    one.seed = 99;

    RunConfig four = one;
    four.workers = 4;

    std::string a = report_json(verify_theorem(one)).dump(2);
    std::string b = report_json(verify_theorem(four)).dump(2);
    CHECK(a == b);
}

TEST_CASE("bec-half verification finds the exception families") {
    RunConfig config;
    config.theorem = TheoremId::bec_half;
    config.max_order = 4;
    config.invariance_samples = 200;
    VerificationReport report = verify_theorem(config);
    CHECK(report.counterexamples.empty());
    CHECK(report.budget_exhausted == 0);
    CHECK(report.hypothesis_satisfied ==
          report.packed + report.excluded_by_exception + report.budget_exhausted +
              report.counterexamples.size());
    // (K2, K2) at order 2 and (2K2, 2K2)-style F4 pairs at order 4 are in range.
    CHECK(report.excluded_by_exception > 0);
    for (const auto& [a, b] : report.exception_instances) {
        Graph g1 = graph6_decode(a), g2 = graph6_decode(b);
        CHECK_FALSE(match_exceptions(g1, g2).empty());
        CHECK(pack_sequence(g1, g2).status == PackStatus::unpackable);
    }
}

TEST_CASE("problem 1 stays open on tiny orders") {
    RunConfig config;
    config.theorem = TheoremId::problem1;
    config.max_order = 4;
    config.invariance_samples = 100;
    VerificationReport report = verify_theorem(config);
    CHECK(report.counterexamples.empty());
    CHECK(report.anomalies.empty());
}
