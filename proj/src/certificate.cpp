#include "packlab/certificate.hpp"

#include "packlab/graph6.hpp"

namespace packlab {

using nlohmann::json;

json hypothesis_json(const HypothesisReport& rep) {
    json out;
    out["theorem"] = rep.theorem;
    out["satisfied"] = rep.satisfied;
    out["trivially_true"] = rep.trivially_true;
    out["clauses"] = rep.clauses;
    out["n"] = rep.n;
    out["delta1"] = rep.delta1;
    out["delta2"] = rep.delta2;
    out["min_delta"] = rep.min_delta;
    if (rep.dplus) out["delta_plus"] = *rep.dplus;
    if (rep.g_slack) out["g"] = *rep.g_slack;
    if (rep.k) out["k"] = *rep.k;
    return out;
}

json exceptions_json(const std::set<ExceptionKind>& kinds) {
    json out = json::array();
    for (const auto& kind : kinds) {
        json one;
        one["family"] = exception_name(kind.family);
        if (kind.delta1 >= 0) one["delta1"] = kind.delta1;
        if (kind.delta2 >= 0) one["delta2"] = kind.delta2;
        out.push_back(one);
    }
    return out;
}

json certificate_json(const Graph& g1, const Graph& g2, const PackingResult& result) {
    json out;
    out["schema"] = schema_tag;
    out["tool"] = tool_version;
    out["instance"] = {{"g1", graph6_encode(g1)}, {"g2", graph6_encode(g2)}};
    out["mode"] = pack_mode_name(result.mode);
    out["status"] = pack_status_name(result.status);
    if (result.status == PackStatus::packed) out["witness"] = graph6_encode(*result.witness);
    out["exceptions"] = exceptions_json(match_exceptions(g1, g2));
    out["hypothesis"] = hypothesis_json(check_main(g1, g2));
    out["stats"] = {{"nodes", result.stats.nodes}, {"millis", result.stats.millis}};
    return out;
}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
    fail(Errc::schema_violation, "certificate schema violation: " + what);
}

const json& need(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) schema_error(std::string("missing field '") + key + "'");
    return *it;
}

} // namespace

bool certificate_validate(const json& doc) {
    if (!doc.is_object()) schema_error("document is not an object");
    if (need(doc, "schema").get<std::string>() != schema_tag) schema_error("unknown schema tag");
    const json& instance = need(doc, "instance");
    Graph g1 = graph6_decode(need(instance, "g1").get<std::string>());
    Graph g2 = graph6_decode(need(instance, "g2").get<std::string>());

    std::string status = need(doc, "status").get<std::string>();
    std::string mode = need(doc, "mode").get<std::string>();
    PackMode parsed_mode;
    if (mode == "embed")
        parsed_mode = PackMode::embed;
    else if (mode == "sequence")
        parsed_mode = PackMode::sequence;
    else if (mode == "componentwise")
        parsed_mode = PackMode::component_wise;
    else
        schema_error("unknown mode '" + mode + "'");

    bool has_witness = doc.contains("witness");
    if (status == "PACKED" && !has_witness) schema_error("PACKED certificate without witness");
    if (status != "PACKED" && has_witness) schema_error("witness on a non-PACKED certificate");
    if (status != "PACKED" && status != "UNPACKABLE" && status != "BUDGET_EXHAUSTED")
        schema_error("unknown status '" + status + "'");

    if (has_witness) {
        PackingResult replayed;
        replayed.status = PackStatus::packed;
        replayed.mode = parsed_mode;
        replayed.witness = graph6_decode(doc["witness"].get<std::string>());
        if (!validate_packing(replayed, g1, g2)) return false;
    }

    if (exceptions_json(match_exceptions(g1, g2)) != need(doc, "exceptions")) return false;

    const json& hyp = need(doc, "hypothesis");
    HypothesisReport fresh = check_main(g1, g2);
    json expected = hypothesis_json(fresh);
    for (auto& [key, value] : expected.items())
        if (!hyp.contains(key) || hyp[key] != value) return false;
    return true;
}

json report_json(const VerificationReport& report) {
    json out;
    out["schema"] = schema_tag;
    out["tool"] = tool_version;
    out["theorem"] = report.theorem;
    out["min_order"] = report.min_order;
    out["max_order"] = report.max_order;
    out["instances"] = report.instances;
    out["hypothesis_satisfied"] = report.hypothesis_satisfied;
    out["packed"] = report.packed;
    out["excluded_by_exception"] = report.excluded_by_exception;
    out["budget_exhausted"] = report.budget_exhausted;
    out["search_nodes"] = report.search_nodes;
    json cex = json::array();
    for (const auto& [a, b] : report.counterexamples) cex.push_back({{"g1", a}, {"g2", b}});
    out["counterexamples"] = cex;
    json exc = json::array();
    for (const auto& [a, b] : report.exception_instances) exc.push_back({{"g1", a}, {"g2", b}});
    out["exception_instances"] = exc;
    out["anomalies"] = report.anomalies;
    return out;
}

} // namespace packlab
