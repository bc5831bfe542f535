#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "packlab/canonical.hpp"
#include "packlab/certificate.hpp"
#include "packlab/degree_sequence.hpp"
#include "packlab/enumerate.hpp"
#include "packlab/graph6.hpp"
#include "packlab/pipelines.hpp"
#include "packlab/recognizers.hpp"
#include "packlab/theorems.hpp"
#include "packlab/verify.hpp"

namespace {

using namespace packlab;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_input_error = 2;
constexpr int exit_budget = 3;

int enumeration_cap_from_env() {
    const char* raw = std::getenv("PACKLAB_MAX_ORDER");
    if (!raw) return default_enumeration_cap;
    try {
        int cap = std::stoi(raw);
        if (cap < 0) throw std::invalid_argument("negative");
        return cap;
    } catch (const std::exception&) {
        fail(Errc::usage, "PACKLAB_MAX_ORDER must be a non-negative integer");
    }
}

std::vector<int> parse_terms(const std::vector<std::string>& raw) {
    std::vector<int> terms;
    for (const auto& chunk : raw) {
        std::stringstream ss(chunk);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            std::size_t used = 0;
            int value = std::stoi(item, &used);
            if (used != item.size()) fail(Errc::usage, "bad degree term '" + item + "'");
            terms.push_back(value);
        }
    }
    if (terms.empty()) fail(Errc::usage, "no degree terms given");
    return terms;
}

struct PackArgs {
    std::string mode = "sequence";
    std::string g1, g2;
    bool as_json = false;
    std::uint64_t nodes = SearchBudget{}.max_nodes;
    long long millis = SearchBudget{}.max_millis;
};

int run_pack(const PackArgs& args) {
    Graph g1 = graph6_decode(args.g1);
    Graph g2 = graph6_decode(args.g2);
    SearchBudget budget{args.nodes, args.millis};
    PackingResult result;
    if (args.mode == "embed")
        result = pack_embed(g1, g2, budget);
    else if (args.mode == "sequence")
        result = pack_sequence(g1, g2, budget);
    else if (args.mode == "componentwise")
        result = pack_component_wise(g1, g2, budget);
    else
        fail(Errc::usage, "mode must be embed, sequence or componentwise");

    if (args.as_json) {
        std::cout << certificate_json(g1, g2, result).dump(2) << "\n";
    } else {
        std::cout << pack_status_name(result.status) << " (mode " << pack_mode_name(result.mode)
                  << ", " << result.stats.nodes << " nodes)\n";
        if (result.witness) std::cout << "witness: " << graph6_encode(*result.witness) << "\n";
        auto kinds = match_exceptions(g1, g2);
        if (!kinds.empty()) {
            std::cout << "exceptions:";
            for (const auto& kind : kinds) std::cout << " " << exception_name(kind.family);
            std::cout << "\n";
        }
    }
    return result.status == PackStatus::budget_exhausted ? exit_budget : exit_ok;
}

int run_check(const std::string& theorem, const std::string& a, const std::string& b, int k,
              bool as_json) {
    Graph g1 = graph6_decode(a);
    Graph g2 = graph6_decode(b);
    HypothesisReport rep;
    if (theorem == "bec")
        rep = check_bec(g1, g2);
    else if (theorem == "bec-half")
        rep = check_main(g1, g2);
    else if (theorem == "theorem4")
        rep = check_cor4(g1, g2);
    else if (theorem == "theorem1")
        rep = check_katerinis(g1, g2);
    else if (theorem == "theorem5")
        rep = check_theorem5_hypothesis(g1, g2);
    else if (theorem == "theorem7")
        rep = check_theorem7_hypothesis(g1, g2, k);
    else
        fail(Errc::usage, "unknown checker '" + theorem + "'");

    if (as_json) {
        std::cout << hypothesis_json(rep).dump(2) << "\n";
    } else {
        std::cout << rep.theorem << ": " << (rep.satisfied ? "hypothesis holds" : "hypothesis fails")
                  << (rep.trivially_true ? " (trivially)" : "") << "\n";
        for (const auto& [name, value] : rep.clauses)
            std::cout << "  " << name << ": " << (value ? "true" : "false") << "\n";
    }
    return exit_ok;
}

int run_verify(const RunConfig& config, bool as_json, const std::string& output) {
    VerificationReport report = verify_theorem(config);
    json doc = report_json(report);
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) fail(Errc::usage, "cannot write to '" + output + "'");
        out << doc.dump(2) << "\n";
    }
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << report.theorem << " over orders " << report.min_order << ".."
                  << report.max_order << ": " << report.instances << " instances, "
                  << report.hypothesis_satisfied << " satisfied, " << report.packed << " packed, "
                  << report.excluded_by_exception << " excluded, " << report.budget_exhausted
                  << " budget-exhausted, " << report.counterexamples.size() << " counterexamples\n";
        for (const auto& [a, b] : report.counterexamples)
            std::cout << "  counterexample: " << a << "  " << b << "\n";
        for (const auto& note : report.anomalies) std::cout << "  anomaly: " << note << "\n";
    }
    if (!report.counterexamples.empty()) return exit_counterexample;
    if (report.budget_exhausted > 0) return exit_budget;
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"packlab: degree-sequence packing laboratory"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    // realize
    auto* realize = app.add_subcommand("realize", "realize a degree sequence as graph6");
    std::vector<std::string> terms_raw;
    int anchor = -1;
    bool realize_json = false;
    realize->add_option("terms", terms_raw, "degree terms, space or comma separated")->required();
    realize->add_option("--anchor", anchor, "anchored realization with this minimum positive degree");
    realize->add_flag("--json", realize_json);

    // pack
    auto* pack = app.add_subcommand("pack", "pack two graphs");
    PackArgs pack_args;
    pack->add_option("--mode", pack_args.mode, "embed | sequence | componentwise")
        ->default_val("sequence");
    pack->add_option("g1", pack_args.g1)->required();
    pack->add_option("g2", pack_args.g2)->required();
    pack->add_flag("--json", pack_args.as_json);
    pack->add_option("--budget-nodes", pack_args.nodes);
    pack->add_option("--budget-ms", pack_args.millis);

    // check
    auto* check = app.add_subcommand("check", "evaluate a theorem hypothesis on a pair");
    std::string check_theorem, check_a, check_b;
    int check_k = 1;
    bool check_json = false;
    check->add_option("--theorem", check_theorem)->required();
    check->add_option("g1", check_a)->required();
    check->add_option("g2", check_b)->required();
    check->add_option("-k,--k", check_k, "factor degree for theorem7");
    check->add_flag("--json", check_json);

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustively verify a theorem over small orders");
    std::string verify_theorem_name = "bec-half";
    RunConfig config;
    bool verify_json = false;
    std::string output;
    verify->add_option("--theorem", verify_theorem_name)->required();
    verify->add_option("--max-order", config.max_order)->required();
    verify->add_option("--min-order", config.min_order);
    verify->add_option("--workers", config.workers);
    verify->add_option("--seed", config.seed);
    verify->add_option("--budget-nodes", config.budget_nodes);
    verify->add_option("--output", output, "also write the JSON report to this path");
    verify->add_flag("--json", verify_json);

    // unigraph
    auto* unigraph = app.add_subcommand("unigraph", "test the unigraph oracle");
    std::string unigraph_line;
    bool unigraph_json = false;
    unigraph->add_option("g6", unigraph_line)->required();
    unigraph->add_flag("--json", unigraph_json);

    // census
    auto* census = app.add_subcommand("census", "isomorphism classes per order");
    int census_max = 6;
    bool census_g6 = false, census_json = false;
    census->add_option("--max-order", census_max)->required();
    census->add_flag("--g6", census_g6, "print one graph6 line per class");
    census->add_flag("--json", census_json);

    CLI11_PARSE(app, argc, argv);

    try {
        int cap = enumeration_cap_from_env();
        config.enumeration_cap = cap;

        if (realize->parsed()) {
            DegreeSequence seq(parse_terms(terms_raw));
            Graph g;
            int y = -1;
            if (anchor >= 0)
                std::tie(g, y) = anchored_realize(seq, anchor);
            else
                g = havel_hakimi_realize(seq);
            if (realize_json) {
                json doc{{"schema", schema_tag}, {"graph6", graph6_encode(g)}};
                if (y >= 0) doc["anchor"] = y;
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << graph6_encode(g) << "\n";
                if (y >= 0) std::cout << "anchor vertex: " << y << "\n";
            }
            return exit_ok;
        }
        if (pack->parsed()) return run_pack(pack_args);
        if (check->parsed()) return run_check(check_theorem, check_a, check_b, check_k, check_json);
        if (verify->parsed()) {
            config.theorem = parse_theorem_id(verify_theorem_name);
            if (config.max_order > cap)
                fail(Errc::usage, "max order exceeds PACKLAB_MAX_ORDER cap of " +
                                      std::to_string(cap));
            return run_verify(config, verify_json, output);
        }
        if (unigraph->parsed()) {
            Graph g = graph6_decode(unigraph_line);
            bool result = is_unigraph(g);
            if (unigraph_json)
                std::cout << json{{"schema", schema_tag}, {"unigraph", result}}.dump(2) << "\n";
            else
                std::cout << (result ? "unigraph" : "not a unigraph") << "\n";
            return exit_ok;
        }
        if (census->parsed()) {
            if (census_max > cap)
                fail(Errc::usage, "max order exceeds PACKLAB_MAX_ORDER cap of " +
                                      std::to_string(cap));
            json counts = json::array();
            for (int o = 0; o <= census_max; ++o) {
                auto classes = enumerate_graph6(o, cap);
                counts.push_back({{"order", o}, {"classes", classes.size()}});
                if (census_g6)
                    for (const auto& line : classes) std::cout << line << "\n";
                else if (!census_json)
                    std::cout << "order " << o << ": " << classes.size() << " classes\n";
            }
            if (census_json)
                std::cout << json{{"schema", schema_tag}, {"census", counts}}.dump(2) << "\n";
            return exit_ok;
        }
    } catch (const packlab::Error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return e.code() == Errc::budget_exhausted ? exit_budget : exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
