#pragma once

#include <set>
#include <string>

#include <json.hpp>

#include "packlab/packing.hpp"
#include "packlab/recognizers.hpp"
#include "packlab/theorems.hpp"
#include "packlab/verify.hpp"

namespace packlab {

inline constexpr const char* schema_tag = "packlab/1";
inline constexpr const char* tool_version = "packlab 1.0.0";

nlohmann::json hypothesis_json(const HypothesisReport& rep);

nlohmann::json exceptions_json(const std::set<ExceptionKind>& kinds);

// The certificate a `pack` run emits: instance, verdict, witness, matched
// exception families, the main-inequality report and search stats.
nlohmann::json certificate_json(const Graph& g1, const Graph& g2, const PackingResult& result);

// Re-checks a certificate from scratch: decodes the instance, revalidates
// the witness against the mode contract, recomputes exception matches and
// the hypothesis arithmetic. Structural defects (missing fields, a packed
// status without witness) raise SchemaViolation; semantic mismatches return
// false.
bool certificate_validate(const nlohmann::json& doc);

nlohmann::json report_json(const VerificationReport& report);

} // namespace packlab
