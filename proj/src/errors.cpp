#include "packlab/errors.hpp"

namespace packlab {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::not_graphical: return "NotGraphical";
    case Errc::no_positive_term: return "NoPositiveTerm";
    case Errc::invalid_exchange: return "InvalidExchange";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::no_positive_vertex: return "NoPositiveVertex";
    case Errc::order_too_large: return "OrderTooLarge";
    case Errc::malformed_graph6: return "MalformedGraph6";
    case Errc::bad_parameter: return "BadParameter";
    case Errc::parity_violation: return "ParityViolation";
    case Errc::infeasible: return "Infeasible";
    case Errc::not_regular: return "NotRegular";
    case Errc::not_a_forest: return "NotAForest";
    case Errc::no_edges: return "NoEdges";
    case Errc::budget_exhausted: return "BudgetExhausted";
    case Errc::not_achievable: return "NotAchievable";
    case Errc::degree_too_high: return "DegreeTooHigh";
    case Errc::packing_failed: return "PackingFailed";
    case Errc::hypothesis_unmet: return "HypothesisUnmet";
    case Errc::decomposition_not_found: return "DecompositionNotFound";
    case Errc::schema_violation: return "SchemaViolation";
    case Errc::usage: return "Usage";
    }
    return "Unknown";
}

} // namespace packlab
