#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace packlab {

enum class Errc {
    not_graphical,
    no_positive_term,
    invalid_exchange,
    size_mismatch,
    no_positive_vertex,
    order_too_large,
    malformed_graph6,
    bad_parameter,
    parity_violation,
    infeasible,
    not_regular,
    not_a_forest,
    no_edges,
    budget_exhausted,
    not_achievable,
    degree_too_high,
    packing_failed,
    hypothesis_unmet,
    decomposition_not_found,
    schema_violation,
    usage,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string what) : std::runtime_error(std::move(what)), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace packlab
