#pragma once

#include <string>
#include <vector>

#include "packlab/graph.hpp"

namespace packlab {

// Isomorphism-complete canonical form: two graphs have equal bytes iff they
// are isomorphic. bytes is the graph6 line of the canonical representative.
struct CanonicalForm {
    std::string bytes;
    std::vector<int> labeling; // labeling[v] = position of v in the canonical order

    bool operator==(const CanonicalForm& other) const { return bytes == other.bytes; }
    bool operator<(const CanonicalForm& other) const { return bytes < other.bytes; }
};

// Degree-refinement plus backtracking over refinement cells; sized for desk
// scale (n <= 10 or so), not a general-purpose canonical labeler.
CanonicalForm canonical_form(const Graph& g);

Graph canonical_graph(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// The stable vertex coloring reached by iterated neighbor-color refinement;
// color ids are isomorphism-invariant.
std::vector<int> equitable_colors(const Graph& g);

} // namespace packlab
