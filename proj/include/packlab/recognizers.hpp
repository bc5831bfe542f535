#pragma once

#include <optional>
#include <set>
#include <vector>

#include "packlab/graph.hpp"

namespace packlab {

// The four forbidden families of the packing theorem, with the parameters
// they matched at. F1 is a single pair; F2 carries (delta1, delta2) with
// delta2 <= delta1; F3 and F4 carry delta2 >= 1, F3 only for odd delta2.
struct ExceptionKind {
    enum Family { F1, F2, F3, F4 };
    Family family;
    int delta1 = -1;
    int delta2 = -1;

    bool operator<(const ExceptionKind& other) const { return family < other.family; }
    bool operator==(const ExceptionKind& other) const {
        return family == other.family && delta1 == other.delta1 && delta2 == other.delta2;
    }
};

const char* exception_name(ExceptionKind::Family family);

// Every family the pair matches up to isomorphism; non-empty means the pair
// is excluded from the packing guarantee.
std::set<ExceptionKind> match_exceptions(const Graph& g1, const Graph& g2);

struct SplitWitness {
    std::vector<int> clique;
    std::vector<int> independent;
};

std::optional<SplitWitness> is_split(const Graph& g);

struct DominatingCliqueWitness {
    std::vector<int> clique;
};

// Smallest dominating clique if one exists.
std::optional<DominatingCliqueWitness> has_dominating_clique(const Graph& g);

bool has_clique(const Graph& g, int size);

// Brute-force oracle: true iff every labeled realization of the degree
// sequence of g is isomorphic to g.
bool is_unigraph(const Graph& g, int cap = 8);

} // namespace packlab
