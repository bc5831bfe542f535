#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "packlab/graph.hpp"

namespace packlab {

// Multiset of non-negative integers, stored sorted non-increasing.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> terms);
    DegreeSequence(std::initializer_list<int> terms)
        : DegreeSequence(std::vector<int>(terms)) {}

    int length() const { return static_cast<int>(terms_.size()); }
    int term(int i) const { return terms_[i]; }
    const std::vector<int>& terms() const { return terms_; }
    int sum() const;
    bool all_zero() const;

    bool operator==(const DegreeSequence& other) const { return terms_ == other.terms_; }

private:
    std::vector<int> terms_;
};

DegreeSequence degree_sequence(const Graph& g);

// Erdos-Gallai test: true iff some simple graph realizes the sequence.
bool is_graphical(const DegreeSequence& seq);

// Deterministic Havel-Hakimi realization; vertex i receives the i-th term of
// the sorted sequence, ties broken by smallest vertex index.
Graph havel_hakimi_realize(const DegreeSequence& seq);

// Realization F plus a vertex y of degree anchor_degree whose neighbors are
// the anchor_degree highest-degree vertices of F. anchor_degree must be the
// minimum positive term of seq.
std::pair<Graph, int> anchored_realize(const DegreeSequence& seq, int anchor_degree);

// Visits every labeled graph whose vertex i has degree exactly degrees[i]
// (degrees need not be sorted). Stops early when the callback returns false.
// Returns false iff the visit was cut short.
bool for_each_labeled_realization(const std::vector<int>& degrees,
                                  const std::function<bool(const Graph&)>& visit);

} // namespace packlab
