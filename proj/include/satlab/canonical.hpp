#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

// Total invariant of the isomorphism class: two graphs are isomorphic exactly
// when their forms compare equal. Layout: order as two big-endian bytes, then
// the upper triangle of the canonically relabeled graph in column order,
// packed eight bits per byte (high bit first).
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;
    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalResult {
    std::vector<int> order;  // order[position] = original vertex placed there
    Graph graph;             // the relabeled representative
    CanonicalForm form;
};

// Degree-refinement plus individualisation backtracking; branches inside an
// orbit of already-discovered automorphisms are pruned. The chosen labeling
// minimises the packed adjacency string.
CanonicalResult canonicalize(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

}  // namespace satlab
