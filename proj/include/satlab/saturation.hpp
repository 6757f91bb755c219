#pragma once

#include <optional>
#include <utility>

#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace satlab {

// (p-2)(n-p+2) + (t-1)*C(q+1,2) + C(p-2,2); requires n >= pattern order
long long sat_formula(int n, const CliquePattern& pattern);

// the formula and the uniqueness statement are established for orders
// strictly above q(q+1)(t-1) + 3(p-2)
int theorem_order_bound(const CliquePattern& pattern);

// smallest order the reference construction fits: p + (t-1)q + t - 3
int min_construction_order(const CliquePattern& pattern);

// K_{p-2} joined to ((t-1) disjoint (q+1)-cliques plus isolated vertices).
// Layout: vertices 0..p-3 form the dominating clique, then t-1 blocks of
// q+1 consecutive vertices, then the independent remainder.
Graph build_extremal(int n, const CliquePattern& pattern);

bool is_pattern_free(const Graph& g, const CliquePattern& pattern);

struct SaturationVerdict {
    bool free = false;
    bool saturated = false;
    // exactly one of these is set when the corresponding property fails
    std::optional<Embedding> pattern_found;       // pattern inside g itself
    std::optional<std::pair<int, int>> open_pair; // non-edge whose addition creates no pattern
};

// Freeness is checked first; if g is free, every non-edge is tried in
// ascending order and the first one that fails to create the pattern is
// reported. With workers > 1 the non-edges are scanned concurrently and the
// least failing index wins, so the verdict does not depend on thread timing.
SaturationVerdict certify_saturated(const Graph& g, const CliquePattern& pattern,
                                    int workers = 1);

}  // namespace satlab
