#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "satlab/canonical.hpp"
#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace satlab {

// Level-by-level generation of one representative per isomorphism class of
// graphs with m edges and no isolated vertices on at most max_support
// vertices. Level m is built from level m-1 by adding an edge between
// existing vertices, a pendant edge, or a disjoint edge, deduplicating by
// canonical form. Levels are cached; representatives are canonical graphs in
// ascending form order.
class EdgeClassEnumerator {
public:
    explicit EdgeClassEnumerator(int max_support);

    const std::vector<Graph>& classes(int m);
    int max_support() const { return max_support_; }
    std::uint64_t nodes() const { return nodes_; }  // augmentation attempts

private:
    int max_support_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<Graph>> levels_;
};

// one-shot wrapper; requires m <= C(n_support, 2)
std::vector<Graph> enumerate_graphs(int n_support, int m);

struct SearchOptions {
    std::optional<int> budget;  // max edge count to search; default sat_formula(n, pattern)
    int max_edges = 12;         // hard guard on the enumeration depth
    int workers = 1;
    bool allow_below_bound = false;  // let verify_theorem run below the theorem bound
};

struct LevelTally {
    int edges = 0;
    std::uint64_t examined = 0;
    std::uint64_t saturated = 0;
};

struct SearchReport {
    SearchReport(int order, CliquePattern pat) : n(order), pattern(pat) {}

    int n = 0;
    CliquePattern pattern;
    bool below_bound = false;
    int budget = 0;     // resolved edge budget
    int max_edges = 0;  // guard in force
    std::vector<LevelTally> tallies;
    std::optional<int> sat_value;
    std::vector<CanonicalForm> extremal_forms;  // ascending
    std::vector<Graph> extremal_graphs;         // canonical representatives, padded to n
    bool unique_extremal = false;  // single class, equal to the reference construction
    int frontier = -1;             // highest edge count fully examined
    bool guard_hit = false;        // max_edges cut the search before the budget
    std::uint64_t enumeration_nodes = 0;
    std::uint64_t certified = 0;
    double seconds = 0;  // wall clock; never part of serialized output
};

// For m = 0, 1, ...: pad every m-edge class to order n and certify; stop at
// the first m with a saturated graph. Exhausting the budget (or hitting the
// max_edges guard) is reported in the result, not thrown.
SearchReport compute_sat(int n, const CliquePattern& pattern, const SearchOptions& opts = {});

// true iff the search finds sat_value == sat_formula(n, pattern) with exactly
// one extremal class, equal to the reference construction
std::pair<bool, SearchReport> verify_theorem(int n, const CliquePattern& pattern,
                                             const SearchOptions& opts = {});

}  // namespace satlab
