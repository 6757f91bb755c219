#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace satlab {

enum class Outcome { pass, fail, not_applicable };
const char* to_string(Outcome o);

struct Verdict {
    Outcome outcome = Outcome::pass;
    bool partial = false;  // an enumeration cap truncated the evidence
    std::string detail;    // counterexample or reason, empty on a clean pass

    bool failed() const { return outcome == Outcome::fail; }
};

// Decomposition of a saturated graph around a minimum-degree vertex:
//   base_vertex  least-index vertex of minimum degree
//   core         its neighbourhood
//   packing      t-1 disjoint q-cliques avoiding the core (empty for t = 1)
//   fringe       outside vertices with a neighbour in the packing
//   extra_edges  edges avoiding the core that are not internal to one block
//   stripped     the graph on fringe + packing with block-internal edges removed
//   components   connected pieces of `stripped`, ordered by least vertex
struct ResidueReport {
    ResidueReport(Graph g, CliquePattern pat) : graph(std::move(g)), pattern(pat) {}

    Graph graph;
    CliquePattern pattern;
    bool below_bound = false;
    int base_vertex = -1;
    VertexSet core;
    Embedding packing;
    VertexSet fringe;
    std::vector<std::pair<int, int>> extra_edges;
    Graph stripped;
    std::vector<VertexSet> components;
    std::map<std::string, Verdict> verdicts;

    bool all_pass() const;  // no verdict failed (not-applicable is fine)
};

// Certifies saturation (throws std::invalid_argument otherwise), builds the
// decomposition and runs every structural check. A packing may be supplied;
// by default the first one in detector order is used. `cap` bounds each
// packing enumeration (verdicts are marked partial when it truncates).
ResidueReport residue(const Graph& g, const CliquePattern& pattern,
                      std::optional<Embedding> packing = std::nullopt, std::size_t cap = 10000,
                      int workers = 1);

// Individual checks. The report-based ones re-read only report fields, so
// tampered reports can be used to exercise failure paths.
Verdict check_outside_empty(const ResidueReport& r);     // no edge avoids core and packing
Verdict check_extra_edge_count(const ResidueReport& r);  // |extra_edges| == (t-1) q
Verdict check_component_balance(const ResidueReport& r); // per component: edges == packing vertices
Verdict check_tree_anchor(const ResidueReport& r);       // tree components touch the fringe

// minimum degree equals p-2 for minimum saturated graphs above the bound
Verdict check_min_degree(const Graph& g, const CliquePattern& pattern);

// the core is a clique dominated by every non-neighbour of the base vertex
Verdict check_dominating_closure(const Graph& g, const CliquePattern& pattern);

// every q-clique packing avoiding core + {u} must cover N(u) - core;
// u must not be the base vertex or one of its neighbours
Verdict check_confinement(const Graph& g, const CliquePattern& pattern, int u,
                          std::size_t cap = 10000);

// fringe/packing interface: one fringe vertex per component, no edges between
// contact points in different blocks, q-cliques confined to two blocks (q >= 4),
// two contacts force a whole block, no single contacts, neighbourhoods in the
// packing are exactly one block
std::map<std::string, Verdict> check_fringe_structure(const ResidueReport& r);

// |E(h)| - |E(h[x])| >= |V(h) - x| for connected h; throws when h is not
// connected
bool contraction_bound_holds(const Graph& h, const VertexSet& x);

}  // namespace satlab
