#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "satlab/canonical.hpp"
#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"
#include "satlab/saturation.hpp"
#include "satlab/search.hpp"
#include "satlab/structure.hpp"

using namespace satlab;

namespace {

// A005703-free sanity anchor: classes of m-edge graphs without isolated
// vertices, m = 0..8
constexpr std::uint64_t kEdgeClassCounts[] = {1, 1, 2, 5, 11, 26, 68, 177, 497};

bool same_report(const SearchReport& a, const SearchReport& b) {
    if (a.n != b.n || a.budget != b.budget || a.max_edges != b.max_edges) return false;
    if (a.sat_value != b.sat_value || a.extremal_forms != b.extremal_forms) return false;
    if (a.unique_extremal != b.unique_extremal || a.frontier != b.frontier) return false;
    if (a.guard_hit != b.guard_hit || a.certified != b.certified) return false;
    if (a.tallies.size() != b.tallies.size()) return false;
    for (std::size_t i = 0; i < a.tallies.size(); ++i)
        if (a.tallies[i].edges != b.tallies[i].edges ||
            a.tallies[i].examined != b.tallies[i].examined ||
            a.tallies[i].saturated != b.tallies[i].saturated)
            return false;
    return true;
}

}  // namespace

TEST_CASE("edge-class enumeration counts") {
    EdgeClassEnumerator en(16);
    for (int m = 0; m <= 8; ++m) CHECK(en.classes(m).size() == kEdgeClassCounts[m]);
    CHECK(en.nodes() > 0);

    // every representative is canonical, has m edges and no isolated vertex
    for (int m = 0; m <= 6; ++m)
        for (const Graph& g : en.classes(m)) {
            CHECK(g.edge_count() == m);
            CHECK(g == canonicalize(g).graph);
            for (int v : g.vertices()) CHECK(g.degree(v) > 0);
        }

    // forms are strictly ascending, so classes are pairwise distinct
    for (int m = 0; m <= 8; ++m) {
        const auto& level = en.classes(m);
        for (std::size_t i = 0; i + 1 < level.size(); ++i)
            CHECK(canonical_form(level[i]) < canonical_form(level[i + 1]));
    }
}

TEST_CASE("edge-class enumeration matches labeled-graph classes") {
    // strip the isolated vertices from every labeled 5-vertex graph, dedupe by
    // brute-force isomorphism, and compare the class counts per edge count
    std::vector<Graph> supports;
    for (const Graph& g : oracle::all_labeled(5)) {
        VertexSet live;
        for (int v : g.vertices())
            if (g.degree(v) > 0) live.set(v);
        Graph s = induced(g, live).graph;
        bool fresh = true;
        for (const Graph& seen : supports)
            if (oracle::isomorphic(seen, s)) {
                fresh = false;
                break;
            }
        if (fresh) supports.push_back(s);
    }
    EdgeClassEnumerator en(5);
    for (int m = 0; m <= 10; ++m) {
        std::size_t expect = 0;
        for (const Graph& s : supports) expect += s.edge_count() == m;
        CHECK(en.classes(m).size() == expect);
    }
}

TEST_CASE("support cap and edge bound") {
    EdgeClassEnumerator en(4);
    for (int m = 0; m <= 6; ++m)
        for (const Graph& g : en.classes(m)) CHECK(g.order() <= 4);
    CHECK(en.classes(6).size() == 1);  // K_4
    CHECK(en.classes(7).empty());      // more edges than C(4,2) fit

    CHECK(enumerate_graphs(4, 6).size() == 1);
    CHECK_THROWS_AS(enumerate_graphs(4, 7), std::invalid_argument);
    CHECK_THROWS_AS(EdgeClassEnumerator(-1), std::invalid_argument);
    CHECK_THROWS_AS(EdgeClassEnumerator(VertexSet::kMaxVertices + 1), std::invalid_argument);

    // a zero support bound degenerates to the empty graph alone
    EdgeClassEnumerator none(0);
    CHECK(none.classes(0).size() == 1);
    CHECK(none.classes(1).empty());
}

TEST_CASE("smallest uniqueness case from scratch") {
    auto report = compute_sat(7, CliquePattern(2, 2, 2));
    REQUIRE(report.sat_value.has_value());
    CHECK(*report.sat_value == 3);
    CHECK(report.frontier == 3);
    CHECK_FALSE(report.guard_hit);
    CHECK_FALSE(report.below_bound);
    REQUIRE(report.extremal_forms.size() == 1);
    CHECK(report.unique_extremal);
    CHECK(report.extremal_forms[0] ==
          canonical_form(build_extremal(7, CliquePattern(2, 2, 2))));
    REQUIRE(report.extremal_graphs.size() == 1);
    CHECK(report.extremal_graphs[0].order() == 7);
    CHECK(certify_saturated(report.extremal_graphs[0], CliquePattern(2, 2, 2)).saturated);

    // levels below the answer hold no saturated graph
    REQUIRE(report.tallies.size() == 4);
    for (int m = 0; m < 3; ++m) {
        CHECK(report.tallies[m].edges == m);
        CHECK(report.tallies[m].saturated == 0);
        CHECK(report.tallies[m].examined == kEdgeClassCounts[m]);
    }
    CHECK(report.tallies[3].saturated == 1);
}

TEST_CASE("extremal graphs pass the structural audit") {
    auto report = compute_sat(7, CliquePattern(2, 2, 2));
    REQUIRE(report.extremal_graphs.size() == 1);
    auto audit = residue(report.extremal_graphs[0], CliquePattern(2, 2, 2));
    CHECK(audit.all_pass());
}

TEST_CASE("below the validity bound the flag is raised") {
    auto report = compute_sat(6, CliquePattern(2, 2, 2));
    CHECK(report.below_bound);
    REQUIRE(report.sat_value.has_value());
    CHECK(*report.sat_value == 3);  // the formula still matches at n = 6
}

TEST_CASE("budget exhaustion is reported, not thrown") {
    SearchOptions opts;
    opts.budget = 2;  // sat(7, 2K_2) = 3 lies beyond this budget
    auto report = compute_sat(7, CliquePattern(2, 2, 2), opts);
    CHECK_FALSE(report.sat_value.has_value());
    CHECK(report.extremal_forms.empty());
    CHECK(report.frontier == 2);
    CHECK_FALSE(report.guard_hit);  // the budget, not the guard, ended the search

    opts.budget.reset();
    opts.max_edges = 2;
    auto guarded = compute_sat(7, CliquePattern(2, 2, 2), opts);
    CHECK_FALSE(guarded.sat_value.has_value());
    CHECK(guarded.frontier == 2);
    CHECK(guarded.guard_hit);
}

TEST_CASE("theorem verification at the two smallest points") {
    auto [ok_a, rep_a] = verify_theorem(7, CliquePattern(2, 2, 2));
    CHECK(ok_a);
    CHECK(rep_a.sat_value == 3);

    auto [ok_b, rep_b] = verify_theorem(13, CliquePattern(2, 3, 2));
    CHECK(ok_b);
    REQUIRE(rep_b.sat_value.has_value());
    CHECK(*rep_b.sat_value == 6);
    CHECK(rep_b.unique_extremal);
    REQUIRE(rep_b.extremal_graphs.size() == 1);
    CHECK(rep_b.extremal_forms[0] ==
          canonical_form(build_extremal(13, CliquePattern(2, 3, 2))));
}

TEST_CASE("theorem verification respects the edge guard") {
    auto [ok, report] = verify_theorem(16, CliquePattern(3, 3, 2));
    CHECK_FALSE(ok);  // sat = 21 needs enumeration depth far past the default guard
    CHECK(report.guard_hit);
    CHECK(report.frontier == 12);
    CHECK_FALSE(report.sat_value.has_value());
}

TEST_CASE("theorem verification refuses orders below the bound by default") {
    CHECK_THROWS_AS(verify_theorem(6, CliquePattern(2, 2, 2)), std::invalid_argument);
    SearchOptions opts;
    opts.allow_below_bound = true;
    auto [ok, report] = verify_theorem(6, CliquePattern(2, 2, 2), opts);
    CHECK(report.below_bound);
    CHECK(ok);  // n = 6 still realizes the formula with a unique class
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(compute_sat(3, CliquePattern(2, 3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(compute_sat(VertexSet::kMaxVertices + 1, CliquePattern(2, 2, 2)),
                    std::invalid_argument);
}

TEST_CASE("runs are deterministic and worker-count independent") {
    auto base = compute_sat(7, CliquePattern(2, 2, 2));
    auto again = compute_sat(7, CliquePattern(2, 2, 2));
    CHECK(same_report(base, again));

    SearchOptions wide;
    wide.workers = 4;
    auto parallel = compute_sat(7, CliquePattern(2, 2, 2), wide);
    CHECK(same_report(base, parallel));

    SearchOptions guarded;
    guarded.max_edges = 4;
    guarded.workers = 3;
    auto a = compute_sat(10, CliquePattern(2, 3, 2), guarded);
    guarded.workers = 1;
    auto b = compute_sat(10, CliquePattern(2, 3, 2), guarded);
    CHECK(same_report(a, b));
}

TEST_CASE("padding cannot manufacture saturation") {
    // K_3 plus isolated vertices is saturated for every valid order, so the
    // level-3 hit count is stable as n grows
    for (int n : {7, 9, 12}) {
        auto report = compute_sat(n, CliquePattern(2, 2, 2));
        REQUIRE(report.sat_value.has_value());
        CHECK(*report.sat_value == 3);
        CHECK(report.unique_extremal);
    }
}
