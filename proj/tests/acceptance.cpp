// Acceptance gate: one line per criterion, exit code = number of failures.
// Timing goes to stderr; stdout carries exactly the verdict lines.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "satlab/canonical.hpp"
#include "satlab/graph.hpp"
#include "satlab/graph_io.hpp"
#include "satlab/pattern.hpp"
#include "satlab/saturation.hpp"
#include "satlab/search.hpp"
#include "satlab/structure.hpp"

using namespace satlab;

namespace {

int failures = 0;

void verdict(int criterion, bool pass, const std::string& what, double secs) {
    std::printf("criterion %d: %s — %s\n", criterion, pass ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    std::fprintf(stderr, "criterion %d took %.1f s\n", criterion, secs);
    if (!pass) ++failures;
}

template <class Fn>
void run(int criterion, const std::string& what, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note = what;
    try {
        pass = fn();
    } catch (const std::exception& e) {
        note += " [exception: " + std::string(e.what()) + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    verdict(criterion, pass, note, secs);
}

long long choose2(long long k) { return k * (k - 1) / 2; }

std::vector<CliquePattern> grid() {
    std::vector<CliquePattern> out;
    for (int p = 2; p <= 4; ++p)
        for (int q = p; q <= 4; ++q)
            for (int t : {2, 3}) out.push_back(CliquePattern(p, q, t));
    return out;
}

Graph from_mask(int n, std::uint32_t mask) {
    std::vector<std::pair<int, int>> es;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) es.push_back({i, j});
    return Graph(n, es);
}

std::optional<SearchReport> report3, report4;

}  // namespace

int main() {
    run(1, "formula reduces to the single-clique value for p in [2,8], n in [p,60]", [] {
        for (int p = 2; p <= 8; ++p)
            for (int n = p; n <= 60; ++n)
                if (sat_formula(n, CliquePattern(p, p, 1)) != choose2(n) - choose2(n - p + 2))
                    return false;
        return true;
    });

    run(2, "grid constructions are free, saturated and at the formula edge count", [] {
        for (const auto& pat : grid()) {
            int n = theorem_order_bound(pat) + 1;
            Graph g = build_extremal(n, pat);
            if (!is_pattern_free(g, pat)) return false;
            if (!certify_saturated(g, pat).saturated) return false;
            if (g.edge_count() != sat_formula(n, pat)) return false;
        }
        return true;
    });

    run(3, "exhaustive search at n=7 for (2,2,2): value 3, unique extremal class", [] {
        report3 = compute_sat(7, CliquePattern(2, 2, 2));
        return report3->sat_value == 3 && report3->extremal_forms.size() == 1 &&
               report3->unique_extremal;
    });

    run(4, "exhaustive search at n=13 for (2,3,2): value 6, unique extremal class", [] {
        report4 = compute_sat(13, CliquePattern(2, 3, 2));
        return report4->sat_value == 6 && report4->extremal_forms.size() == 1 &&
               report4->unique_extremal;
    });

    run(5, "structural audit passes on search extremals and grid constructions", [] {
        if (!report3 || !report4) return false;
        for (const Graph& g : report3->extremal_graphs)
            if (!residue(g, CliquePattern(2, 2, 2)).all_pass()) return false;
        for (const Graph& g : report4->extremal_graphs)
            if (!residue(g, CliquePattern(2, 3, 2)).all_pass()) return false;
        for (const auto& pat : grid()) {
            int n = theorem_order_bound(pat) + 1;
            auto r = residue(build_extremal(n, pat), pat);
            if (!r.all_pass()) return false;
            if (pat.t == 2 && r.verdicts.at("confinement").partial) return false;
        }
        return true;
    });

    run(6, "contraction inequality: exhaustive n<=7 and 1000 random connected graphs", [] {
        for (int n = 1; n <= 7; ++n) {
            std::uint32_t graphs = 1u << (n * (n - 1) / 2);
            for (std::uint32_t mask = 0; mask < graphs; ++mask) {
                Graph g = from_mask(n, mask);
                if (!is_connected(g)) continue;
                for (unsigned sub = 1; sub < (1u << n); ++sub) {
                    VertexSet x;
                    for (int v = 0; v < n; ++v)
                        if (sub >> v & 1) x.set(v);
                    if (!contraction_bound_holds(g, x)) return false;
                }
            }
        }
        std::mt19937 rng(20240817);
        for (int round = 0; round < 1000; ++round) {
            int n = 2 + int(rng() % 9);
            Graph g = oracle::random_connected(rng, n, 0.25 + 0.1 * (round % 5));
            unsigned sub = 1 + rng() % ((1u << n) - 1);
            VertexSet x;
            for (int v = 0; v < n; ++v)
                if (sub >> v & 1) x.set(v);
            if (!contraction_bound_holds(g, x)) return false;
        }
        return true;
    });

    run(7, "detector equals tuple brute force on every class with support <= 8", [] {
        std::vector<CliquePattern> pats{{2, 2, 2}, {2, 3, 2}, {3, 3, 2}};
        std::vector<std::uint64_t> by_order(9, 0);
        std::uint64_t total = 0;
        EdgeClassEnumerator en(8);
        for (int m = 0; m <= 28; ++m) {
            for (const Graph& g : en.classes(m)) {
                ++by_order[g.order()];
                ++total;
                Graph host = pad(g, 8);
                for (const auto& pat : pats) {
                    bool fast = contains_pattern(host, pat).has_value();
                    bool slow = oracle::tuple_contains(host, pat);
                    if (fast != slow) return false;
                }
            }
        }
        // classes on exactly k live vertices, k = 0..8
        const std::uint64_t expected[] = {1, 0, 1, 2, 7, 23, 122, 888, 11302};
        if (total != 12346) return false;
        for (int k = 0; k <= 8; ++k)
            if (by_order[k] != expected[k]) return false;
        return true;
    });

    run(8, "edge deletions break saturation at the deleted pair; additions break freeness", [] {
        for (const auto& pat : grid()) {
            int n = theorem_order_bound(pat) + 1;
            Graph g = build_extremal(n, pat);
            for (auto [i, j] : g.edges()) {
                Graph cut = g.without_edge(i, j);
                auto v = certify_saturated(cut, pat);
                if (!v.free || v.saturated) return false;
                // the deleted pair itself fails: restoring it creates no copy
                if (!is_pattern_free(cut.with_edge(i, j), pat)) return false;
            }
            for (auto [i, j] : non_edges(g))
                if (is_pattern_free(g.with_edge(i, j), pat)) return false;
        }
        return true;
    });

    run(9, "graph6 round-trip on all graphs with n<=6 plus pinned encodings", [] {
        for (int n = 0; n <= 6; ++n) {
            std::uint32_t graphs = 1u << (n * (n - 1) / 2);
            for (std::uint32_t mask = 0; mask < graphs; ++mask) {
                Graph g = from_mask(n, mask);
                if (from_graph6(to_graph6(g)) != g) return false;
            }
        }
        if (to_graph6(complete(3)) != "Bw") return false;
        Graph p3(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
        if (to_graph6(p3) != "Bg") return false;
        return true;
    });

    std::fprintf(stderr, "%d criterion(s) failed\n", failures);
    return failures;
}
