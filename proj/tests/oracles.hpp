#pragma once

// Brute-force reference implementations for the test suite. These are kept
// deliberately independent of the library's bitset search strategies: plain
// loops over vertex tuples and permutations.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "satlab/graph.hpp"
#include "satlab/pattern.hpp"

namespace oracle {

namespace detail {

inline bool tuple_place(const satlab::Graph& g, const std::vector<int>& sizes, std::size_t part,
                        int base, int pos, std::vector<int>& chosen, std::vector<char>& used) {
    if (part == sizes.size()) return true;
    // each part owns slots [base, base+sizes[part]); a shared buffer would let a
    // failed later part clobber the vertices this part's adjacency checks read
    if (pos == sizes[part]) return tuple_place(g, sizes, part + 1, base + pos, 0, chosen, used);
    for (int v = 0; v < g.order(); ++v) {
        if (used[v]) continue;
        bool adjacent = true;
        for (int i = 0; i < pos && adjacent; ++i) adjacent = g.has_edge(chosen[base + i], v);
        if (!adjacent) continue;
        used[v] = 1;
        chosen[base + pos] = v;
        bool found = tuple_place(g, sizes, part, base, pos + 1, chosen, used);
        used[v] = 0;
        if (found) return true;
    }
    return false;
}

}  // namespace detail

// ordered-tuple search over all vertex placements, one clique at a time
inline bool tuple_contains(const satlab::Graph& g, const satlab::CliquePattern& pat) {
    if (pat.order() > g.order()) return false;
    std::vector<int> sizes = pat.sizes();
    std::vector<int> chosen(pat.order(), -1);
    std::vector<char> used(g.order(), 0);
    return detail::tuple_place(g, sizes, 0, 0, 0, chosen, used);
}

// permutation brute force; degree multisets filter the hopeless cases
inline bool isomorphic(const satlab::Graph& a, const satlab::Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    int n = a.order();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int i = 0; i < n && match; ++i)
            for (int j = i + 1; j < n && match; ++j)
                match = a.has_edge(i, j) == b.has_edge(perm[i], perm[j]);
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// all 2^C(n,2) labeled graphs
inline std::vector<satlab::Graph> all_labeled(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    std::vector<satlab::Graph> out;
    out.reserve(std::size_t(1) << pairs.size());
    for (std::size_t mask = 0; mask < (std::size_t(1) << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> es;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1) es.push_back(pairs[b]);
        out.push_back(satlab::Graph(n, es));
    }
    return out;
}

inline std::vector<satlab::Graph> iso_classes(const std::vector<satlab::Graph>& gs) {
    std::vector<satlab::Graph> reps;
    for (const auto& g : gs) {
        bool fresh = true;
        for (const auto& r : reps)
            if (isomorphic(g, r)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(g);
    }
    return reps;
}

inline satlab::Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) es.push_back({i, j});
    return satlab::Graph(n, es);
}

inline satlab::Graph random_connected(std::mt19937& rng, int n, double p) {
    while (true) {
        satlab::Graph g = random_graph(rng, n, p);
        if (satlab::is_connected(g)) return g;
    }
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace oracle
