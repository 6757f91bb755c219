#pragma once

#include <optional>
#include <span>
#include <vector>

#include "satlab/graph.hpp"

namespace satlab {

// Forbidden pattern: one p-clique together with t-1 further q-cliques, all
// vertex disjoint. Requires 2 <= p <= q and t >= 1; t = 1 degenerates to a
// single p-clique.
struct CliquePattern {
    int p;
    int q;
    int t;

    CliquePattern(int p, int q, int t);

    std::vector<int> sizes() const;  // {p, q, ..., q} with t-1 copies of q
    int order() const { return p + (t - 1) * q; }

    bool operator==(const CliquePattern&) const = default;
};

// One vertex set per requested clique, in the requested order.
struct Embedding {
    std::vector<VertexSet> parts;
    VertexSet support() const;
};

bool is_valid_embedding(const Graph& g, std::span<const int> sizes, const Embedding& e);

// lexicographically least k-clique inside `allowed`, if any
std::optional<VertexSet> find_clique(const Graph& g, int k, const VertexSet& allowed);

// Vertex-disjoint cliques of the given sizes inside `allowed`. The search
// places larger cliques first and breaks ties between equal sizes by
// insisting on increasing least vertices, so the first hit is deterministic.
std::optional<Embedding> find_disjoint_cliques(const Graph& g, std::span<const int> sizes,
                                               const VertexSet& allowed);

std::optional<Embedding> contains_pattern(const Graph& g, const CliquePattern& pattern);

// Up to `limit` distinct packings (exhaustive when fewer exist). Families
// differing only by the order of equal-size parts are reported once.
std::vector<Embedding> enumerate_packings(const Graph& g, std::span<const int> sizes,
                                          const VertexSet& allowed, std::size_t limit);

}  // namespace satlab
