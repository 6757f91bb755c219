#include "satlab/pattern.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace satlab {

CliquePattern::CliquePattern(int p_, int q_, int t_) : p(p_), q(q_), t(t_) {
    if (p < 2 || q < p || t < 1)
        throw std::invalid_argument("clique pattern requires 2 <= p <= q and t >= 1");
}

std::vector<int> CliquePattern::sizes() const {
    std::vector<int> s{p};
    s.insert(s.end(), std::size_t(t - 1), q);
    return s;
}

VertexSet Embedding::support() const {
    VertexSet s;
    for (const auto& part : parts) s = s | part;
    return s;
}

bool is_valid_embedding(const Graph& g, std::span<const int> sizes, const Embedding& e) {
    if (e.parts.size() != sizes.size()) return false;
    VertexSet seen;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const VertexSet& part = e.parts[i];
        if (part.count() != sizes[i]) return false;
        if (!g.vertices().contains_all(part)) return false;
        if (seen.intersects(part)) return false;
        seen = seen | part;
        for (int v : part)
            if (!g.neighbors(v).contains_all(part - VertexSet::single(v))) return false;
    }
    return true;
}

namespace {

struct Packer {
    const Graph& g;
    std::span<const int> sizes;     // non-increasing
    std::span<const int> slot;      // slot[i] = requested position of sizes[i]
    std::span<const int> demand;    // demand[i] = sizes[i] + sizes[i+1] + ...
    const std::size_t limit;
    std::vector<VertexSet> parts;
    std::vector<Embedding> results;

    // returns true once `limit` embeddings are collected
    bool place(std::size_t level, VertexSet avail) {
        if (level == sizes.size()) {
            Embedding e;
            e.parts.resize(parts.size());
            for (std::size_t i = 0; i < parts.size(); ++i) e.parts[slot[i]] = parts[i];
            results.push_back(std::move(e));
            return results.size() >= limit;
        }
        if (avail.count() < demand[level]) return false;
        // equal-size parts are forced into increasing least-vertex order
        int floor = level > 0 && sizes[level - 1] == sizes[level] ? parts[level - 1].first() : -1;
        return grow(level, VertexSet{}, sizes[level], avail & VertexSet::above(floor), avail);
    }

    // members: clique built so far; cand: vertices above the last pick,
    // adjacent to all members and still available
    bool grow(std::size_t level, VertexSet members, int need, VertexSet cand, VertexSet avail) {
        if (need == 0) {
            parts.push_back(members);
            bool done = place(level + 1, avail - members);
            parts.pop_back();
            return done;
        }
        if (cand.count() < need) return false;
        for (int v : cand) {
            VertexSet nc = cand & g.neighbors(v) & VertexSet::above(v);
            if (nc.count() < need - 1) continue;
            if (grow(level, VertexSet(members).set(v), need - 1, nc, avail)) return true;
        }
        return false;
    }
};

std::vector<Embedding> run_packer(const Graph& g, std::span<const int> requested,
                                  const VertexSet& allowed, std::size_t limit) {
    if (requested.empty()) throw std::invalid_argument("clique packing needs at least one size");
    for (int k : requested)
        if (k < 1) throw std::invalid_argument("clique sizes must be positive");

    std::vector<int> idx(requested.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return requested[a] > requested[b]; });
    std::vector<int> sizes(requested.size()), slot(requested.size()), demand(requested.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        sizes[i] = requested[idx[i]];
        slot[i] = idx[i];
    }
    int sum = 0;
    for (std::size_t i = idx.size(); i-- > 0;) demand[i] = sum += sizes[i];

    Packer packer{g, sizes, slot, demand, limit, {}, {}};
    packer.place(0, allowed & g.vertices());
#ifndef NDEBUG
    for (const auto& e : packer.results) assert(is_valid_embedding(g, requested, e));
#endif
    return std::move(packer.results);
}

}  // namespace

std::optional<VertexSet> find_clique(const Graph& g, int k, const VertexSet& allowed) {
    const int sizes[1] = {k};
    auto found = run_packer(g, sizes, allowed, 1);
    if (found.empty()) return std::nullopt;
    return found.front().parts.front();
}

std::optional<Embedding> find_disjoint_cliques(const Graph& g, std::span<const int> sizes,
                                               const VertexSet& allowed) {
    auto found = run_packer(g, sizes, allowed, 1);
    if (found.empty()) return std::nullopt;
    return std::move(found.front());
}

std::optional<Embedding> contains_pattern(const Graph& g, const CliquePattern& pattern) {
    if (pattern.order() > g.order()) return std::nullopt;
    return find_disjoint_cliques(g, pattern.sizes(), g.vertices());
}

std::vector<Embedding> enumerate_packings(const Graph& g, std::span<const int> sizes,
                                          const VertexSet& allowed, std::size_t limit) {
    if (limit < 1) throw std::invalid_argument("enumerate_packings: limit must be positive");
    return run_packer(g, sizes, allowed, limit);
}

}  // namespace satlab
