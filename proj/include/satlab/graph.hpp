#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#ifndef SATLAB_BITSET_WORDS
#define SATLAB_BITSET_WORDS 2
#endif

namespace satlab {

// Fixed-width set of vertex indices, one bit per vertex.
class VertexSet {
public:
    static constexpr int kWords = SATLAB_BITSET_WORDS;
    static_assert(kWords >= 2, "vertex sets need at least two 64-bit words");
    static constexpr int kMaxVertices = 64 * kWords;

    constexpr VertexSet() = default;

    static VertexSet single(int v) {
        VertexSet s;
        s.set(v);
        return s;
    }

    // {0, 1, ..., n-1}
    static VertexSet full(int n) {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w) {
            int take = n >= 64 ? 64 : n;
            s.words_[w] = take == 64 ? ~0ull : ((1ull << take) - 1);
            n -= take;
        }
        return s;
    }

    // all vertices with index strictly greater than v (v may be -1)
    static VertexSet above(int v) {
        VertexSet s;
        int cut = v + 1;
        for (int w = 0; w < kWords; ++w) {
            int lo = 64 * w;
            if (cut <= lo)
                s.words_[w] = ~0ull;
            else if (cut < lo + 64)
                s.words_[w] = ~0ull << (cut - lo);
        }
        return s;
    }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    VertexSet& set(int v) {
        words_[v >> 6] |= 1ull << (v & 63);
        return *this;
    }
    VertexSet& reset(int v) {
        words_[v >> 6] &= ~(1ull << (v & 63));
        return *this;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }
    // true when o is a subset of *this
    bool contains_all(const VertexSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (o.words_[w] & ~words_[w]) return false;
        return true;
    }

    int first() const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w]) return 64 * w + std::countr_zero(words_[w]);
        return -1;
    }
    // smallest element strictly greater than v, or -1
    int next(int v) const {
        int w = (v + 1) >> 6;
        if (w >= kWords) return -1;
        std::uint64_t cur = words_[w] & (~0ull << ((v + 1) & 63));
        while (true) {
            if (cur) return 64 * w + std::countr_zero(cur);
            if (++w >= kWords) return -1;
            cur = words_[w];
        }
    }

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        iterator& operator++() {
            v_ = s_->next(v_);
            return *this;
        }
        bool operator==(const iterator& o) const { return v_ == o.v_; }

    private:
        const VertexSet* s_;
        int v_;
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) {
        for (int w = 0; w < kWords; ++w) a.words_[w] &= b.words_[w];
        return a;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) {
        for (int w = 0; w < kWords; ++w) a.words_[w] |= b.words_[w];
        return a;
    }
    // set difference
    friend VertexSet operator-(VertexSet a, const VertexSet& b) {
        for (int w = 0; w < kWords; ++w) a.words_[w] &= ~b.words_[w];
        return a;
    }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;  // arbitrary total order for containers

private:
    std::array<std::uint64_t, kWords> words_{};
};

// "{0,2,5}"
std::string to_string(const VertexSet& s);

// Undirected simple graph, immutable after construction. Copies are cheap
// (order is bounded by VertexSet::kMaxVertices).
class Graph {
public:
    Graph() = default;  // order 0
    explicit Graph(int n);
    Graph(int n, std::span<const std::pair<int, int>> edges);

    int order() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int i, int j) const { return adj_[i].test(j); }
    const VertexSet& neighbors(int i) const { return adj_[i]; }
    int degree(int i) const { return adj_[i].count(); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    Graph with_edge(int i, int j) const;
    Graph without_edge(int i, int j) const;

    std::vector<std::pair<int, int>> edges() const;  // ascending (i, j), i < j

    bool operator==(const Graph&) const = default;

private:
    void check_pair(int i, int j) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

Graph empty(int n);  // n >= 1
Graph complete(int n);
Graph independent(int n);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph add_edge(const Graph& g, int i, int j);
Graph remove_edge(const Graph& g, int i, int j);

// g extended with isolated vertices up to order n
Graph pad(const Graph& g, int n);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> origin;  // origin[new index] = index in the host graph
};
InducedSubgraph induced(const Graph& g, const VertexSet& s);

// all non-adjacent pairs (i, j), i < j, in ascending order
std::vector<std::pair<int, int>> non_edges(const Graph& g);

// relabel: vertex v becomes perm[v]; perm must be a bijection on [0, order)
Graph permute(const Graph& g, std::span<const int> perm);

int edge_count_within(const Graph& g, const VertexSet& s);

// connected components of g[region], each reported as a vertex set, ordered
// by smallest member
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& region);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace satlab
