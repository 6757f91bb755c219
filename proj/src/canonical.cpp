#include "satlab/canonical.hpp"

#include <cassert>
#include <map>
#include <numeric>

namespace satlab {
namespace {

// ordered partition; each cell kept in ascending vertex order
using Partition = std::vector<std::vector<int>>;

// Split every cell by the vector of neighbour counts into current cells until
// stable. Subcells are ordered by that signature, which depends only on the
// partition structure, so the refinement commutes with relabeling.
void refine(const Graph& g, Partition& part) {
    const int n = g.order();
    std::vector<int> cell_of(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t c = 0; c < part.size(); ++c)
            for (int v : part[c]) cell_of[v] = int(c);
        Partition next;
        next.reserve(part.size());
        for (auto& cell : part) {
            if (cell.size() == 1) {
                next.push_back(std::move(cell));
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : cell) {
                std::vector<int> sig(part.size(), 0);
                for (int u : g.neighbors(v)) ++sig[cell_of[u]];
                groups[sig].push_back(v);
            }
            if (groups.size() > 1) changed = true;
            for (auto& [sig, vs] : groups) next.push_back(std::move(vs));
        }
        part = std::move(next);
    }
}

struct Search {
    const Graph& g;
    const int n;
    std::vector<std::uint8_t> best;  // packed adjacency of the best leaf so far
    std::vector<int> best_order;
    std::vector<std::vector<int>> autos;  // discovered automorphisms
    std::vector<int> fixed;               // individualised vertices on the current path

    std::vector<std::uint8_t> pack(const std::vector<int>& order) const {
        std::vector<std::uint8_t> bits((std::size_t(n) * (n - 1) / 2 + 7) / 8, 0);
        std::size_t t = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++t)
                if (g.has_edge(order[i], order[j])) bits[t >> 3] |= std::uint8_t(0x80u >> (t & 7));
        return bits;
    }

    void leaf(const Partition& part) {
        std::vector<int> order;
        order.reserve(n);
        for (const auto& cell : part) order.push_back(cell[0]);
        auto bits = pack(order);
        if (best.empty() || bits < best) {
            best = std::move(bits);
            best_order = std::move(order);
        } else if (bits == best) {
            // two labelings give the same string: their composition is an
            // automorphism, keep it for pruning
            std::vector<int> a(n);
            for (int i = 0; i < n; ++i) a[best_order[i]] = order[i];
            autos.push_back(std::move(a));
        }
    }

    // Is v in the orbit of an already-tried branch vertex, under automorphisms
    // that fix every individualised vertex on the current path?
    bool seen_orbit(int v, const std::vector<int>& tried) const {
        if (tried.empty()) return false;
        std::vector<int> uf(n);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&uf](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (const auto& a : autos) {
            bool fixes = true;
            for (int w : fixed)
                if (a[w] != w) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int x = 0; x < n; ++x) {
                int rx = find(x), ry = find(a[x]);
                if (rx != ry) uf[rx] = ry;
            }
        }
        int rv = find(v);
        for (int u : tried)
            if (find(u) == rv) return true;
        return false;
    }

    void descend(Partition part) {
        refine(g, part);
        std::size_t target = part.size();
        for (std::size_t c = 0; c < part.size(); ++c)
            if (part[c].size() > 1) {
                target = c;
                break;
            }
        if (target == part.size()) {
            leaf(part);
            return;
        }
        std::vector<int> tried;
        for (int v : part[target]) {
            if (seen_orbit(v, tried)) continue;
            tried.push_back(v);
            Partition child;
            child.reserve(part.size() + 1);
            for (std::size_t c = 0; c < part.size(); ++c) {
                if (c != target) {
                    child.push_back(part[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                rest.reserve(part[c].size() - 1);
                for (int u : part[c])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            fixed.push_back(v);
            descend(std::move(child));
            fixed.pop_back();
        }
    }
};

}  // namespace

CanonicalResult canonicalize(const Graph& g) {
    const int n = g.order();
    CanonicalResult res;
    if (n == 0) {
        res.form.bytes = {0, 0};
        return res;
    }
    Search search{g, n, {}, {}, {}, {}};
    Partition root(1);
    root[0].resize(n);
    std::iota(root[0].begin(), root[0].end(), 0);
    search.descend(std::move(root));

    res.order = search.best_order;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[res.order[i]] = i;
    res.graph = permute(g, pos);
    res.form.bytes.reserve(2 + search.best.size());
    res.form.bytes.push_back(std::uint8_t(n >> 8));
    res.form.bytes.push_back(std::uint8_t(n & 0xff));
    res.form.bytes.insert(res.form.bytes.end(), search.best.begin(), search.best.end());
#ifndef NDEBUG
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    Search repack{res.graph, n, {}, {}, {}, {}};
    assert(search.best == repack.pack(id));
#endif
    return res;
}

CanonicalForm canonical_form(const Graph& g) { return canonicalize(g).form; }

Graph canonical_graph(const Graph& g) { return canonicalize(g).graph; }

}  // namespace satlab
