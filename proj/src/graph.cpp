#include "satlab/graph.hpp"

#include <stdexcept>

namespace satlab {

std::string to_string(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > VertexSet::kMaxVertices)
        throw std::invalid_argument("graph order out of range: " + std::to_string(n));
    adj_.resize(n);
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
    for (auto [i, j] : edges) {
        check_pair(i, j);
        if (!adj_[i].test(j)) {
            adj_[i].set(j);
            adj_[j].set(i);
            ++m_;
        }
    }
}

void Graph::check_pair(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw std::invalid_argument("vertex index out of range");
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
}

Graph Graph::with_edge(int i, int j) const {
    check_pair(i, j);
    Graph g = *this;
    if (!g.adj_[i].test(j)) {
        g.adj_[i].set(j);
        g.adj_[j].set(i);
        ++g.m_;
    }
    return g;
}

Graph Graph::without_edge(int i, int j) const {
    check_pair(i, j);
    Graph g = *this;
    if (g.adj_[i].test(j)) {
        g.adj_[i].reset(j);
        g.adj_[j].reset(i);
        --g.m_;
    }
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int i = 0; i < n_; ++i)
        for (int j : adj_[i] & VertexSet::above(i)) out.push_back({i, j});
    return out;
}

Graph empty(int n) {
    if (n < 1) throw std::invalid_argument("empty graph needs at least one vertex");
    return Graph(n);
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
    std::vector<std::pair<int, int>> es;
    es.reserve(std::size_t(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph(n, es);
}

Graph independent(int n) { return empty(n); }

Graph join(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    std::vector<std::pair<int, int>> es = g.edges();
    int off = g.order();
    for (auto [i, j] : h.edges()) es.push_back({i + off, j + off});
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < h.order(); ++j) es.push_back({i, j + off});
    return Graph(n, es);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    std::vector<std::pair<int, int>> es = g.edges();
    int off = g.order();
    for (auto [i, j] : h.edges()) es.push_back({i + off, j + off});
    return Graph(n, es);
}

Graph add_edge(const Graph& g, int i, int j) { return g.with_edge(i, j); }
Graph remove_edge(const Graph& g, int i, int j) { return g.without_edge(i, j); }

Graph pad(const Graph& g, int n) {
    if (n < g.order()) throw std::invalid_argument("pad: target order below current order");
    return Graph(n, g.edges());
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
    if (!VertexSet::full(g.order()).contains_all(s))
        throw std::invalid_argument("induced: set contains vertices outside the graph");
    InducedSubgraph out;
    std::vector<int> index(g.order(), -1);
    for (int v : s) {
        index[v] = int(out.origin.size());
        out.origin.push_back(v);
    }
    std::vector<std::pair<int, int>> es;
    for (int v : s)
        for (int u : g.neighbors(v) & s & VertexSet::above(v)) es.push_back({index[v], index[u]});
    out.graph = Graph(int(out.origin.size()), es);
    return out;
}

std::vector<std::pair<int, int>> non_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.has_edge(i, j)) out.push_back({i, j});
    return out;
}

Graph permute(const Graph& g, std::span<const int> perm) {
    int n = g.order();
    if (int(perm.size()) != n) throw std::invalid_argument("permute: wrong permutation length");
    std::vector<char> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("permute: not a bijection");
        seen[v] = 1;
    }
    std::vector<std::pair<int, int>> es;
    es.reserve(g.edge_count());
    for (auto [i, j] : g.edges()) es.push_back({perm[i], perm[j]});
    return Graph(n, es);
}

int edge_count_within(const Graph& g, const VertexSet& s) {
    int c = 0;
    for (int v : s) c += (g.neighbors(v) & s & VertexSet::above(v)).count();
    return c;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& region) {
    if (!VertexSet::full(g.order()).contains_all(region))
        throw std::invalid_argument("components: region contains vertices outside the graph");
    std::vector<VertexSet> out;
    VertexSet left = region;
    while (!left.empty()) {
        VertexSet comp;
        VertexSet frontier = VertexSet::single(left.first());
        while (!frontier.empty()) {
            comp = comp | frontier;
            VertexSet next;
            for (int v : frontier) next = next | (g.neighbors(v) & region);
            frontier = next - comp;
        }
        out.push_back(comp);
        left = left - comp;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

}  // namespace satlab
