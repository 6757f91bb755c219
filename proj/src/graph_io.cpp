#include "satlab/graph_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace satlab {

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 short form is limited to 62 vertices");
    std::string out;
    out.push_back(char(63 + n));
    int bits = 0, val = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            val = (val << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(char(63 + val));
                bits = 0;
                val = 0;
            }
        }
    if (bits) out.push_back(char(63 + (val << (6 - bits))));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    for (unsigned char c : text)
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside printable range");
    int n = int(text[0]) - 63;
    if (n > 62) throw std::invalid_argument("graph6: header beyond short form");
    std::size_t need = n < 2 ? 0 : std::size_t(n) * (n - 1) / 2;
    std::size_t body = (need + 5) / 6;
    if (text.size() != 1 + body)
        throw std::invalid_argument(text.size() > 1 + body ? "graph6: trailing bytes"
                                                           : "graph6: truncated input");
    std::vector<std::pair<int, int>> es;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((int(text[1 + bit / 6]) - 63) >> (5 - bit % 6) & 1) es.push_back({i, j});
    for (std::size_t b = need; b < 6 * body; ++b)
        if ((int(text[1 + b / 6]) - 63) >> (5 - b % 6) & 1)
            throw std::invalid_argument("graph6: nonzero padding bits");
    return Graph(n, es);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [i, j] : g.edges()) out << i << ' ' << j << '\n';
    return out.str();
}

Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing \"n m\" header");
    if (n < 0 || n > VertexSet::kMaxVertices)
        throw std::invalid_argument("edge list: order out of range");
    if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument("edge list: bad edge count");
    std::vector<std::pair<int, int>> es;
    std::set<std::pair<int, int>> seen;
    for (long long k = 0; k < m; ++k) {
        long long i, j;
        if (!(in >> i >> j)) throw std::invalid_argument("edge list: fewer edges than declared");
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("edge list: vertex index out of range");
        if (i == j) throw std::invalid_argument("edge list: self-loop");
        int lo = int(std::min(i, j)), hi = int(std::max(i, j));
        if (!seen.insert({lo, hi}).second)
            throw std::invalid_argument("edge list: duplicate edge");
        es.push_back({lo, hi});
    }
    std::string rest;
    if (in >> rest) throw std::invalid_argument("edge list: trailing tokens");
    return Graph(int(n), es);
}

}  // namespace satlab
