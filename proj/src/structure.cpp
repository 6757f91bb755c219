#include "satlab/structure.hpp"

#include <stdexcept>

#include "satlab/saturation.hpp"

namespace satlab {

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::pass: return "PASS";
        case Outcome::fail: return "FAIL";
        case Outcome::not_applicable: return "NOT_APPLICABLE";
    }
    return "?";
}

namespace {

Verdict fail(std::string detail) { return {Outcome::fail, false, std::move(detail)}; }
Verdict not_applicable(std::string why) {
    return {Outcome::not_applicable, false, std::move(why)};
}

std::string pair_str(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

int least_min_degree_vertex(const Graph& g) {
    int best = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) < g.degree(best)) best = v;
    return best;
}

bool internal_to_block(const Embedding& packing, int i, int j) {
    for (const auto& part : packing.parts)
        if (part.test(i) && part.test(j)) return true;
    return false;
}

}  // namespace

bool ResidueReport::all_pass() const {
    for (const auto& [name, v] : verdicts)
        if (v.failed()) return false;
    return true;
}

Verdict check_outside_empty(const ResidueReport& r) {
    VertexSet covered = r.core | r.packing.support();
    for (auto [i, j] : r.graph.edges())
        if (!covered.test(i) && !covered.test(j))
            return fail("edge " + pair_str(i, j) + " avoids both the core and the packing");
    return {};
}

Verdict check_extra_edge_count(const ResidueReport& r) {
    std::size_t want = std::size_t(r.pattern.t - 1) * r.pattern.q;
    if (r.extra_edges.size() == want) return {};
    return fail(std::to_string(r.extra_edges.size()) +
                " edges outside the core are not internal to the packing, expected " +
                std::to_string(want));
}

Verdict check_component_balance(const ResidueReport& r) {
    VertexSet fv = r.packing.support();
    for (const auto& comp : r.components) {
        int edges = edge_count_within(r.stripped, comp);
        int inside = (comp & fv).count();
        if (edges != inside)
            return fail("component " + to_string(comp) + " spans " + std::to_string(edges) +
                        " edges but holds " + std::to_string(inside) + " packing vertices");
    }
    return {};
}

Verdict check_tree_anchor(const ResidueReport& r) {
    for (const auto& comp : r.components) {
        bool tree = edge_count_within(r.stripped, comp) == comp.count() - 1;
        if (tree && !comp.intersects(r.fringe))
            return fail("tree component " + to_string(comp) + " contains no fringe vertex");
    }
    return {};
}

Verdict check_min_degree(const Graph& g, const CliquePattern& pattern) {
    if (g.order() < pattern.order()) return not_applicable("order below the pattern order");
    if (!certify_saturated(g, pattern).saturated) return not_applicable("graph is not saturated");
    if (g.edge_count() != sat_formula(g.order(), pattern))
        return not_applicable("edge count differs from the formula value");
    if (g.order() <= theorem_order_bound(pattern))
        return not_applicable("order not above the theorem bound");
    int v = least_min_degree_vertex(g);
    if (g.degree(v) == pattern.p - 2) return {};
    return fail("minimum degree is " + std::to_string(g.degree(v)) + " at vertex " +
                std::to_string(v) + ", expected " + std::to_string(pattern.p - 2));
}

Verdict check_dominating_closure(const Graph& g, const CliquePattern& pattern) {
    if (g.order() < 1) return not_applicable("graph has no vertices");
    if (!certify_saturated(g, pattern).saturated) return not_applicable("graph is not saturated");
    int v = least_min_degree_vertex(g);
    VertexSet s = g.neighbors(v);
    for (int x : s)
        for (int y : s & VertexSet::above(x))
            if (!g.has_edge(x, y))
                return fail("core vertices " + std::to_string(x) + " and " + std::to_string(y) +
                            " are not adjacent");
    for (int u : g.vertices() - s - VertexSet::single(v))
        if (!g.neighbors(u).contains_all(s))
            return fail("vertex " + std::to_string(u) + " does not dominate the core " +
                        to_string(s));
    return {};
}

Verdict check_confinement(const Graph& g, const CliquePattern& pattern, int u, std::size_t cap) {
    if (g.order() < 1) throw std::invalid_argument("confinement: graph has no vertices");
    if (u < 0 || u >= g.order()) throw std::invalid_argument("confinement: vertex out of range");
    int v = least_min_degree_vertex(g);
    VertexSet s = g.neighbors(v);
    if (u == v || s.test(u))
        throw std::invalid_argument(
            "confinement: vertex must lie outside the closed neighbourhood of the base vertex");

    VertexSet target = g.neighbors(u) - s;
    if (pattern.t == 1) {
        // the only packing is empty, so the neighbourhood must sit in the core
        if (target.empty()) return {};
        return fail("neighbours " + to_string(target) + " of " + std::to_string(u) +
                    " escape the core, but the packing is empty");
    }
    std::vector<int> sizes(std::size_t(pattern.t - 1), pattern.q);
    VertexSet allowed = g.vertices() - s - VertexSet::single(u) - VertexSet::single(v);
    auto packs = enumerate_packings(g, sizes, allowed, cap + 1);
    if (packs.empty())
        return fail("no q-clique packing avoids the core and vertex " + std::to_string(u) +
                    ", so no pattern can use the missing edge to the base vertex");
    Verdict out;
    if (packs.size() > cap) {
        out.partial = true;
        packs.resize(cap);
    }
    for (const auto& f : packs)
        if (!f.support().contains_all(target)) {
            out.outcome = Outcome::fail;
            out.detail = "packing with support " + to_string(f.support()) +
                         " misses neighbours " + to_string(target - f.support()) + " of vertex " +
                         std::to_string(u);
            break;
        }
    return out;
}

bool contraction_bound_holds(const Graph& h, const VertexSet& x) {
    if (!is_connected(h)) throw std::invalid_argument("contraction bound needs a connected graph");
    if (!h.vertices().contains_all(x))
        throw std::invalid_argument("contraction bound: set contains vertices outside the graph");
    return h.edge_count() - edge_count_within(h, x) >= h.order() - x.count();
}

std::map<std::string, Verdict> check_fringe_structure(const ResidueReport& r) {
    std::map<std::string, Verdict> out;
    const Graph& g = r.graph;
    const auto& parts = r.packing.parts;
    const VertexSet fv = r.packing.support();

    {  // at most one fringe vertex per component
        Verdict v;
        for (const auto& comp : r.components)
            if (int k = (comp & r.fringe).count(); k > 1) {
                v = fail("component " + to_string(comp) + " holds " + std::to_string(k) +
                         " fringe vertices");
                break;
            }
        out["component_fringe_bound"] = v;
    }

    {  // contacts of one fringe vertex in two different blocks are non-adjacent
        // (vacuously true with fewer than two blocks)
        Verdict v;
        for (int rv : r.fringe) {
            if (v.failed()) break;
            for (std::size_t i = 0; i + 1 < parts.size() && !v.failed(); ++i)
                for (std::size_t j = i + 1; j < parts.size() && !v.failed(); ++j)
                    for (int x : parts[i] & g.neighbors(rv)) {
                        if (v.failed()) break;
                        for (int y : parts[j] & g.neighbors(rv))
                            if (g.has_edge(x, y)) {
                                v = fail("contacts " + std::to_string(x) + " and " +
                                         std::to_string(y) + " of fringe vertex " +
                                         std::to_string(rv) + " are adjacent across blocks");
                                break;
                            }
                    }
        }
        out["cross_contact_nonedge"] = v;
    }

    {  // every q-clique inside the packing support stays within two blocks
        Verdict v;
        if (r.pattern.q < 4) {
            v = not_applicable("stated for q >= 4 only");
        } else {
            const std::vector<int> one_q{r.pattern.q};
            auto cliques = enumerate_packings(g, one_q, fv, std::size_t(1) << 20);
            for (const auto& c : cliques) {
                const VertexSet& x = c.parts.front();
                bool confined = false;
                for (std::size_t i = 0; i < parts.size() && !confined; ++i)
                    for (std::size_t j = i; j < parts.size() && !confined; ++j)
                        confined = (parts[i] | parts[j]).contains_all(x);
                if (!confined) {
                    v = fail("clique " + to_string(x) + " spans more than two blocks");
                    break;
                }
            }
        }
        out["clique_block_span"] = v;
    }

    {  // two contacts in a block force the whole block
        Verdict v;
        for (int rv : r.fringe) {
            if (v.failed()) break;
            for (const auto& part : parts)
                if ((part & g.neighbors(rv)).count() >= 2 && !g.neighbors(rv).contains_all(part)) {
                    v = fail("fringe vertex " + std::to_string(rv) + " sees two of block " +
                             to_string(part) + " but not all of it");
                    break;
                }
        }
        out["block_closure"] = v;
    }

    {  // no fringe vertex touches a block in exactly one vertex
        Verdict v;
        for (int rv : r.fringe) {
            if (v.failed()) break;
            for (const auto& part : parts)
                if ((part & g.neighbors(rv)).count() == 1) {
                    v = fail("fringe vertex " + std::to_string(rv) + " touches block " +
                             to_string(part) + " in exactly one vertex");
                    break;
                }
        }
        out["no_single_contact"] = v;
    }

    {  // the packing neighbourhood of a fringe vertex is exactly one block
        Verdict v;
        for (int rv : r.fringe) {
            VertexSet nf = g.neighbors(rv) & fv;
            bool exact = false;
            for (const auto& part : parts)
                if (nf == part) {
                    exact = true;
                    break;
                }
            if (!exact) {
                v = fail("fringe vertex " + std::to_string(rv) + " has packing neighbourhood " +
                         to_string(nf) + ", not a whole block");
                break;
            }
        }
        out["full_block_neighborhood"] = v;
    }

    return out;
}

ResidueReport residue(const Graph& g, const CliquePattern& pattern,
                      std::optional<Embedding> packing, std::size_t cap, int workers) {
    if (g.order() < 1) throw std::invalid_argument("residue: graph has no vertices");
    auto cert = certify_saturated(g, pattern, workers);
    if (!cert.saturated) {
        std::string why = "residue: graph is not saturated (";
        if (!cert.free)
            why += "it contains the pattern on " + to_string(cert.pattern_found->support());
        else
            why += "adding " + pair_str(cert.open_pair->first, cert.open_pair->second) +
                   " creates no pattern";
        throw std::invalid_argument(why + ")");
    }

    ResidueReport r(g, pattern);
    r.below_bound = g.order() <= theorem_order_bound(pattern);
    r.base_vertex = least_min_degree_vertex(g);
    r.core = g.neighbors(r.base_vertex);

    std::vector<int> sizes(std::size_t(pattern.t - 1), pattern.q);
    if (packing) {
        if (!is_valid_embedding(g, sizes, *packing) || packing->support().intersects(r.core))
            throw std::invalid_argument(
                "residue: supplied packing is not a clique packing avoiding the core");
        r.packing = std::move(*packing);
    } else if (pattern.t == 1) {
        r.packing = Embedding{};
    } else {
        auto found = find_disjoint_cliques(g, sizes, g.vertices() - r.core);
        if (!found)
            throw std::runtime_error(
                "residue: no q-clique packing avoids the core; the graph cannot be a minimum "
                "saturated graph for the pattern");
        r.packing = std::move(*found);
    }

    const VertexSet fv = r.packing.support();
    for (int w : g.vertices() - r.core - fv)
        if (g.neighbors(w).intersects(fv)) r.fringe.set(w);

    std::vector<std::pair<int, int>> stripped_edges;
    const VertexSet region = r.fringe | fv;
    for (auto [i, j] : g.edges()) {
        if (r.core.test(i) || r.core.test(j) || internal_to_block(r.packing, i, j)) continue;
        r.extra_edges.push_back({i, j});
        if (region.test(i) && region.test(j)) stripped_edges.push_back({i, j});
    }
    r.stripped = Graph(g.order(), stripped_edges);
    r.components = components_within(r.stripped, region);

    r.verdicts["outside_empty"] = check_outside_empty(r);
    r.verdicts["extra_edge_count"] = check_extra_edge_count(r);
    r.verdicts["component_balance"] = check_component_balance(r);
    r.verdicts["tree_anchor"] = check_tree_anchor(r);
    r.verdicts["min_degree"] = check_min_degree(g, pattern);
    r.verdicts["dominating_closure"] = check_dominating_closure(g, pattern);

    Verdict conf;
    VertexSet outside = g.vertices() - r.core - VertexSet::single(r.base_vertex);
    if (outside.empty()) {
        conf = not_applicable("every vertex lies in the closed neighbourhood of the base vertex");
    } else {
        for (int u : outside) {
            Verdict one = check_confinement(g, pattern, u, cap);
            conf.partial = conf.partial || one.partial;
            if (one.failed() && !conf.failed()) {
                conf.outcome = Outcome::fail;
                conf.detail = "u=" + std::to_string(u) + ": " + one.detail;
            }
        }
    }
    r.verdicts["confinement"] = conf;

    for (auto& [name, verdict] : check_fringe_structure(r)) r.verdicts[name] = verdict;
    return r;
}

}  // namespace satlab
