#include "satlab/report_io.hpp"

#include <sstream>

#include "satlab/graph_io.hpp"

namespace satlab {
namespace {

const char* yesno(bool b) { return b ? "true" : "false"; }

void pattern_lines(std::ostream& out, const CliquePattern& pat) {
    out << "p: " << pat.p << '\n' << "q: " << pat.q << '\n' << "t: " << pat.t << '\n';
}

std::string verdict_line(const Verdict& v) {
    std::string line = to_string(v.outcome);
    if (v.partial) line += " [partial]";
    if (!v.detail.empty()) line += " (" + v.detail + ")";
    return line;
}

nlohmann::json set_json(const VertexSet& s) {
    auto arr = nlohmann::json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

nlohmann::json verdict_json(const Verdict& v) {
    return {{"verdict", to_string(v.outcome)}, {"partial", v.partial}, {"detail", v.detail}};
}

}  // namespace

std::string to_text(const SearchReport& rep) {
    std::ostringstream out;
    out << "n: " << rep.n << '\n';
    pattern_lines(out, rep.pattern);
    out << "below_bound: " << yesno(rep.below_bound) << '\n';
    out << "budget: " << rep.budget << '\n';
    out << "max_edges: " << rep.max_edges << '\n';
    for (const auto& tally : rep.tallies)
        out << "level_" << tally.edges << ": examined=" << tally.examined
            << " saturated=" << tally.saturated << '\n';
    out << "frontier: " << rep.frontier << '\n';
    out << "guard_hit: " << yesno(rep.guard_hit) << '\n';
    if (rep.sat_value)
        out << "sat: " << *rep.sat_value << '\n';
    else
        out << "sat: none\n";
    out << "extremal_count: " << rep.extremal_graphs.size() << '\n';
    for (std::size_t i = 0; i < rep.extremal_graphs.size(); ++i)
        out << "extremal_" << i + 1 << ": " << to_graph6(rep.extremal_graphs[i]) << '\n';
    out << "unique: " << yesno(rep.unique_extremal) << '\n';
    out << "certified: " << rep.certified << '\n';
    out << "enumeration_nodes: " << rep.enumeration_nodes << '\n';
    return out.str();
}

std::string to_text(const ResidueReport& rep) {
    std::ostringstream out;
    out << "n: " << rep.graph.order() << '\n';
    pattern_lines(out, rep.pattern);
    out << "below_bound: " << yesno(rep.below_bound) << '\n';
    out << "base_vertex: " << rep.base_vertex << '\n';
    out << "core: " << to_string(rep.core) << '\n';
    out << "packing_count: " << rep.packing.parts.size() << '\n';
    for (std::size_t i = 0; i < rep.packing.parts.size(); ++i)
        out << "packing_" << i + 1 << ": " << to_string(rep.packing.parts[i]) << '\n';
    out << "fringe: " << to_string(rep.fringe) << '\n';
    out << "extra_edge_total: " << rep.extra_edges.size() << '\n';
    out << "extra_edges:";
    for (auto [i, j] : rep.extra_edges) out << " (" << i << ',' << j << ')';
    out << '\n';
    out << "component_count: " << rep.components.size() << '\n';
    for (std::size_t i = 0; i < rep.components.size(); ++i)
        out << "component_" << i + 1 << ": " << to_string(rep.components[i]) << '\n';
    for (const auto& [name, verdict] : rep.verdicts)
        out << "check_" << name << ": " << verdict_line(verdict) << '\n';
    out << "all_checks: " << (rep.all_pass() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

nlohmann::json to_json(const SearchReport& rep) {
    nlohmann::json doc;
    doc["n"] = rep.n;
    doc["p"] = rep.pattern.p;
    doc["q"] = rep.pattern.q;
    doc["t"] = rep.pattern.t;
    doc["below_bound"] = rep.below_bound;
    doc["budget"] = rep.budget;
    doc["max_edges"] = rep.max_edges;
    auto tallies = nlohmann::json::array();
    for (const auto& tally : rep.tallies)
        tallies.push_back({{"edges", tally.edges},
                           {"examined", tally.examined},
                           {"saturated", tally.saturated}});
    doc["levels"] = tallies;
    doc["frontier"] = rep.frontier;
    doc["guard_hit"] = rep.guard_hit;
    if (rep.sat_value)
        doc["sat"] = *rep.sat_value;
    else
        doc["sat"] = nullptr;
    auto extremal = nlohmann::json::array();
    for (const auto& g : rep.extremal_graphs) extremal.push_back(to_graph6(g));
    doc["extremal"] = extremal;
    doc["unique"] = rep.unique_extremal;
    doc["certified"] = rep.certified;
    doc["enumeration_nodes"] = rep.enumeration_nodes;
    return doc;
}

nlohmann::json to_json(const ResidueReport& rep) {
    nlohmann::json doc;
    doc["n"] = rep.graph.order();
    doc["p"] = rep.pattern.p;
    doc["q"] = rep.pattern.q;
    doc["t"] = rep.pattern.t;
    doc["below_bound"] = rep.below_bound;
    doc["base_vertex"] = rep.base_vertex;
    doc["core"] = set_json(rep.core);
    auto packing = nlohmann::json::array();
    for (const auto& part : rep.packing.parts) packing.push_back(set_json(part));
    doc["packing"] = packing;
    doc["fringe"] = set_json(rep.fringe);
    auto extra = nlohmann::json::array();
    for (auto [i, j] : rep.extra_edges) extra.push_back({i, j});
    doc["extra_edges"] = extra;
    auto comps = nlohmann::json::array();
    for (const auto& comp : rep.components) comps.push_back(set_json(comp));
    doc["components"] = comps;
    nlohmann::json checks;
    for (const auto& [name, verdict] : rep.verdicts) checks[name] = verdict_json(verdict);
    doc["checks"] = checks;
    doc["all_checks"] = rep.all_pass();
    return doc;
}

}  // namespace satlab
