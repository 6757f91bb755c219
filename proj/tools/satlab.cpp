#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "satlab/graph.hpp"
#include "satlab/graph_io.hpp"
#include "satlab/pattern.hpp"
#include "satlab/report_io.hpp"
#include "satlab/saturation.hpp"
#include "satlab/search.hpp"
#include "satlab/structure.hpp"

namespace {

using nlohmann::json;

// exit codes: 0 success/confirmed, 1 property fails, 2 usage error, 3 internal limit
struct limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int n = -1;
    int p = 0, q = 0, t = 0;
    std::string input;
    std::string output;
    std::string format = "graph6";
    std::size_t cap = 10000;
    std::optional<int> budget;
    int max_edges = 12;
    int workers = 1;
    int support = 0;
    int m = 0;
    bool witness = false;
    bool emit_json = false;
    bool allow_below_bound = false;
};

satlab::CliquePattern pattern_of(const RunConfig& cfg) {
    return satlab::CliquePattern(cfg.p, cfg.q, cfg.t);  // validates 2 <= p <= q, t >= 1
}

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

satlab::Graph read_graph(const RunConfig& cfg) {
    std::string text = slurp(cfg.input);
    if (cfg.format == "edgelist") return satlab::from_edge_list(text);
    auto eol = text.find_first_of("\r\n");
    return satlab::from_graph6(eol == std::string::npos ? text : text.substr(0, eol));
}

std::string render_graph(const satlab::Graph& g, const std::string& format) {
    return format == "edgelist" ? satlab::to_edge_list(g) : satlab::to_graph6(g) + "\n";
}

void write_output(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << text;
}

// graph order doubles as n for commands reading a graph
void check_order(const RunConfig& cfg, const satlab::Graph& g,
                 const satlab::CliquePattern& pat) {
    if (cfg.n >= 0 && cfg.n != g.order())
        throw std::invalid_argument("declared n (" + std::to_string(cfg.n) +
                                    ") differs from the graph order (" +
                                    std::to_string(g.order()) + ")");
    if (g.order() < pat.order())
        throw std::invalid_argument("graph order " + std::to_string(g.order()) +
                                    " is below the pattern order " + std::to_string(pat.order()));
}

void witness_lines(std::ostream& out, const satlab::SaturationVerdict& v) {
    if (v.pattern_found) {
        out << "witness_type: pattern\nwitness:";
        for (const auto& part : v.pattern_found->parts) out << ' ' << satlab::to_string(part);
        out << '\n';
    } else if (v.open_pair) {
        out << "witness_type: non_edge\n"
            << "witness: (" << v.open_pair->first << ',' << v.open_pair->second << ")\n";
    } else {
        out << "witness_type: none\n";
    }
}

json witness_json(const satlab::SaturationVerdict& v) {
    if (v.pattern_found) {
        auto parts = json::array();
        for (const auto& part : v.pattern_found->parts) {
            auto arr = json::array();
            for (int x : part) arr.push_back(x);
            parts.push_back(arr);
        }
        return {{"type", "pattern"}, {"parts", parts}};
    }
    if (v.open_pair) return {{"type", "non_edge"}, {"pair", {v.open_pair->first, v.open_pair->second}}};
    return {{"type", "none"}};
}

void emit_json_doc(json doc, const char* command) {
    doc["format"] = 1;
    doc["command"] = command;
    std::cout << doc.dump(2) << '\n';
}

int cmd_construct(const RunConfig& cfg) {
    auto pat = pattern_of(cfg);
    if (cfg.n < pat.order())
        throw std::invalid_argument("n (" + std::to_string(cfg.n) +
                                    ") is below the pattern order " + std::to_string(pat.order()));
    satlab::Graph g = satlab::build_extremal(cfg.n, pat);
    std::string text = render_graph(g, cfg.format);
    long long formula = satlab::sat_formula(g.order(), pat);

    if (!cfg.output.empty()) write_output(cfg.output, text);
    if (cfg.emit_json) {
        json doc{{"n", g.order()},
                 {"p", cfg.p},
                 {"q", cfg.q},
                 {"t", cfg.t},
                 {"edges", g.edge_count()},
                 {"sat_formula", formula},
                 {"graph", text}};
        emit_json_doc(doc, "construct");
        return 0;
    }
    if (cfg.output.empty()) std::cout << text;
    std::cout << "n=" << g.order() << " edges=" << g.edge_count() << " sat_formula=" << formula
              << '\n';
    return 0;
}

int cmd_check(const RunConfig& cfg) {
    auto pat = pattern_of(cfg);
    satlab::Graph g = read_graph(cfg);
    check_order(cfg, g, pat);
    auto verdict = satlab::certify_saturated(g, pat, cfg.workers);

    if (cfg.emit_json) {
        json doc{{"n", g.order()}, {"p", cfg.p},         {"q", cfg.q},
                 {"t", cfg.t},     {"free", verdict.free}, {"saturated", verdict.saturated}};
        if (cfg.witness) doc["witness"] = witness_json(verdict);
        emit_json_doc(doc, "check");
    } else {
        std::cout << "format: 1\ncommand: check\n"
                  << "n: " << g.order() << '\n'
                  << "p: " << cfg.p << '\n'
                  << "q: " << cfg.q << '\n'
                  << "t: " << cfg.t << '\n'
                  << "free: " << (verdict.free ? "true" : "false") << '\n'
                  << "saturated: " << (verdict.saturated ? "true" : "false") << '\n';
        if (cfg.witness) witness_lines(std::cout, verdict);
    }
    return verdict.saturated ? 0 : 1;
}

int cmd_satnum(const RunConfig& cfg) {
    auto pat = pattern_of(cfg);
    satlab::SearchOptions opts{cfg.budget, cfg.max_edges, cfg.workers, false};
    auto rep = satlab::compute_sat(cfg.n, pat, opts);
    std::cerr << "time: " << rep.seconds << "s\n";
    if (cfg.emit_json)
        emit_json_doc(satlab::to_json(rep), "satnum");
    else
        std::cout << "format: 1\ncommand: satnum\n" << satlab::to_text(rep);
    return rep.sat_value ? 0 : 3;
}

int cmd_enumerate(const RunConfig& cfg) {
    if (cfg.m > cfg.max_edges)
        throw limit_error("enumerate: m=" + std::to_string(cfg.m) +
                          " exceeds the edge guard (max_edges=" + std::to_string(cfg.max_edges) +
                          "); raise --max-edges to override");
    bool filter = cfg.p != 0 || cfg.q != 0 || cfg.t != 0;
    std::optional<satlab::CliquePattern> pat;
    if (filter) {
        pat = pattern_of(cfg);
        if (cfg.n < 0)
            throw std::invalid_argument("enumerate: saturation filter needs --n");
        if (cfg.n < cfg.support)
            throw std::invalid_argument("enumerate: --n must be at least the support bound");
    }
    auto classes = satlab::enumerate_graphs(cfg.support, cfg.m);
    std::vector<satlab::Graph> out;
    for (const auto& g : classes) {
        if (!filter) {
            out.push_back(g);
            continue;
        }
        satlab::Graph padded = satlab::pad(g, cfg.n);
        if (satlab::certify_saturated(padded, *pat, cfg.workers).saturated)
            out.push_back(std::move(padded));
    }
    if (cfg.emit_json) {
        auto arr = json::array();
        for (const auto& g : out) arr.push_back(satlab::to_graph6(g));
        json doc{{"support", cfg.support}, {"m", cfg.m}, {"count", out.size()}, {"classes", arr}};
        if (filter) {
            doc["n"] = cfg.n;
            doc["p"] = cfg.p;
            doc["q"] = cfg.q;
            doc["t"] = cfg.t;
        }
        emit_json_doc(doc, "enumerate");
    } else {
        for (const auto& g : out) std::cout << satlab::to_graph6(g) << '\n';
        std::cerr << "count: " << out.size() << '\n';
    }
    return 0;
}

int cmd_analyze(const RunConfig& cfg) {
    auto pat = pattern_of(cfg);
    satlab::Graph g = read_graph(cfg);
    check_order(cfg, g, pat);
    auto verdict = satlab::certify_saturated(g, pat, cfg.workers);
    if (!verdict.saturated) {
        if (cfg.emit_json) {
            json doc{{"n", g.order()},       {"p", cfg.p}, {"q", cfg.q}, {"t", cfg.t},
                     {"saturated", false},   {"witness", witness_json(verdict)}};
            emit_json_doc(doc, "analyze");
        } else {
            std::cout << "format: 1\ncommand: analyze\n"
                      << "saturated: false\n";
            witness_lines(std::cout, verdict);
        }
        return 1;
    }
    auto rep = satlab::residue(g, pat, std::nullopt, cfg.cap, cfg.workers);
    if (cfg.emit_json) {
        json doc = satlab::to_json(rep);
        doc["saturated"] = true;
        emit_json_doc(doc, "analyze");
    } else {
        std::cout << "format: 1\ncommand: analyze\nsaturated: true\n" << satlab::to_text(rep);
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
    auto pat = pattern_of(cfg);
    satlab::SearchOptions opts{cfg.budget, cfg.max_edges, cfg.workers, cfg.allow_below_bound};
    auto [confirmed, rep] = satlab::verify_theorem(cfg.n, pat, opts);
    std::cerr << "time: " << rep.seconds << "s\n";
    if (cfg.emit_json) {
        json doc = satlab::to_json(rep);
        doc["confirmed"] = confirmed;
        emit_json_doc(doc, "verify-theorem");
    } else {
        std::cout << (confirmed ? "THEOREM CONFIRMED\n" : "THEOREM NOT CONFIRMED\n")
                  << "format: 1\ncommand: verify-theorem\n"
                  << satlab::to_text(rep);
    }
    return confirmed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum saturated graphs for unions of cliques"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_pattern = [&cfg](CLI::App* cmd, bool required) {
        auto* p = cmd->add_option("-p,--p", cfg.p, "size of the leading clique");
        auto* q = cmd->add_option("-q,--q", cfg.q, "size of the repeated cliques");
        auto* t = cmd->add_option("-t,--t", cfg.t, "total number of cliques");
        if (required) {
            p->required();
            q->required();
            t->required();
        }
    };
    auto add_workers = [&cfg](CLI::App* cmd) {
        cmd->add_option("--workers", cfg.workers, "certification threads")
            ->check(CLI::PositiveNumber);
    };
    auto add_json = [&cfg](CLI::App* cmd) {
        cmd->add_flag("--json", cfg.emit_json, "emit one JSON document");
    };
    auto add_format = [&cfg](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "graph text format")
            ->check(CLI::IsMember({"graph6", "edgelist"}));
    };
    auto add_input = [&cfg](CLI::App* cmd) {
        cmd->add_option("-i,--input", cfg.input, "graph file, or - for stdin")->required();
    };
    auto add_search = [&cfg](CLI::App* cmd) {
        cmd->add_option("--budget", cfg.budget, "edge budget (default: formula value)");
        cmd->add_option("--max-edges", cfg.max_edges, "hard guard on enumeration depth");
    };

    CLI::App* construct = app.add_subcommand("construct", "emit the reference construction");
    construct->add_option("-n,--n", cfg.n, "graph order")->required();
    add_pattern(construct, true);
    add_format(construct);
    construct->add_option("-o,--output", cfg.output, "write the graph here instead of stdout");
    add_json(construct);

    CLI::App* check = app.add_subcommand("check", "certify saturation of a graph");
    add_input(check);
    add_pattern(check, true);
    check->add_option("-n,--n", cfg.n, "expected order (checked against the input)");
    add_format(check);
    check->add_flag("--witness", cfg.witness, "print the failing witness");
    add_workers(check);
    add_json(check);

    CLI::App* satnum = app.add_subcommand("satnum", "compute the saturation number from scratch");
    satnum->add_option("-n,--n", cfg.n, "graph order")->required();
    add_pattern(satnum, true);
    add_search(satnum);
    add_workers(satnum);
    add_json(satnum);

    CLI::App* enumerate = app.add_subcommand("enumerate", "list m-edge isomorphism classes");
    enumerate->add_option("--support", cfg.support, "max support vertices")->required();
    enumerate->add_option("-m,--m,--edges", cfg.m, "edge count")->required();
    enumerate->add_option("--max-edges", cfg.max_edges, "hard guard on enumeration depth");
    enumerate->add_option("-n,--n", cfg.n, "pad to this order for the saturation filter");
    add_pattern(enumerate, false);
    add_workers(enumerate);
    add_json(enumerate);

    CLI::App* analyze = app.add_subcommand("analyze", "structural audit of a saturated graph");
    add_input(analyze);
    add_pattern(analyze, true);
    analyze->add_option("-n,--n", cfg.n, "expected order (checked against the input)");
    add_format(analyze);
    analyze->add_option("--cap", cfg.cap, "packing enumeration cap per vertex");
    add_workers(analyze);
    add_json(analyze);

    CLI::App* verify = app.add_subcommand("verify-theorem", "search and compare to the theorem");
    verify->add_option("-n,--n", cfg.n, "graph order")->required();
    add_pattern(verify, true);
    add_search(verify);
    verify->add_flag("--allow-below-bound", cfg.allow_below_bound,
                     "run even when n is at or below the theorem bound");
    add_workers(verify);
    add_json(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(construct)) return cmd_construct(cfg);
        if (app.got_subcommand(check)) return cmd_check(cfg);
        if (app.got_subcommand(satnum)) return cmd_satnum(cfg);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(cfg);
        if (app.got_subcommand(analyze)) return cmd_analyze(cfg);
        if (app.got_subcommand(verify)) return cmd_verify(cfg);
    } catch (const limit_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
