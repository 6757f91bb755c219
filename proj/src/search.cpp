#include "satlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

#include "satlab/saturation.hpp"

namespace satlab {
namespace {

template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

}  // namespace

EdgeClassEnumerator::EdgeClassEnumerator(int max_support) : max_support_(max_support) {
    if (max_support < 0 || max_support > VertexSet::kMaxVertices)
        throw std::invalid_argument("enumerator: support bound out of range");
    levels_.push_back({Graph(0)});
}

const std::vector<Graph>& EdgeClassEnumerator::classes(int m) {
    if (m < 0) throw std::invalid_argument("enumerator: negative edge count");
    while (int(levels_.size()) <= m) {
        const std::vector<Graph>& prev = levels_.back();
        std::map<CanonicalForm, Graph> next;
        auto offer = [&](const Graph& h) {
            ++nodes_;
            auto res = canonicalize(h);
            next.emplace(std::move(res.form), std::move(res.graph));
        };
        for (const Graph& g : prev) {
            int s = g.order();
            // edge inside the support, then pendant edge, then disjoint edge;
            // deleting one edge of any child leads back to some parent class,
            // so every class at the next level is reached
            for (auto [i, j] : non_edges(g)) offer(g.with_edge(i, j));
            if (s + 1 <= max_support_) {
                Graph grown = pad(g, s + 1);
                for (int i = 0; i < s; ++i) offer(grown.with_edge(i, s));
            }
            if (s + 2 <= max_support_) offer(pad(g, s + 2).with_edge(s, s + 1));
        }
        std::vector<Graph> level;
        level.reserve(next.size());
        for (auto& [form, h] : next) level.push_back(std::move(h));
        levels_.push_back(std::move(level));
    }
    return levels_[m];
}

std::vector<Graph> enumerate_graphs(int n_support, int m) {
    if (n_support < 0 || n_support > VertexSet::kMaxVertices)
        throw std::invalid_argument("enumerate_graphs: support out of range");
    if (m < 0 || (long long)m > (long long)n_support * (n_support - 1) / 2)
        throw std::invalid_argument("enumerate_graphs: edge count exceeds the support capacity");
    EdgeClassEnumerator en(n_support);
    return en.classes(m);
}

SearchReport compute_sat(int n, const CliquePattern& pattern, const SearchOptions& opts) {
    if (n < pattern.order())
        throw std::invalid_argument("compute_sat: order below the pattern order");
    if (n > VertexSet::kMaxVertices)
        throw std::invalid_argument("compute_sat: order too large for this build");
    auto t0 = std::chrono::steady_clock::now();

    SearchReport rep(n, pattern);
    rep.below_bound = n <= theorem_order_bound(pattern);
    long long all_pairs = (long long)n * (n - 1) / 2;
    long long budget = opts.budget ? *opts.budget : sat_formula(n, pattern);
    if (budget < 0) throw std::invalid_argument("compute_sat: negative budget");
    rep.budget = int(std::min(budget, all_pairs));
    rep.max_edges = opts.max_edges;
    const int limit = std::min(rep.budget, rep.max_edges);

    EdgeClassEnumerator en(std::min(n, 2 * std::max(limit, 0)));
    for (int m = 0; m <= limit; ++m) {
        const auto& classes = en.classes(m);
        std::vector<char> sat(classes.size(), 0);
        parallel_for(classes.size(), opts.workers, [&](std::size_t i) {
            sat[i] = certify_saturated(pad(classes[i], n), pattern, 1).saturated ? 1 : 0;
        });
        rep.certified += classes.size();
        LevelTally tally{m, classes.size(), 0};
        for (char f : sat) tally.saturated += f;
        rep.tallies.push_back(tally);
        rep.frontier = m;
        if (tally.saturated > 0) {
            rep.sat_value = m;
            std::vector<std::pair<CanonicalForm, Graph>> hits;
            for (std::size_t i = 0; i < classes.size(); ++i)
                if (sat[i]) {
                    auto res = canonicalize(pad(classes[i], n));
                    hits.push_back({std::move(res.form), std::move(res.graph)});
                }
            std::sort(hits.begin(), hits.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (auto& [form, graph] : hits) {
                rep.extremal_forms.push_back(std::move(form));
                rep.extremal_graphs.push_back(std::move(graph));
            }
            break;
        }
    }
    rep.guard_hit = !rep.sat_value.has_value() && rep.max_edges < rep.budget;
    if (rep.sat_value && rep.extremal_forms.size() == 1 && n >= min_construction_order(pattern))
        rep.unique_extremal = rep.extremal_forms[0] == canonical_form(build_extremal(n, pattern));
    rep.enumeration_nodes = en.nodes();
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::pair<bool, SearchReport> verify_theorem(int n, const CliquePattern& pattern,
                                             const SearchOptions& opts) {
    if (!opts.allow_below_bound && n <= theorem_order_bound(pattern))
        throw std::invalid_argument("verify_theorem: order must exceed the theorem bound");
    SearchReport rep = compute_sat(n, pattern, opts);
    bool confirmed = rep.sat_value.has_value() &&
                     (long long)*rep.sat_value == sat_formula(n, pattern) && rep.unique_extremal;
    return {confirmed, std::move(rep)};
}

}  // namespace satlab
