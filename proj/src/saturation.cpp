#include "satlab/saturation.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace satlab {

long long sat_formula(int n, const CliquePattern& pattern) {
    if (n < pattern.order())
        throw std::invalid_argument("sat_formula: order below the pattern order");
    long long p = pattern.p, q = pattern.q, t = pattern.t;
    return (p - 2) * (n - p + 2) + (t - 1) * (q + 1) * q / 2 + (p - 2) * (p - 3) / 2;
}

int theorem_order_bound(const CliquePattern& pattern) {
    return pattern.q * (pattern.q + 1) * (pattern.t - 1) + 3 * (pattern.p - 2);
}

int min_construction_order(const CliquePattern& pattern) {
    return pattern.p + (pattern.t - 1) * pattern.q + pattern.t - 3;
}

Graph build_extremal(int n, const CliquePattern& pattern) {
    auto [p, q, t] = pattern;
    if (n < min_construction_order(pattern))
        throw std::invalid_argument("build_extremal: order too small for the construction");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < p - 2; ++i) {
        for (int j = i + 1; j < p - 2; ++j) es.push_back({i, j});
        for (int j = p - 2; j < n; ++j) es.push_back({i, j});
    }
    for (int b = 0; b < t - 1; ++b) {
        int lo = p - 2 + b * (q + 1);
        for (int i = lo; i < lo + q + 1; ++i)
            for (int j = i + 1; j < lo + q + 1; ++j) es.push_back({i, j});
    }
    return Graph(n, es);
}

bool is_pattern_free(const Graph& g, const CliquePattern& pattern) {
    return !contains_pattern(g, pattern).has_value();
}

SaturationVerdict certify_saturated(const Graph& g, const CliquePattern& pattern, int workers) {
    SaturationVerdict verdict;
    if (auto hit = contains_pattern(g, pattern)) {
        verdict.pattern_found = std::move(hit);
        return verdict;
    }
    verdict.free = true;

    const auto pairs = non_edges(g);
    std::size_t failing = pairs.size();
    if (workers <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (is_pattern_free(g.with_edge(pairs[i].first, pairs[i].second), pattern)) {
                failing = i;
                break;
            }
    } else {
        // claim indices in ascending order; keep the least failing one. A
        // worker may stop early only when its index exceeds a known failure,
        // so the minimum is exact and independent of scheduling.
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> least{pairs.size()};
        auto scan = [&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= pairs.size() || i > least.load()) break;
                if (is_pattern_free(g.with_edge(pairs[i].first, pairs[i].second), pattern)) {
                    std::size_t cur = least.load();
                    while (i < cur && !least.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 1; w < workers; ++w) pool.emplace_back(scan);
        scan();
        for (auto& th : pool) th.join();
        failing = least.load();
    }

    if (failing < pairs.size())
        verdict.open_pair = pairs[failing];
    else
        verdict.saturated = true;
    return verdict;
}

}  // namespace satlab
