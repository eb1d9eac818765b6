#include "qpath/closure.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace qpath {

ClosureResult degree_sum_closure(const Graph& g, int threshold) {
    ClosureResult res;
    res.closure = g;
    res.threshold = threshold;
    Graph& h = res.closure;
    const int n = h.order();

    std::deque<std::pair<int, int>> work;
    std::vector<char> queued(static_cast<std::size_t>(n) * n, 0);
    auto push = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if (h.adjacent(u, v)) return;
        char& q = queued[static_cast<std::size_t>(u) * n + v];
        if (q) return;
        q = 1;
        work.emplace_back(u, v);
    };

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!h.adjacent(u, v)) push(u, v);

    while (!work.empty()) {
        auto [u, v] = work.front();
        work.pop_front();
        queued[static_cast<std::size_t>(u) * n + v] = 0;
        if (h.adjacent(u, v)) continue;
        if (h.degree(u) + h.degree(v) < threshold) continue;
        h.add_edge(u, v);
        res.added.emplace_back(u, v);
        // Both endpoints gained a degree; every pair touching them may now
        // qualify.
        for (int w = 0; w < n; ++w) {
            if (w != u && !h.adjacent(u, w)) push(u, w);
            if (w != v && !h.adjacent(v, w)) push(v, w);
        }
    }
    return res;
}

Graph degree_sum_closure_naive(const Graph& g, int threshold, std::uint64_t seed) {
    Graph h = g;
    const int n = h.order();
    std::mt19937_64 rng(seed);

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    bool changed = true;
    while (changed) {
        changed = false;
        std::shuffle(pairs.begin(), pairs.end(), rng);
        for (auto [u, v] : pairs) {
            if (!h.adjacent(u, v) && h.degree(u) + h.degree(v) >= threshold) {
                h.add_edge(u, v);
                changed = true;
            }
        }
    }
    return h;
}

bool closure_is_complete(const Graph& g, int threshold) {
    const Graph& c = degree_sum_closure(g, threshold).closure;
    long long n = c.order();
    return c.edge_count() == n * (n - 1) / 2;
}

} // namespace qpath
