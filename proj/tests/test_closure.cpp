#include <doctest.h>

#include <random>

#include "qpath/closure.hpp"
#include "qpath/extremal.hpp"
#include "qpath/randomgraph.hpp"

using namespace qpath;

TEST_CASE("five-cycle closes to the complete graph at threshold four") {
    ClosureResult r = degree_sum_closure(Graph::cycle(5), 4);
    CHECK(r.closure == Graph::complete(5));
    CHECK(r.added.size() == 5);
    CHECK(r.threshold == 4);
    CHECK(closure_is_complete(Graph::cycle(5), 4));
}

TEST_CASE("sparse joins stay put") {
    // in B(12,1,2) every nonadjacent pair has degree sum at most 10 < 11
    Graph b = build_base(12, 1, 2).graph;
    ClosureResult r = degree_sum_closure(b, 11);
    CHECK(r.closure == b);
    CHECK(r.added.empty());
    CHECK_FALSE(closure_is_complete(b, 11));
}

TEST_CASE("high thresholds never add, low thresholds complete") {
    Graph g = Graph::path(6);
    CHECK(degree_sum_closure(g, 100).closure == g);
    CHECK(degree_sum_closure(g, 0).closure == Graph::complete(6));
}

TEST_CASE("closure is a fixpoint") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = erdos_renyi(n, 0.35, rng);
        int threshold = static_cast<int>(rng() % (n + 2));
        Graph c = degree_sum_closure(g, threshold).closure;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!c.adjacent(u, v)) CHECK(c.degree(u) + c.degree(v) < threshold);
    }
}

TEST_CASE("every recorded addition was justified when made") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 9);
        Graph g = erdos_renyi(n, 0.4, rng);
        int threshold = n - 1 - static_cast<int>(rng() % 3);
        ClosureResult r = degree_sum_closure(g, threshold);
        Graph replay = g;
        for (auto [u, v] : r.added) {
            CHECK_FALSE(replay.adjacent(u, v));
            CHECK(replay.degree(u) + replay.degree(v) >= threshold);
            replay.add_edge(u, v);
        }
        CHECK(replay == r.closure);
    }
}

TEST_CASE("worklist closure matches the rescanning oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = erdos_renyi(n, 0.3 + 0.05 * (trial % 9), rng);
        for (int threshold : {n - 1, n - 2, n / 2}) {
            Graph fast = degree_sum_closure(g, threshold).closure;
            Graph slow = degree_sum_closure_naive(g, threshold, rng());
            CHECK(fast == slow);
        }
    }
}
