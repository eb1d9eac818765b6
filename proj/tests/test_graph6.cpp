#include <doctest.h>

#include <random>

#include "qpath/enumerate.hpp"
#include "qpath/graph6.hpp"
#include "qpath/randomgraph.hpp"

using namespace qpath;

TEST_CASE("known encodings") {
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(Graph::complete(2)) == "A_");
    CHECK(to_graph6(Graph::empty(2)) == "A?");
    CHECK(to_graph6(Graph::complete(4)) == "C~");
    CHECK(to_graph6(Graph::empty(4)) == "C?");
    CHECK(to_graph6(Graph::cycle(5)) == "Dhc");
    CHECK(from_graph6("C~") == Graph::complete(4));
    CHECK(from_graph6("C?") == Graph::empty(4));
    CHECK(from_graph6("Dhc") == Graph::cycle(5));
    CHECK(from_graph6("?").order() == 0);
}

TEST_CASE("long order header") {
    Graph g = Graph::empty(63);
    std::string s = to_graph6(g);
    CHECK(s[0] == '~');
    CHECK(from_graph6(s) == g);
    Graph h = Graph::cycle(100);
    CHECK(from_graph6(to_graph6(h)) == h);
}

TEST_CASE("round trips on every small graph") {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : all_graphs_up_to_iso(n, false))
            CHECK(from_graph6(to_graph6(g)) == g);
}

TEST_CASE("round trips on random graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = static_cast<int>(rng() % 13);
        Graph g = erdos_renyi(n, 0.4, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("malformed records are rejected") {
    CHECK_THROWS_AS(from_graph6(""), Graph6Error);
    CHECK_THROWS_AS(from_graph6("C"), Graph6Error);     // body too short
    CHECK_THROWS_AS(from_graph6("C~~"), Graph6Error);   // body too long
    CHECK_THROWS_AS(from_graph6("C~ "), Graph6Error);   // byte below the printable range
    CHECK_THROWS_AS(from_graph6("C\x7f"), Graph6Error); // byte above the printable range
    CHECK_THROWS_AS(from_graph6("AO"), Graph6Error);    // nonzero padding bits
    CHECK_THROWS_AS(from_graph6("~"), Graph6Error);     // truncated order field
}

TEST_CASE("non-canonical order fields are rejected") {
    // order 4 written in the 3-sextet form reserved for orders >= 63
    std::string s = "~??";
    s += static_cast<char>(63 + 4);
    s += "~"; // enough body bits for n=4 would follow; reject before that
    CHECK_THROWS_AS(from_graph6(s), Graph6Error);
}
