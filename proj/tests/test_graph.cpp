#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "qpath/graph.hpp"
#include "qpath/randomgraph.hpp"

using namespace qpath;

TEST_CASE("edges, degrees and caching") {
    Graph g(5);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 1);
    g.add_edge(1, 0); // duplicate is a no-op
    g.add_edge(3, 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 1);
    CHECK(g.adjacent(4, 3));
    g.remove_edge(0, 1);
    g.remove_edge(0, 1);
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(0) == 0);
    CHECK(g.min_degree() == 0);
    CHECK(g.max_degree() == 1);
}

TEST_CASE("bad vertex pairs are rejected") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
    CHECK_THROWS_AS(g.add_edge(-1, 0), std::out_of_range);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.adjacent(2, 2), std::invalid_argument);
}

TEST_CASE("named constructions") {
    CHECK(Graph::complete(6).edge_count() == 15);
    CHECK(Graph::complete(6).min_degree() == 5);
    CHECK(Graph::empty(4).edge_count() == 0);
    CHECK(Graph::path(1).edge_count() == 0);
    CHECK(Graph::path(5).edge_count() == 4);
    CHECK(Graph::path(5).degree(0) == 1);
    CHECK(Graph::path(5).degree(2) == 2);
    CHECK(Graph::cycle(5).edge_count() == 5);
    CHECK(Graph::cycle(5).min_degree() == 2);
    CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);
    Graph kb = Graph::complete_bipartite(2, 3);
    CHECK(kb.order() == 5);
    CHECK(kb.edge_count() == 6);
    CHECK(kb.degree(0) == 3);
    CHECK(kb.degree(4) == 2);
    Graph fe = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(fe.edge_count() == 2);
}

TEST_CASE("neighbors are sorted and complete") {
    Graph g = Graph::cycle(7);
    auto nb = g.neighbors(0);
    CHECK(nb == std::vector<int>{1, 6});
    Graph k = Graph::complete(70); // multiple words per row
    CHECK(k.neighbors(69).size() == 69);
    CHECK(k.neighbors(69).front() == 0);
}

TEST_CASE("union and join") {
    Graph u = Graph::disjoint_union(Graph::complete(3), Graph::path(2));
    CHECK(u.order() == 5);
    CHECK(u.edge_count() == 4);
    CHECK(u.adjacent(3, 4));
    CHECK_FALSE(u.adjacent(2, 3));

    Graph j = Graph::join(Graph::complete(2), Graph::empty(3));
    CHECK(j.order() == 5);
    CHECK(j.edge_count() == 1 + 6);
    CHECK(j.degree(0) == 4);
    CHECK(j.degree(4) == 2);
}

TEST_CASE("induced subgraphs and removal") {
    Graph g = Graph::cycle(6);
    Graph in = g.induced({0, 1, 2, 3});
    CHECK(in.order() == 4);
    CHECK(in.edge_count() == 3); // the path 0-1-2-3
    Graph rem = g.remove_vertices({0});
    CHECK(rem.order() == 5);
    CHECK(rem.edge_count() == 4);
    CHECK_THROWS_AS(g.induced({2, 2, 3}), std::invalid_argument); // duplicates rejected
}

TEST_CASE("complement") {
    Graph g = Graph::path(4).complement();
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(0, 3));
    CHECK(g.adjacent(1, 3));
    CHECK(Graph::complete(5).complement() == Graph::empty(5));
}

TEST_CASE("components and connectivity") {
    Graph g = Graph::disjoint_union(Graph::cycle(3), Graph::path(2));
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4});
    CHECK(component_count(g) == 2);
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(Graph::cycle(4)));
    CHECK(is_connected(Graph::complete(1)));
    CHECK_THROWS_AS(is_connected(Graph(0)), std::logic_error);
    CHECK(component_count(Graph::empty(4)) == 4);
}

TEST_CASE("component count with exclusions matches the induced oracle") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = erdos_renyi(12, 0.2, rng);
        std::vector<int> removed;
        for (int v = 0; v < 12; ++v)
            if (rng() % 3 == 0) removed.push_back(v);
        std::vector<int> keep;
        for (int v = 0; v < 12; ++v)
            if (std::find(removed.begin(), removed.end(), v) == removed.end()) keep.push_back(v);
        CHECK(component_count_excluding(g, removed) == component_count(g.induced(keep)));
    }
}

TEST_CASE("equality is structural") {
    Graph a = Graph::path(3);
    Graph b = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(a == b);
    b.remove_edge(0, 1);
    CHECK(a != b);
    CHECK(Graph(2) != Graph(3));
}
