#include <doctest.h>

#include <stdexcept>

#include <set>

#include "qpath/extremal.hpp"

using namespace qpath;

TEST_CASE("base family shape") {
    BFamily fam = build_base(12, 1, 2);
    CHECK(fam.n == 12);
    CHECK(fam.graph.order() == 12);
    CHECK(fam.Y == std::vector<int>{0, 1});
    CHECK(fam.Z.size() == 7);
    CHECK(fam.X.size() == 3);
    CHECK(fam.graph.edge_count() == 42);
    for (int v : fam.Y) CHECK(fam.graph.degree(v) == 11);
    for (int v : fam.Z) CHECK(fam.graph.degree(v) == 8);
    for (int v : fam.X) CHECK(fam.graph.degree(v) == 2);
    // X is independent and sees exactly Y
    for (int x : fam.X) CHECK(fam.graph.neighbors(x) == fam.Y);

    CHECK_THROWS_AS(build_base(5, 1, 2), std::invalid_argument);  // below 2*delta+k+1
    CHECK(build_base(6, 1, 2).Z.size() == 1);                     // exactly at the bound
    CHECK_THROWS_AS(build_base(12, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_base(12, 1, 0), std::invalid_argument);
}

TEST_CASE("deletable pairs enumerate the clique part") {
    CHECK(deletable_pair_count(245, 1, 2) == 29161);
    CHECK(deletable_pair_count(30, 1, 2) == 351);
    auto pool = deletable_pairs(12, 1, 2);
    CHECK(pool.size() == 36); // C(9,2)
    CHECK(pool.front() == std::pair<int, int>{0, 1});
    CHECK(pool.back() == std::pair<int, int>{7, 8});
    for (auto [u, v] : pool) {
        CHECK(u < v);
        CHECK(v < 9); // none touch X
    }
}

TEST_CASE("deletion budget") {
    CHECK(deletion_budget(1, 2) == 1);   // floor(2*3/4)
    CHECK(deletion_budget(1, 3) == 3);   // floor(3*4/4)
    CHECK(deletion_budget(2, 2) == 2);   // floor(2*4/4)
    CHECK(deletion_budget(3, 5) == 10);  // floor(5*8/4)
}

TEST_CASE("thresholds") {
    Thresholds th = thresholds(245, 1, 2);
    CHECK(th.q_threshold == 482.0);
    CHECK(th.edge_threshold == doctest::Approx(28932.0));
    CHECK(th.n_min_spectral == 245);
    CHECK(th.n_min_edges == 29);
    CHECK(th.budget == 1);
    Thresholds small = thresholds(29, 1, 2);
    CHECK(small.q_threshold == 50.0);
    CHECK(small.edge_threshold == doctest::Approx(312.0));
}

TEST_CASE("member builders respect the budget") {
    Graph w = build_member_within_budget(12, 1, 2, {{0, 1}});
    CHECK(w.edge_count() == 41);
    CHECK_FALSE(w.adjacent(0, 1));
    CHECK(build_member_within_budget(12, 1, 2, {}).edge_count() == 42);
    CHECK_THROWS_AS(build_member_within_budget(12, 1, 2, {{0, 1}, {0, 2}}), std::invalid_argument);

    Graph p = build_member_past_budget(12, 1, 2, {{0, 1}, {0, 2}});
    CHECK(p.edge_count() == 40);
    CHECK_THROWS_AS(build_member_past_budget(12, 1, 2, {{0, 1}}), std::invalid_argument);

    // deletions must stay inside the clique part and be distinct; the order
    // of the pairs is normalized rather than enforced
    CHECK_THROWS_AS(build_member_within_budget(12, 1, 2, {{8, 9}}), std::invalid_argument);
    CHECK(build_member_past_budget(12, 1, 2, {{0, 2}, {0, 1}}) ==
          build_member_past_budget(12, 1, 2, {{0, 1}, {0, 2}}));
    CHECK_THROWS_AS(build_member_past_budget(12, 1, 2, {{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("deletion sampler is deterministic and well formed") {
    auto a = sample_deletions(30, 1, 2, 2, 40, 77);
    auto b = sample_deletions(30, 1, 2, 2, 40, 77);
    CHECK(a == b);
    auto c = sample_deletions(30, 1, 2, 2, 40, 78);
    CHECK(a != c);

    std::set<std::vector<std::pair<int, int>>> seen(a.begin(), a.end());
    CHECK(seen.size() == a.size()); // all distinct
    for (const auto& es : a) {
        CHECK(es.size() == 2);
        CHECK(es[0] < es[1]);
        for (auto [u, v] : es) {
            CHECK(0 <= u);
            CHECK(u < v);
            CHECK(v < 27);
        }
    }

    // more sets than exist is an error; asking for exactly all works
    CHECK_THROWS_AS(sample_deletions(12, 1, 2, 1, 37, 3), std::invalid_argument);
    CHECK(sample_deletions(12, 1, 2, 1, 36, 3).size() == 36);
}

TEST_CASE("recognizing exact members") {
    Graph base = build_base(12, 1, 2).graph;
    auto roles = roles_if_member_within_budget(base, 1, 2);
    REQUIRE(roles.has_value());
    for (int v = 0; v < 2; ++v) CHECK((*roles)[v] == 'Y');
    for (int v = 2; v < 9; ++v) CHECK((*roles)[v] == 'Z');
    for (int v = 9; v < 12; ++v) CHECK((*roles)[v] == 'X');

    Graph member = build_member_within_budget(12, 1, 2, {{3, 4}});
    CHECK(roles_if_member_within_budget(member, 1, 2).has_value());

    // one deletion past the budget is not a within-budget member
    Graph past = build_member_past_budget(12, 1, 2, {{0, 1}, {2, 3}});
    CHECK_FALSE(roles_if_member_within_budget(past, 1, 2).has_value());

    // adding any edge leaves the family
    Graph extra = base;
    extra.add_edge(9, 10);
    CHECK_FALSE(roles_if_member_within_budget(extra, 1, 2).has_value());
    CHECK_FALSE(roles_if_member_within_budget(Graph::complete(12), 1, 2).has_value());
    CHECK_FALSE(roles_if_member_within_budget(Graph::cycle(12), 1, 2).has_value());
}

TEST_CASE("recognizing spanning subgraphs") {
    Graph base = build_base(12, 1, 2).graph;
    CHECK(roles_if_spanning_subgraph(base, 1, 2).has_value());

    // arbitrary deletions keep it a spanning subgraph, even from X edges
    Graph sub = base;
    sub.remove_edge(0, 9);
    sub.remove_edge(2, 3);
    sub.remove_edge(0, 1);
    auto roles = roles_if_spanning_subgraph(sub, 1, 2);
    REQUIRE(roles.has_value());

    // K12 has no independent triple, C12 has no dominating pair
    CHECK_FALSE(roles_if_spanning_subgraph(Graph::complete(12), 1, 2).has_value());
    CHECK_FALSE(roles_if_spanning_subgraph(Graph::cycle(12), 1, 2).has_value());

    // an edge inside X of the labelled base breaks every consistent labelling
    Graph extra = base;
    extra.add_edge(9, 10);
    extra.add_edge(9, 11);
    extra.add_edge(10, 11);
    CHECK_FALSE(roles_if_spanning_subgraph(extra, 1, 2).has_value());
}
