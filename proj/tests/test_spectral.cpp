#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "qpath/graph.hpp"
#include "qpath/randomgraph.hpp"
#include "qpath/spectral.hpp"

using namespace qpath;

TEST_CASE("symmetric storage mirrors entries") {
    SymMatrix m(3);
    m.set(0, 2, 5.0);
    CHECK(m(2, 0) == 5.0);
    m.add(2, 0, 1.0);
    CHECK(m(0, 2) == 6.0);
    m.set(1, 1, -2.0);
    CHECK(m(1, 1) == -2.0);
}

TEST_CASE("signless laplacian assembles degrees plus adjacency") {
    Graph g = Graph::path(3);
    SymMatrix q = signless_laplacian(g);
    CHECK(q(0, 0) == 1.0);
    CHECK(q(1, 1) == 2.0);
    CHECK(q(0, 1) == 1.0);
    CHECK(q(0, 2) == 0.0);
    SymMatrix a = adjacency_matrix(g);
    CHECK(a(0, 0) == 0.0);
    CHECK(a(0, 1) == 1.0);
}

TEST_CASE("complete graphs and cycles have known q") {
    for (int n = 3; n <= 50; ++n) {
        SpectralResult k = q_index(Graph::complete(n));
        CHECK(std::abs(k.value - 2.0 * (n - 1)) <= 1e-9);
        CHECK(k.residual <= 1e-8);
        CHECK(k.converged);
        SpectralResult c = q_index(Graph::cycle(n));
        CHECK(std::abs(c.value - 4.0) <= 1e-9);
        CHECK(c.residual <= 1e-8);
        CHECK(c.converged);
    }
}

TEST_CASE("disjoint unions take the larger block's q") {
    Graph a = Graph::disjoint_union(Graph::complete(242), Graph::empty(3));
    CHECK(std::abs(q_index(a).value - 482.0) <= 1e-8);
    Graph b = Graph::disjoint_union(Graph::complete(241), Graph::empty(4));
    CHECK(std::abs(q_index(b).value - 480.0) <= 1e-8);
}

TEST_CASE("empty graphs") {
    CHECK(q_index(Graph::empty(4)).value == 0.0);
    CHECK_THROWS_AS(q_index(Graph(0)), std::invalid_argument);
}

TEST_CASE("power and jacobi agree") {
    std::mt19937_64 rng(31);
    EigenOptions forced;
    forced.force_jacobi = true;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 39);
        Graph g = erdos_renyi(n, 0.35, rng);
        SpectralResult p = q_index(g);
        SpectralResult j = q_index(g, forced);
        CHECK(std::abs(p.value - j.value) <= 1e-8 * std::max(1.0, std::abs(j.value)));
        CHECK(j.method == "jacobi");
    }
}

TEST_CASE("jacobi returns the full ascending spectrum") {
    // K4: signless Laplacian spectrum is {2, 2, 2, 6}
    JacobiResult r = jacobi_eigen(signless_laplacian(Graph::complete(4)));
    REQUIRE(r.values.size() == 4);
    CHECK(r.values[0] == doctest::Approx(2.0));
    CHECK(r.values[2] == doctest::Approx(2.0));
    CHECK(r.values[3] == doctest::Approx(6.0));
    CHECK(r.off_norm <= 1e-10);
}

TEST_CASE("degenerate leading eigenvalue is flagged") {
    EigenOptions forced;
    forced.force_jacobi = true;
    SpectralResult r = q_index(Graph::disjoint_union(Graph::complete(3), Graph::complete(3)), forced);
    CHECK(r.value == doctest::Approx(4.0));
    CHECK(r.degenerate);
    REQUIRE(r.leading_gap.has_value());
    CHECK(*r.leading_gap <= 1e-9);
    SpectralResult s = q_index(Graph::complete(4), forced);
    CHECK_FALSE(s.degenerate);
    CHECK(*s.leading_gap == doctest::Approx(4.0));
}

TEST_CASE("rayleigh quotient routes agree") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> dist(0.1, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 20);
        Graph g = erdos_renyi(n, 0.5, rng);
        std::vector<double> x(n);
        for (auto& v : x) v = dist(rng);
        double via_matrix = rayleigh_quotient(signless_laplacian(g), x);
        double via_edges = signless_rayleigh_checked(g, x);
        CHECK(via_matrix == doctest::Approx(via_edges).epsilon(1e-12));
    }
}

TEST_CASE("eigen equation holds at the computed pair") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = erdos_renyi(15, 0.4, rng);
        SpectralResult r = q_index(g);
        CHECK(check_eigen_equation(g, r.value, r.vector).max_residual <= 1e-8);
    }
}

TEST_CASE("difference identity holds at the computed pair") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = erdos_renyi(12, 0.5, rng);
        SpectralResult r = q_index(g);
        for (int i = 0; i < 12; ++i)
            for (int j = 0; j < 12; ++j)
                if (i != j) CHECK(difference_identity_gap(g, r.value, r.vector, i, j) <= 1e-7);
    }
}

TEST_CASE("max-one scaling") {
    auto h = max_one_normalized({0.2, 0.5, 0.1});
    CHECK(h[1] == doctest::Approx(1.0));
    CHECK(h[0] == doctest::Approx(0.4));
    CHECK_THROWS_AS(max_one_normalized({0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("edge count bound on assorted graphs") {
    CHECK(edge_count_bound(Graph::complete(8)).holds);
    CHECK(edge_count_bound(Graph::path(9)).holds);
    CHECK(edge_count_bound(Graph::complete_bipartite(1, 7)).holds);
    EdgeBoundReport star = edge_count_bound(Graph::complete_bipartite(1, 7));
    CHECK(star.bound == doctest::Approx(2.0 * 7 / 7 + 6));
    CHECK_THROWS_AS(edge_count_bound(Graph(1)), std::invalid_argument);
}

TEST_CASE("q dominates twice the adjacency radius on regular graphs") {
    // for d-regular graphs q = lambda + d exactly; in general q >= 2 lambda
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = erdos_renyi(14, 0.45, rng);
        if (g.edge_count() == 0) continue;
        double q = q_index(g).value;
        double lam = adjacency_spectral_radius(g).value;
        CHECK(q >= 2.0 * lam - 1e-8);
    }
    CHECK(q_index(Graph::cycle(9)).value ==
          doctest::Approx(adjacency_spectral_radius(Graph::cycle(9)).value + 2.0));
}
