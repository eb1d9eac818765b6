#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "qpath/extremal.hpp"
#include "qpath/graph6.hpp"
#include "qpath/verifier.hpp"

using namespace qpath;

TEST_CASE("edge bound checks pass on small orders") {
    CheckOutcome ex = check_edge_bound_exhaustive(5);
    CHECK(ex.pass);
    CHECK(ex.cases == 1 + 2 + 6 + 21);
    CHECK(ex.details["by_order"]["5"] == 21);

    CheckOutcome rnd = check_edge_bound_random(50, 12, 5);
    CHECK(rnd.pass);
    CHECK(rnd.cases == 50);
    CHECK(check_edge_bound_random(50, 12, 5).to_json() == rnd.to_json());
}

TEST_CASE("closure stability on small orders") {
    CheckOutcome out = check_closure_stability(5, 1);
    CHECK(out.pass);
    CHECK(out.cases == 31);
    CHECK(check_closure_stability(5, 2).pass);
}

TEST_CASE("family scans at a small order") {
    CheckOutcome within = scan_members_within_budget(20, 1, 2, true, 0, 1);
    CHECK(within.pass);
    CHECK(within.cases == 1 + 136); // base plus C(17,2) single deletions
    CHECK(within.details["min_q_margin"].get<double>() > 0.0);

    CheckOutcome past = scan_members_past_budget(20, 1, 2, 50, 1);
    CHECK(past.pass);
    CHECK(past.cases == 50);
    CHECK(past.skipped == 50); // the strict upper bound needs a large order
    CHECK(past.details["upper_applies"] == false);

    CheckOutcome x = check_x_entry_bound(20, 1, 2, 30, 1);
    CHECK(x.pass);
    CHECK(x.cases == 31);
}

TEST_CASE("argmax orderings at a small order") {
    CheckOutcome out = check_argmax_entry_orderings(16, 1, 2);
    CHECK(out.pass);
    CHECK(out.cases == 78 * 77 / 2); // C(13,2) pairs, two at a time
    CHECK_THROWS_AS(check_argmax_entry_orderings(16, 1, 3), std::invalid_argument);
}

TEST_CASE("edge threshold coverability at the minimum order") {
    CheckOutcome out = check_edge_threshold_coverability(29, 1, 2, 30, 9);
    CHECK(out.pass);
    CHECK(out.details["unknown"] == 0);
    CHECK(out.details["violations"] == 0);
}

TEST_CASE("classification of family members and complete graphs") {
    ClassifyOptions opt;
    Graph base = build_base(245, 1, 2).graph;
    ScanRecord rec = classify_graph(base, opt);
    CHECK(rec.n == 245);
    CHECK(rec.connected);
    CHECK(rec.min_degree == 2);
    CHECK(rec.q.value > 482.0);
    CHECK(rec.q_threshold == 482.0);
    CHECK(rec.params_applicable);
    CHECK(rec.hypotheses_met);
    CHECK(rec.coverable == Coverable::no);
    CHECK(rec.route == "separator");
    CHECK(rec.member_within_budget);
    CHECK(rec.spanning_subgraph_of_base);
    CHECK(rec.edge_bound_holds);
    CHECK_FALSE(rec.theorem_violated); // the exception family is exempt

    ScanRecord kn = classify_graph(Graph::complete(245), opt);
    CHECK(kn.hypotheses_met);
    CHECK(kn.coverable == Coverable::yes);
    CHECK(kn.route == "closure");
    CHECK_FALSE(kn.member_within_budget);
    CHECK_FALSE(kn.theorem_violated);

    // below the spectral order bound the theorem makes no claim
    ScanRecord small = classify_graph(build_base(30, 1, 2).graph, opt);
    CHECK(small.params_applicable);
    CHECK_FALSE(small.hypotheses_met);
    CHECK_FALSE(small.theorem_violated);

    CHECK_THROWS_AS(classify_graph(Graph(0), opt), std::invalid_argument);
}

TEST_CASE("classification json has the fixed shape") {
    ClassifyOptions opt;
    ordered_json j = classify_graph(Graph::cycle(9), opt).to_json();
    const char* keys[] = {"graph6", "n", "edges", "min_degree", "connected", "q", "q_threshold",
                          "params_applicable", "hypotheses_met", "coverable", "route",
                          "member_within_budget", "spanning_subgraph_of_base", "edge_bound_holds",
                          "theorem_violated"};
    int i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) CHECK(it.key() == keys[i]);
    CHECK(j["coverable"] == "yes");
    CHECK(j["q"]["value"].get<double>() == doctest::Approx(4.0));
}

TEST_CASE("corpus scanning tolerates banners, blanks and bad records") {
    std::stringstream in;
    in << ">>graph6<<\n"
       << "\n"
       << to_graph6(Graph::cycle(9)) << "\n"
       << "!!notgraph6\n"
       << to_graph6(Graph::complete(5)) << "\r\n";
    ClassifyOptions opt;
    ScanReport rep = scan_corpus(in, opt);
    REQUIRE(rep.records.size() == 2);
    CHECK(rep.records[0].n == 9);
    CHECK(rep.records[1].n == 5);
    REQUIRE(rep.malformed.size() == 1);
    CHECK(rep.malformed[0].first == 4);
    CHECK(rep.violations == 0);
    CHECK(rep.unknowns == 0);

    ordered_json j = rep.to_json();
    CHECK(j["summary"]["graphs"] == 2);
    CHECK(j["summary"]["malformed"][0]["line"] == 4);
}

TEST_CASE("check outcomes serialize deterministically") {
    CheckOutcome a = scan_members_past_budget(20, 1, 2, 25, 3);
    CheckOutcome b = scan_members_past_budget(20, 1, 2, 25, 3);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CheckOutcome c = scan_members_past_budget(20, 1, 2, 25, 4);
    CHECK(a.to_json().dump() != c.to_json().dump());
}
