#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpath/extremal.hpp"
#include "qpath/graph.hpp"
#include "qpath/pathcover.hpp"
#include "qpath/spectral.hpp"

namespace qpath {

using ordered_json = nlohmann::ordered_json;

// One verification pass over many cases.  `details` carries per-check data;
// everything inside is deterministic for fixed inputs and seed, so reports
// serialize byte-identically across runs.
struct CheckOutcome {
    std::string name;
    bool pass = false;
    long long cases = 0;
    long long failures = 0;
    long long skipped = 0; // cases where a conditional claim did not apply
    ordered_json details = ordered_json::object();

    ordered_json to_json() const;
};

// --- small-order ground truth ---------------------------------------------

// q <= 2e/(n-1) + n - 2 over every connected graph of order 2..max_n.
// details.by_order records how many graphs each order contributed.
CheckOutcome check_edge_bound_exhaustive(int max_n);

// Same bound over `count` seeded random graphs of order 2..max_n.
CheckOutcome check_edge_bound_random(int count, int max_n, std::uint64_t seed);

// cover(g) <= k  iff  cover(closure at n-k of g) <= k, over every connected
// graph of order 1..max_n.
CheckOutcome check_closure_stability(int max_n, int k);

// --- family scans -----------------------------------------------------------

// Members with deletion sets within budget: q stays at or above
// 2(n-delta-k-1) (slack 1e-6), the Y separator certifies bound k+1, minimum
// degree stays at delta, and the eigensolver converges with residual <= 1e-8.
// Exhaustive over all sizes 0..budget, or sampled when exhaustive is false.
CheckOutcome scan_members_within_budget(int n, int k, int delta, bool exhaustive, int samples,
                                        std::uint64_t seed);

// Members one deletion past budget: strictly above 2(n-delta-k-1) - 1 always,
// and strictly below 2(n-delta-k-1) once n reaches the spectral order bound.
CheckOutcome scan_members_past_budget(int n, int k, int delta, int samples, std::uint64_t seed);

// Eigenvector entries on the independent side: with max-entry-one scaling,
// every X entry is at most delta/(q - delta) (slack 1e-8).  Runs on the base
// graph plus `samples` members across deletion sizes 1..budget+1; also
// re-checks the per-vertex eigen-equation residuals along the way.
CheckOutcome check_x_entry_bound(int n, int k, int delta, int samples, std::uint64_t seed);

// Exhaustive argmax over members one past budget (requires budget+1 == 2):
// locates the q-maximizer (ties: most surviving edges inside Y, then smallest
// deletion set), then asserts the applicable strict entry orderings between
// the full-degree and deficient parts of Y and Z, and the spectral gap bound
// (max_V h - min_{Y u Z} h) < ((delta+k)(delta+4)+4) / (2(q-n+1)).
CheckOutcome check_argmax_entry_orderings(int n, int k, int delta);

// Edge-count route: seeded graphs with min degree >= delta and edge count
// above the threshold must be k-path-coverable or a spanning subgraph of the
// base graph.  Half the samples are dense random graphs, half are the base
// graph plus random extra edges.
CheckOutcome check_edge_threshold_coverability(int n, int k, int delta, int samples,
                                               std::uint64_t seed);

// --- per-graph classification -----------------------------------------------

struct ClassifyOptions {
    int k = 1;
    int delta = 2;
    EigenOptions eigen;
    CoverOptions cover;
    bool recognize_family = true; // run the (possibly costly) role searches
};

struct ScanRecord {
    std::string graph6;
    int n = 0;
    long long edges = 0;
    int min_degree = 0;
    bool connected = false;
    SpectralResult q;
    double q_threshold = 0.0;
    bool params_applicable = false; // order large enough for the family shape
    bool hypotheses_met = false;    // connected, degrees, order, q at threshold
    Coverable coverable = Coverable::unknown;
    std::string route;
    bool member_within_budget = false;
    bool spanning_subgraph_of_base = false;
    bool edge_bound_holds = false;
    bool theorem_violated = false; // hypotheses met, certified not coverable, no exception

    ordered_json to_json() const;
};

ScanRecord classify_graph(const Graph& g, const ClassifyOptions& opt);

struct ScanReport {
    std::vector<ScanRecord> records;
    std::vector<std::pair<long long, std::string>> malformed; // line number, error
    long long violations = 0;
    long long unknowns = 0;

    ordered_json to_json() const;
};

// Reads newline-delimited graph6 records (blank lines and a leading
// ">>graph6<<" banner are skipped; anything else unparsable is reported with
// its line number) and classifies each graph.
ScanReport scan_corpus(std::istream& in, const ClassifyOptions& opt);

} // namespace qpath
