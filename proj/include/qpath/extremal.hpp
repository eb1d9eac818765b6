#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qpath/graph.hpp"

namespace qpath {

// The tight family: a clique Y of size delta joined to everything, a clique Z
// of size n-2*delta-k, and an independent set X of size delta+k attached to Y
// only.  Canonical labels: Y first, then Z, then X.
struct BFamily {
    Graph graph;
    int n = 0, k = 0, delta = 0;
    std::vector<int> Y, Z, X;
};

BFamily build_base(int n, int k, int delta); // requires k>=1, delta>=1, n>=2*delta+k+1

// Pairs inside Y u Z (all present in the base graph), lexicographic.
std::vector<std::pair<int, int>> deletable_pairs(int n, int k, int delta);
long long deletable_pair_count(int n, int k, int delta);

// floor(delta*(delta+k)/4): largest deletion budget that keeps the family's
// q-index at or above the reference bound.
long long deletion_budget(int k, int delta);

// Base graph minus the given deletable pairs; requires |eprime| <= budget.
Graph build_member_within_budget(int n, int k, int delta,
                                 const std::vector<std::pair<int, int>>& eprime);
// Same, but requires |eprime| == budget + 1 exactly.
Graph build_member_past_budget(int n, int k, int delta,
                               const std::vector<std::pair<int, int>>& eprime);

// `count` distinct deletion sets of the given size, seeded and reproducible:
// a few structured shapes first (matching in Z, star in Z, star at Y, the
// lexicographic block), then uniform draws.
std::vector<std::vector<std::pair<int, int>>> sample_deletions(int n, int k, int delta, int size,
                                                               int count, std::uint64_t seed);

struct Thresholds {
    double q_threshold = 0.0;      // 2*(n - delta - k - 1)
    double edge_threshold = 0.0;   // (n-k-delta-1)(n-k-delta-2)/2 + (delta+k+1)(delta+1)
    long long n_min_spectral = 0;  // order needed by the spectral statement
    long long n_min_edges = 0;     // order needed by the edge-count statement
    long long budget = 0;          // deletion_budget(k, delta)
};
Thresholds thresholds(int n, int k, int delta);

// Role vector ('Y', 'Z', 'X' per vertex) if g is a spanning subgraph of the
// base graph under some labelling, i.e. some delta+k independent vertices of
// degree <= delta share a neighbourhood pool of size <= delta.
std::optional<std::vector<char>> roles_if_spanning_subgraph(const Graph& g, int k, int delta);

// Role vector if g is exactly the base minus a within-budget deletion set:
// the X side complete to Y, all missing pairs confined to Y u Z.
std::optional<std::vector<char>> roles_if_member_within_budget(const Graph& g, int k, int delta);

} // namespace qpath
