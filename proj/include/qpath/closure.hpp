#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qpath/graph.hpp"

namespace qpath {

struct ClosureResult {
    Graph closure;
    std::vector<std::pair<int, int>> added; // in addition order, u < v
    int threshold = 0;
};

// Iteratively joins non-adjacent pairs whose degree sum reaches the
// threshold, until no such pair is left.  The result is independent of the
// processing order; the worklist re-examines pairs touching any vertex whose
// degree just changed.
ClosureResult degree_sum_closure(const Graph& g, int threshold);

// Same fixpoint computed by repeated full scans in a seeded random order.
// Exists to cross-check degree_sum_closure.
Graph degree_sum_closure_naive(const Graph& g, int threshold, std::uint64_t seed);

bool closure_is_complete(const Graph& g, int threshold);

} // namespace qpath
