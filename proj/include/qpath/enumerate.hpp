#pragma once

#include <functional>
#include <vector>

#include "qpath/graph.hpp"

namespace qpath {

// All graphs on n vertices up to isomorphism, built level by level: every
// representative on i+1 vertices arises from one on i vertices plus a new
// vertex with some neighbourhood.  Guarded to n <= 8.
std::vector<Graph> all_graphs_up_to_iso(int n, bool connected_only);

void for_each_graph_up_to_iso(int n, bool connected_only,
                              const std::function<void(const Graph&)>& fn);

long long count_graphs_up_to_iso(int n, bool connected_only);

// Exact isomorphism test via backtracking with degree-refinement pruning.
// Intended for the small orders the enumerator handles.
bool isomorphic(const Graph& g, const Graph& h);

} // namespace qpath
