#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpath/graph.hpp"

namespace qpath {

struct PathCoverResult {
    int cover_number = 0;
    std::vector<std::vector<int>> paths; // vertex-disjoint, jointly spanning
};

// Exact minimum number of vertex-disjoint paths covering all vertices.
// Bitmask DP over (covered set, endpoint of the open path); memory is
// n * 2^n bytes, so the order is capped (default 20, hard limit 25).
PathCoverResult min_path_cover(const Graph& g, int dp_cap = 20);

// Same quantity by exhaustive search over path systems, no shared state with
// the DP.  Guarded to n <= 9.
PathCoverResult min_path_cover_brute(const Graph& g);

// nullopt when valid; otherwise a description of the first defect.
std::optional<std::string> validate_path_cover(const Graph& g,
                                               const std::vector<std::vector<int>>& paths);

struct SeparatorCertificate {
    std::vector<int> separator;
    int components_after = 0;
    long long bound = 0; // components_after - |separator|; a lower bound on the
                         // cover number whenever it is >= 1
};

SeparatorCertificate separator_bound(const Graph& g, const std::vector<int>& separator);

// First separator (lexicographic, by size) of at most max_size vertices whose
// bound exceeds k, if any.
std::optional<SeparatorCertificate> find_separator(const Graph& g, int k, int max_size = 2);

// Randomized path builder with endpoint rotations; returns at most k paths
// covering the graph, or nullopt if no restart succeeds.  Any returned cover
// has been validated.
std::optional<std::vector<std::vector<int>>> greedy_path_cover(const Graph& g, int k,
                                                               std::uint64_t seed,
                                                               int restarts = 32);

enum class Coverable { yes, no, unknown };

struct CoverOptions {
    int dp_cap = 20;
    bool try_closure = true;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
    int greedy_restarts = 32;
    int separator_max = 2;
};

struct CoverEvidence {
    Coverable verdict = Coverable::unknown;
    std::string route; // "dp", "closure", "greedy", "separator", "none"
    std::optional<PathCoverResult> exact;
    std::optional<std::vector<std::vector<int>>> witness;
    std::optional<SeparatorCertificate> separator;
};

// Decision procedure for cover number <= k.  Small orders go through the DP
// (definitive); larger ones through certificates: a complete degree-sum
// closure at threshold n-k proves yes, a validated greedy cover proves yes,
// a separator with bound > k proves no.
CoverEvidence is_k_path_coverable(const Graph& g, int k, const CoverOptions& opt = {});

} // namespace qpath
