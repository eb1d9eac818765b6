#include "qpath/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace qpath {

namespace {

// Vertex invariant: (degree, sorted neighbour degrees).  Isomorphisms must
// respect it, so it both buckets graphs and prunes the mapping search.
std::vector<std::vector<int>> vertex_invariants(const Graph& g) {
    std::vector<std::vector<int>> inv(g.order());
    for (int v = 0; v < g.order(); ++v) {
        std::vector<int> nd;
        for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        nd.insert(nd.begin(), g.degree(v));
        inv[v] = std::move(nd);
    }
    return inv;
}

long long triangle_count(const Graph& g) {
    long long t = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) continue;
            for (int w = v + 1; w < g.order(); ++w)
                if (g.adjacent(u, w) && g.adjacent(v, w)) ++t;
        }
    return t;
}

// Graph invariant used as a bucket key.
struct Key {
    long long edges;
    long long triangles;
    std::vector<std::vector<int>> sorted_inv;
    bool operator<(const Key& o) const {
        if (edges != o.edges) return edges < o.edges;
        if (triangles != o.triangles) return triangles < o.triangles;
        return sorted_inv < o.sorted_inv;
    }
};

Key key_of(const Graph& g) {
    Key k{g.edge_count(), triangle_count(g), vertex_invariants(g)};
    std::sort(k.sorted_inv.begin(), k.sorted_inv.end());
    return k;
}

bool extend_mapping(const Graph& g, const Graph& h, const std::vector<std::vector<int>>& gi,
                    const std::vector<std::vector<int>>& hi, std::vector<int>& map,
                    std::vector<char>& taken, int v) {
    const int n = g.order();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (taken[w] || gi[v] != hi[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.adjacent(u, v) != h.adjacent(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        taken[w] = 1;
        if (extend_mapping(g, h, gi, hi, map, taken, v + 1)) return true;
        taken[w] = 0;
    }
    return false;
}

} // namespace

bool isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    const int n = g.order();
    if (n == 0) return true;
    auto gi = vertex_invariants(g), hi = vertex_invariants(h);
    {
        auto gs = gi, hs = hi;
        std::sort(gs.begin(), gs.end());
        std::sort(hs.begin(), hs.end());
        if (gs != hs) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<char> taken(n, 0);
    return extend_mapping(g, h, gi, hi, map, taken, 0);
}

std::vector<Graph> all_graphs_up_to_iso(int n, bool connected_only) {
    if (n < 0) throw std::invalid_argument("enumeration: negative order");
    if (n > 8) throw std::invalid_argument("enumeration: guarded to n <= 8");

    std::vector<Graph> level{Graph(0)};
    for (int size = 1; size <= n; ++size) {
        std::map<Key, std::vector<int>> buckets; // key -> indices into next
        std::vector<Graph> next;
        for (const Graph& parent : level) {
            const int base = parent.order();
            for (std::uint32_t nb = 0; nb < (1u << base); ++nb) {
                Graph cand(base + 1);
                for (int u = 0; u < base; ++u) {
                    for (int v : parent.neighbors(u))
                        if (u < v) cand.add_edge(u, v);
                    if ((nb >> u) & 1u) cand.add_edge(u, base);
                }
                Key key = key_of(cand);
                auto& bucket = buckets[key];
                bool dup = false;
                for (int idx : bucket)
                    if (isomorphic(cand, next[idx])) {
                        dup = true;
                        break;
                    }
                if (!dup) {
                    bucket.push_back(static_cast<int>(next.size()));
                    next.push_back(std::move(cand));
                }
            }
        }
        level = std::move(next);
    }

    if (connected_only) {
        if (n == 0) return {};
        std::vector<Graph> kept;
        for (Graph& g : level)
            if (is_connected(g)) kept.push_back(std::move(g));
        return kept;
    }
    return level;
}

void for_each_graph_up_to_iso(int n, bool connected_only,
                              const std::function<void(const Graph&)>& fn) {
    for (const Graph& g : all_graphs_up_to_iso(n, connected_only)) fn(g);
}

long long count_graphs_up_to_iso(int n, bool connected_only) {
    return static_cast<long long>(all_graphs_up_to_iso(n, connected_only).size());
}

} // namespace qpath
