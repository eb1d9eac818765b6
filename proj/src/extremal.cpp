#include "qpath/extremal.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace qpath {

namespace {

void check_params(int n, int k, int delta) {
    if (k < 1) throw std::invalid_argument("family: k must be at least 1");
    if (delta < 1) throw std::invalid_argument("family: delta must be at least 1");
    if (n < 2 * delta + k + 1)
        throw std::invalid_argument("family: order " + std::to_string(n) +
                                    " below 2*delta+k+1 = " + std::to_string(2 * delta + k + 1));
}

std::vector<std::pair<int, int>> normalize_eprime(int n, int k, int delta,
                                                  std::vector<std::pair<int, int>> eprime) {
    const int w = n - delta - k; // |Y u Z|
    for (auto& [u, v] : eprime) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= w || u == v)
            throw std::invalid_argument("deletion set: pair " + std::to_string(u) + "-" +
                                        std::to_string(v) + " is not inside Y u Z");
    }
    std::sort(eprime.begin(), eprime.end());
    if (std::adjacent_find(eprime.begin(), eprime.end()) != eprime.end())
        throw std::invalid_argument("deletion set: duplicate pair");
    return eprime;
}

} // namespace

BFamily build_base(int n, int k, int delta) {
    check_params(n, k, delta);
    BFamily fam;
    fam.n = n;
    fam.k = k;
    fam.delta = delta;
    Graph core = Graph::disjoint_union(Graph::complete(n - 2 * delta - k), Graph::empty(delta + k));
    fam.graph = Graph::join(Graph::complete(delta), core);
    for (int v = 0; v < delta; ++v) fam.Y.push_back(v);
    for (int v = delta; v < n - delta - k; ++v) fam.Z.push_back(v);
    for (int v = n - delta - k; v < n; ++v) fam.X.push_back(v);
    return fam;
}

std::vector<std::pair<int, int>> deletable_pairs(int n, int k, int delta) {
    check_params(n, k, delta);
    const int w = n - delta - k;
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(w) * (w - 1) / 2);
    for (int u = 0; u < w; ++u)
        for (int v = u + 1; v < w; ++v) out.emplace_back(u, v);
    return out;
}

long long deletable_pair_count(int n, int k, int delta) {
    check_params(n, k, delta);
    const long long w = n - delta - k;
    return w * (w - 1) / 2;
}

long long deletion_budget(int k, int delta) {
    if (k < 1 || delta < 1) throw std::invalid_argument("deletion_budget: k, delta must be >= 1");
    return static_cast<long long>(delta) * (delta + k) / 4;
}

Graph build_member_within_budget(int n, int k, int delta,
                                 const std::vector<std::pair<int, int>>& eprime) {
    auto es = normalize_eprime(n, k, delta, eprime);
    if (static_cast<long long>(es.size()) > deletion_budget(k, delta))
        throw std::invalid_argument("deletion set exceeds the budget " +
                                    std::to_string(deletion_budget(k, delta)));
    Graph g = build_base(n, k, delta).graph;
    for (auto [u, v] : es) g.remove_edge(u, v);
    return g;
}

Graph build_member_past_budget(int n, int k, int delta,
                               const std::vector<std::pair<int, int>>& eprime) {
    auto es = normalize_eprime(n, k, delta, eprime);
    if (static_cast<long long>(es.size()) != deletion_budget(k, delta) + 1)
        throw std::invalid_argument("deletion set must have exactly budget+1 = " +
                                    std::to_string(deletion_budget(k, delta) + 1) + " pairs");
    Graph g = build_base(n, k, delta).graph;
    for (auto [u, v] : es) g.remove_edge(u, v);
    return g;
}

std::vector<std::vector<std::pair<int, int>>> sample_deletions(int n, int k, int delta, int size,
                                                               int count, std::uint64_t seed) {
    check_params(n, k, delta);
    if (size < 0 || count < 0) throw std::invalid_argument("sample_deletions: negative argument");

    const auto pool = deletable_pairs(n, k, delta);
    const long long m = static_cast<long long>(pool.size());
    if (size > m) throw std::invalid_argument("sample_deletions: size exceeds the pair pool");

    // number of distinct deletion sets, saturating
    long long distinct = 1;
    for (int i = 0; i < size; ++i) {
        if (distinct > (1LL << 61) / std::max(1LL, m)) {
            distinct = 1LL << 61;
            break;
        }
        distinct = distinct * (m - i) / (i + 1);
    }
    if (count > distinct)
        throw std::invalid_argument("sample_deletions: only " + std::to_string(distinct) +
                                    " distinct sets exist");

    std::set<std::vector<int>> chosen; // index sets into pool, sorted
    std::vector<std::vector<std::pair<int, int>>> out;
    auto emit = [&](std::vector<int> idx) {
        std::sort(idx.begin(), idx.end());
        if (static_cast<int>(out.size()) >= count) return;
        if (!chosen.insert(idx).second) return;
        std::vector<std::pair<int, int>> es;
        es.reserve(idx.size());
        for (int i : idx) es.push_back(pool[i]);
        out.push_back(std::move(es));
    };

    auto pair_index = [&](int u, int v) {
        auto it = std::lower_bound(pool.begin(), pool.end(), std::make_pair(u, v));
        return static_cast<int>(it - pool.begin());
    };

    const int zlo = delta, zhi = n - delta - k; // Z = [zlo, zhi)
    const int zsize = zhi - zlo;
    if (size >= 1) {
        // matching inside Z
        if (2 * size <= zsize) {
            std::vector<int> idx;
            for (int i = 0; i < size; ++i) idx.push_back(pair_index(zlo + 2 * i, zlo + 2 * i + 1));
            emit(std::move(idx));
        }
        // star inside Z
        if (size + 1 <= zsize) {
            std::vector<int> idx;
            for (int i = 0; i < size; ++i) idx.push_back(pair_index(zlo, zlo + 1 + i));
            emit(std::move(idx));
        }
        // star at the first Y vertex, into Z
        if (size <= zsize) {
            std::vector<int> idx;
            for (int i = 0; i < size; ++i) idx.push_back(pair_index(0, zlo + i));
            emit(std::move(idx));
        }
        // lexicographic block
        {
            std::vector<int> idx;
            for (int i = 0; i < size; ++i) idx.push_back(i);
            emit(std::move(idx));
        }
    } else {
        emit({});
    }

    std::mt19937_64 rng(seed);
    while (static_cast<int>(out.size()) < count) {
        // Floyd's algorithm: a uniform size-subset of [0, m)
        std::vector<int> idx;
        for (long long j = m - size; j < m; ++j) {
            std::uniform_int_distribution<long long> dist(0, j);
            long long t = dist(rng);
            if (std::find(idx.begin(), idx.end(), static_cast<int>(t)) == idx.end())
                idx.push_back(static_cast<int>(t));
            else
                idx.push_back(static_cast<int>(j));
        }
        emit(std::move(idx));
    }
    return out;
}

Thresholds thresholds(int n, int k, int delta) {
    check_params(n, k, delta);
    Thresholds t;
    t.q_threshold = 2.0 * (n - delta - k - 1);
    const long long a = n - k - delta - 1, b = n - k - delta - 2;
    t.edge_threshold = static_cast<double>(a * b / 2 + static_cast<long long>(delta + k + 1) * (delta + 1));
    const long long s = static_cast<long long>(delta) * delta + static_cast<long long>(k) * delta;
    t.n_min_spectral = (s + 7LL * delta + 6LL * k + 9) * (s + 1);
    t.n_min_edges = 8LL * delta + 6LL * k + 7;
    t.budget = deletion_budget(k, delta);
    return t;
}

namespace {

// Backtracking over candidate X vertices (degree <= delta), keeping the set
// independent and the union of neighbourhoods within delta vertices.
struct SubgraphSearch {
    const Graph* g;
    int need = 0, delta = 0;
    std::vector<int> cand;
    std::vector<int> picked;
    std::vector<int> pool; // union of neighbourhoods of picked
    bool found = false;

    bool independent_from_picked(int v) {
        for (int u : picked)
            if (g->adjacent(u, v)) return false;
        return true;
    }

    void dfs(std::size_t from) {
        if (found) return;
        if (static_cast<int>(picked.size()) == need) {
            found = true;
            return;
        }
        for (std::size_t i = from; i < cand.size() && !found; ++i) {
            int v = cand[i];
            if (!independent_from_picked(v)) continue;
            std::vector<int> added;
            for (int w : g->neighbors(v))
                if (std::find(pool.begin(), pool.end(), w) == pool.end()) added.push_back(w);
            if (static_cast<int>(pool.size() + added.size()) > delta) continue;
            for (int w : added) pool.push_back(w);
            picked.push_back(v);
            dfs(i + 1);
            if (found) return;
            picked.pop_back();
            pool.resize(pool.size() - added.size());
        }
    }
};

} // namespace

std::optional<std::vector<char>> roles_if_spanning_subgraph(const Graph& g, int k, int delta) {
    const int n = g.order();
    if (k < 1 || delta < 1 || n < 2 * delta + k + 1) return std::nullopt;

    SubgraphSearch s;
    s.g = &g;
    s.need = delta + k;
    s.delta = delta;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) <= delta) s.cand.push_back(v);
    if (static_cast<int>(s.cand.size()) < s.need) return std::nullopt;
    // low-degree candidates first: they constrain the pool least
    std::stable_sort(s.cand.begin(), s.cand.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    s.dfs(0);
    if (!s.found) return std::nullopt;

    std::vector<char> roles(n, 'Z');
    for (int v : s.picked) roles[v] = 'X';
    for (int v : s.pool) roles[v] = 'Y';
    // top the Y side up to exactly delta vertices
    int have = static_cast<int>(s.pool.size());
    for (int v = 0; v < n && have < delta; ++v) {
        if (roles[v] == 'Z') {
            roles[v] = 'Y';
            ++have;
        }
    }
    return roles;
}

std::optional<std::vector<char>> roles_if_member_within_budget(const Graph& g, int k, int delta) {
    const int n = g.order();
    if (k < 1 || delta < 1 || n < 2 * delta + k + 1) return std::nullopt;
    const long long budget = deletion_budget(k, delta);

    // X vertices of a member keep degree exactly delta and share their
    // neighbourhood (all of Y).  Group degree-delta vertices by adjacency row.
    std::vector<int> flat;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == delta) flat.push_back(v);
    if (static_cast<int>(flat.size()) < delta + k) return std::nullopt;

    std::vector<char> used(n, 0);
    for (std::size_t lead = 0; lead < flat.size(); ++lead) {
        int v0 = flat[lead];
        if (used[v0]) continue;
        std::vector<int> group{v0};
        for (std::size_t j = lead + 1; j < flat.size(); ++j) {
            int u = flat[j];
            if (std::equal(g.row(v0), g.row(v0) + g.row_words(), g.row(u))) group.push_back(u);
        }
        for (int u : group) used[u] = 1;
        if (static_cast<int>(group.size()) < delta + k) continue;

        std::vector<char> roles(n, 'Z');
        for (int i = 0; i < delta + k; ++i) roles[group[i]] = 'X';
        for (int y : g.neighbors(v0)) roles[y] = 'Y';

        long long missing = 0;
        for (int u = 0; u < n; ++u) {
            if (roles[u] == 'X') continue;
            for (int v = u + 1; v < n; ++v)
                if (roles[v] != 'X' && !g.adjacent(u, v)) ++missing;
        }
        if (missing <= budget) return roles;
    }
    return std::nullopt;
}

} // namespace qpath
