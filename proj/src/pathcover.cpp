#include "qpath/pathcover.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "qpath/closure.hpp"

namespace qpath {

namespace {

constexpr std::uint8_t kInf = 0xFF;

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.order(), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) adj[u] |= 1u << v;
    return adj;
}

} // namespace

PathCoverResult min_path_cover(const Graph& g, int dp_cap) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("min_path_cover: graph must have at least one vertex");
    if (dp_cap > 25) throw std::invalid_argument("min_path_cover: dp_cap beyond 25 is unsupported");
    if (n > dp_cap)
        throw std::invalid_argument("min_path_cover: order " + std::to_string(n) +
                                    " exceeds dp cap " + std::to_string(dp_cap));

    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    const auto adj = adjacency_masks(g);

    // dp[mask][e]: fewest paths covering exactly mask with the current path
    // ending at e.
    std::vector<std::uint8_t> dp(static_cast<std::size_t>(full + 1) * n, kInf);
    auto at = [&](std::uint32_t mask, int e) -> std::uint8_t& {
        return dp[static_cast<std::size_t>(mask) * n + e];
    };
    for (int v = 0; v < n; ++v) at(1u << v, v) = 1;

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint8_t best = kInf;
        for (int e = 0; e < n; ++e) {
            std::uint8_t cur = at(mask, e);
            if (cur == kInf) continue;
            best = std::min(best, cur);
            // extend the open path along an edge
            std::uint32_t cand = adj[e] & ~mask;
            while (cand) {
                int u = std::countr_zero(cand);
                cand &= cand - 1;
                std::uint8_t& slot = at(mask | (1u << u), u);
                if (cur < slot) slot = cur;
            }
        }
        if (best == kInf || best == kInf - 1) continue;
        // close the open path, start a new one anywhere
        std::uint32_t cand = full & ~mask;
        while (cand) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            std::uint8_t& slot = at(mask | (1u << u), u);
            if (best + 1 < slot) slot = static_cast<std::uint8_t>(best + 1);
        }
    }

    int end = 0;
    for (int e = 1; e < n; ++e)
        if (at(full, e) < at(full, end)) end = e;

    PathCoverResult res;
    res.cover_number = at(full, end);

    // Reconstruct by replaying transitions backwards; emits (vertex, starts a
    // path) from last insertion to first.
    std::vector<std::pair<int, bool>> trail;
    std::uint32_t mask = full;
    int e = end;
    while (true) {
        std::uint8_t cur = at(mask, e);
        std::uint32_t rest = mask & ~(1u << e);
        if (rest == 0) {
            trail.emplace_back(e, true);
            break;
        }
        int prev = -1;
        std::uint32_t cand = adj[e] & rest;
        while (cand) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            if (at(rest, u) == cur) {
                prev = u;
                break;
            }
        }
        if (prev >= 0) {
            trail.emplace_back(e, false);
        } else {
            for (int u = 0; u < n && prev < 0; ++u)
                if ((rest >> u) & 1u)
                    if (at(rest, u) + 1 == cur) prev = u;
            if (prev < 0) throw std::logic_error("min_path_cover: broken dp trail");
            trail.emplace_back(e, true);
        }
        mask = rest;
        e = prev;
    }

    std::vector<int> open;
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        auto [v, starts] = *it;
        if (starts && !open.empty()) {
            res.paths.push_back(open);
            open.clear();
        }
        open.push_back(v);
    }
    res.paths.push_back(open);

    if (auto err = validate_path_cover(g, res.paths))
        throw std::logic_error("min_path_cover: reconstructed witness invalid: " + *err);
    if (static_cast<int>(res.paths.size()) != res.cover_number)
        throw std::logic_error("min_path_cover: witness size disagrees with dp value");
    return res;
}

namespace {

struct BruteState {
    const std::vector<std::uint32_t>* adj;
    int n = 0;
    int best = 0;
    std::vector<int> stack;               // vertices in insertion order
    std::vector<std::uint8_t> starts;     // parallel flags
    std::vector<int> best_stack;
    std::vector<std::uint8_t> best_starts;
};

void brute_dfs(BruteState& st, std::uint32_t remaining, int endpoint, int used) {
    if (used >= st.best) return; // cannot improve
    if (remaining == 0) {
        st.best = used;
        st.best_stack = st.stack;
        st.best_starts = st.starts;
        return;
    }
    if (endpoint >= 0) {
        std::uint32_t cand = (*st.adj)[endpoint] & remaining;
        while (cand) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            st.stack.push_back(u);
            st.starts.push_back(0);
            brute_dfs(st, remaining & ~(1u << u), u, used);
            st.stack.pop_back();
            st.starts.pop_back();
        }
    }
    std::uint32_t cand = remaining;
    while (cand) {
        int u = std::countr_zero(cand);
        cand &= cand - 1;
        st.stack.push_back(u);
        st.starts.push_back(1);
        brute_dfs(st, remaining & ~(1u << u), u, used + 1);
        st.stack.pop_back();
        st.starts.pop_back();
    }
}

} // namespace

PathCoverResult min_path_cover_brute(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("min_path_cover_brute: empty graph");
    if (n > 9) throw std::invalid_argument("min_path_cover_brute: guarded to n <= 9");

    const auto adj = adjacency_masks(g);
    BruteState st;
    st.adj = &adj;
    st.n = n;
    st.best = n + 1;
    brute_dfs(st, (1u << n) - 1, -1, 0);

    PathCoverResult res;
    res.cover_number = st.best;
    for (std::size_t i = 0; i < st.best_stack.size(); ++i) {
        if (st.best_starts[i]) res.paths.emplace_back();
        res.paths.back().push_back(st.best_stack[i]);
    }
    if (auto err = validate_path_cover(g, res.paths))
        throw std::logic_error("min_path_cover_brute: witness invalid: " + *err);
    return res;
}

std::optional<std::string> validate_path_cover(const Graph& g,
                                               const std::vector<std::vector<int>>& paths) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (std::size_t p = 0; p < paths.size(); ++p) {
        const auto& path = paths[p];
        if (path.empty()) return "path " + std::to_string(p) + " is empty";
        for (std::size_t i = 0; i < path.size(); ++i) {
            int v = path[i];
            if (v < 0 || v >= n) return "vertex out of range in path " + std::to_string(p);
            if (seen[v]) return "vertex " + std::to_string(v) + " covered twice";
            seen[v] = 1;
            ++covered;
            if (i > 0 && !g.adjacent(path[i - 1], v))
                return "missing edge " + std::to_string(path[i - 1]) + "-" + std::to_string(v);
        }
    }
    if (covered != n) return "covered " + std::to_string(covered) + " of " + std::to_string(n);
    return std::nullopt;
}

SeparatorCertificate separator_bound(const Graph& g, const std::vector<int>& separator) {
    SeparatorCertificate cert;
    cert.separator = separator;
    std::sort(cert.separator.begin(), cert.separator.end());
    if (std::adjacent_find(cert.separator.begin(), cert.separator.end()) != cert.separator.end())
        throw std::invalid_argument("separator_bound: duplicate vertex");
    cert.components_after = component_count_excluding(g, cert.separator);
    cert.bound = cert.components_after - static_cast<long long>(cert.separator.size());
    return cert;
}

std::optional<SeparatorCertificate> find_separator(const Graph& g, int k, int max_size) {
    const int n = g.order();
    // size 0, then 1, then 2: lexicographically first hit wins
    for (int size = 0; size <= max_size; ++size) {
        if (size == 0) {
            auto cert = separator_bound(g, {});
            if (cert.bound > k) return cert;
        } else if (size == 1) {
            for (int a = 0; a < n; ++a) {
                auto cert = separator_bound(g, {a});
                if (cert.bound > k) return cert;
            }
        } else if (size == 2) {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    auto cert = separator_bound(g, {a, b});
                    if (cert.bound > k) return cert;
                }
        } else {
            break; // larger separators are not searched
        }
    }
    return std::nullopt;
}

namespace {

// Grows one path inside the still-uncovered subgraph.  Extends both ends;
// when stuck, pivots the back end along an edge into the path interior and
// retries.  Budgeted so a restart always terminates.
std::vector<int> grow_path(const Graph& g, const std::vector<char>& alive, int start,
                           std::mt19937_64& rng) {
    std::vector<int> path{start};
    std::vector<char> in_path(g.order(), 0);
    in_path[start] = 1;

    auto usable = [&](int v) { return alive[v] && !in_path[v]; };
    auto pick_extension = [&](int end) -> int {
        int chosen = -1, count = 0;
        for (int v : g.neighbors(end))
            if (usable(v) && static_cast<int>(rng() % static_cast<std::uint64_t>(++count)) == 0)
                chosen = v;
        return chosen;
    };

    int budget = 8 * g.order() + 16;
    while (budget-- > 0) {
        int ext = pick_extension(path.back());
        if (ext >= 0) {
            path.push_back(ext);
            in_path[ext] = 1;
            continue;
        }
        std::reverse(path.begin(), path.end());
        ext = pick_extension(path.back());
        if (ext >= 0) {
            path.push_back(ext);
            in_path[ext] = 1;
            continue;
        }
        if (path.size() < 3) break;
        // rotation: back end adjacent to some interior vertex path[i] lets us
        // reverse the tail and expose path[i+1] as the new end
        int pivots = 0, pick = -1;
        for (std::size_t i = 0; i + 2 < path.size(); ++i)
            if (g.adjacent(path.back(), path[i]) &&
                static_cast<int>(rng() % static_cast<std::uint64_t>(++pivots)) == 0)
                pick = static_cast<int>(i);
        if (pick < 0) break;
        std::reverse(path.begin() + pick + 1, path.end());
    }
    return path;
}

} // namespace

std::optional<std::vector<std::vector<int>>> greedy_path_cover(const Graph& g, int k,
                                                               std::uint64_t seed, int restarts) {
    const int n = g.order();
    if (n == 0) return std::vector<std::vector<int>>{};
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::vector<char> alive(n, 1);
        int left = n;
        std::vector<std::vector<int>> paths;
        bool failed = false;
        while (left > 0) {
            if (static_cast<int>(paths.size()) == k) {
                failed = true;
                break;
            }
            // start from a minimum-degree survivor (ties at random)
            int best_deg = n + 1, start = -1, count = 0;
            for (int v = 0; v < n; ++v) {
                if (!alive[v]) continue;
                int d = 0;
                for (int w : g.neighbors(v)) d += alive[w];
                if (d < best_deg) {
                    best_deg = d;
                    start = v;
                    count = 1;
                } else if (d == best_deg &&
                           static_cast<int>(rng() % static_cast<std::uint64_t>(++count)) == 0) {
                    start = v;
                }
            }
            auto path = grow_path(g, alive, start, rng);
            for (int v : path) alive[v] = 0;
            left -= static_cast<int>(path.size());
            paths.push_back(std::move(path));
        }
        if (!failed && !validate_path_cover(g, paths)) return paths;
    }
    return std::nullopt;
}

CoverEvidence is_k_path_coverable(const Graph& g, int k, const CoverOptions& opt) {
    if (k < 1) throw std::invalid_argument("is_k_path_coverable: k must be positive");
    CoverEvidence ev;
    if (g.order() == 0) {
        ev.verdict = Coverable::yes;
        ev.route = "empty";
        ev.witness = std::vector<std::vector<int>>{};
        return ev;
    }
    if (g.order() <= opt.dp_cap) {
        ev.exact = min_path_cover(g, opt.dp_cap);
        ev.verdict = ev.exact->cover_number <= k ? Coverable::yes : Coverable::no;
        ev.route = "dp";
        if (ev.verdict == Coverable::yes) ev.witness = ev.exact->paths;
        return ev;
    }
    if (opt.try_closure && closure_is_complete(g, g.order() - k)) {
        // cover-by-<=k-paths survives the degree-sum closure at n-k, and the
        // complete graph is coverable by one path
        ev.verdict = Coverable::yes;
        ev.route = "closure";
        return ev;
    }
    if (auto paths = greedy_path_cover(g, k, opt.seed, opt.greedy_restarts)) {
        ev.verdict = Coverable::yes;
        ev.route = "greedy";
        ev.witness = std::move(paths);
        return ev;
    }
    if (auto cert = find_separator(g, k, opt.separator_max)) {
        ev.verdict = Coverable::no;
        ev.route = "separator";
        ev.separator = std::move(cert);
        return ev;
    }
    ev.verdict = Coverable::unknown;
    ev.route = "none";
    return ev;
}

} // namespace qpath
