#include "qpath/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qpath {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    deg_.assign(n, 0);
}

void Graph::check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("vertex index out of range: " + std::to_string(u) + "," +
                                std::to_string(v) + " on order " + std::to_string(n_));
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
}

bool Graph::adjacent(int u, int v) const {
    check_pair(u, v);
    return (row(u)[v >> 6] >> (v & 63)) & 1ULL;
}

void Graph::add_edge(int u, int v) {
    check_pair(u, v);
    std::uint64_t& wu = bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)];
    std::uint64_t mask = 1ULL << (v & 63);
    if (wu & mask) return;
    wu |= mask;
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
    ++deg_[u];
    ++deg_[v];
    ++edges_;
}

void Graph::remove_edge(int u, int v) {
    check_pair(u, v);
    std::uint64_t& wu = bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)];
    std::uint64_t mask = 1ULL << (v & 63);
    if (!(wu & mask)) return;
    wu &= ~mask;
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ULL << (u & 63));
    --deg_[u];
    --deg_[v];
    --edges_;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    return deg_[v];
}

int Graph::min_degree() const {
    if (n_ == 0) throw std::logic_error("min_degree of the null graph");
    return *std::min_element(deg_.begin(), deg_.end());
}

int Graph::max_degree() const {
    if (n_ == 0) throw std::logic_error("max_degree of the null graph");
    return *std::max_element(deg_.begin(), deg_.end());
}

std::vector<int> Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    std::vector<int> out;
    out.reserve(deg_[v]);
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bitsw = r[w];
        while (bitsw) {
            int b = std::countr_zero(bitsw);
            out.push_back(w * 64 + b);
            bitsw &= bitsw - 1;
        }
    }
    return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<char> seen(n_, 0);
    for (int v : keep) {
        if (v < 0 || v >= n_) throw std::out_of_range("induced: vertex out of range");
        if (seen[v]) throw std::invalid_argument("induced: duplicate vertex");
        seen[v] = 1;
    }
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph Graph::remove_vertices(const std::vector<int>& drop) const {
    std::vector<char> dead(n_, 0);
    for (int v : drop) {
        if (v < 0 || v >= n_) throw std::out_of_range("remove_vertices: vertex out of range");
        dead[v] = 1;
    }
    std::vector<int> keep;
    keep.reserve(n_);
    for (int v = 0; v < n_; ++v)
        if (!dead[v]) keep.push_back(v);
    return induced(keep);
}

Graph Graph::complement() const {
    Graph out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph Graph::empty(int n) { return Graph(n); }

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::path(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("part sizes must be non-negative");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::disjoint_union(const Graph& g, const Graph& h) {
    Graph out(g.order() + h.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out.add_edge(u, v);
    int off = g.order();
    for (int u = 0; u < h.order(); ++u)
        for (int v : h.neighbors(u))
            if (u < v) out.add_edge(off + u, off + v);
    return out;
}

Graph Graph::join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

bool is_connected(const Graph& g) {
    if (g.order() == 0) throw std::logic_error("connectivity of the null graph is undefined");
    return component_count(g) == 1;
}

int component_count_excluding(const Graph& g, const std::vector<int>& removed) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    for (int v : removed) {
        if (v < 0 || v >= n) throw std::out_of_range("component_count_excluding: vertex out of range");
        seen[v] = 1;
    }
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++count;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return count;
}

} // namespace qpath
