#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qpath {

// Simple undirected graph on vertices 0..n-1.  Adjacency is a packed bit
// matrix, one 64-bit row segment per 64 vertices; degrees are kept current on
// every edge change.  Self-loops and multi-edges cannot be represented.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    long long edge_count() const { return edges_; }
    int row_words() const { return words_; }

    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);    // no-op if already present
    void remove_edge(int u, int v); // no-op if absent

    int degree(int v) const;
    int min_degree() const; // n >= 1 required
    int max_degree() const; // n >= 1 required
    std::vector<int> neighbors(int v) const;
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    // Vertices not listed in keep are dropped; survivors are relabelled in the
    // order given (which must be duplicate-free).
    Graph induced(const std::vector<int>& keep) const;
    Graph remove_vertices(const std::vector<int>& drop) const;
    Graph complement() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

    static Graph empty(int n);
    static Graph complete(int n);
    static Graph path(int n);   // n >= 1
    static Graph cycle(int n);  // n >= 3
    static Graph complete_bipartite(int a, int b);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph disjoint_union(const Graph& g, const Graph& h);
    // Disjoint union plus every edge between the two sides.  Vertices of g
    // keep their labels; h is shifted by g.order().
    static Graph join(const Graph& g, const Graph& h);

  private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    int words_ = 0;
    long long edges_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> deg_;
};

std::vector<std::vector<int>> components(const Graph& g);
int component_count(const Graph& g); // 0 for the null graph
bool is_connected(const Graph& g);   // n >= 1 required

// Components of g minus the given vertices, without materializing the
// induced subgraph.
int component_count_excluding(const Graph& g, const std::vector<int>& removed);

} // namespace qpath
