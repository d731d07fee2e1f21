#ifndef LSPAN_GRAPH_HPP
#define LSPAN_GRAPH_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "lspan/vertex_set.hpp"

namespace lspan {

/// Undirected simple graph on vertices 0..n-1. Immutable once built; the
/// distance-<=2 relation (the graph square) is computed at construction so
/// dist_le2 queries are constant time and instances can be shared across
/// threads without synchronization.
class Graph {
public:
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Builds a graph from an edge list. Rejects out-of-range endpoints,
    /// self-loops and duplicate edges with std::invalid_argument.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    int max_degree() const;

    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    /// Vertices at distance 1 or 2 from v (never v itself).
    const VertexSet& square_neighbors(int v) const {
        return square_adj_[static_cast<std::size_t>(v)];
    }

    VertexSet vertices() const { return VertexSet::range(n_); }

    /// Open neighborhood of a set: union of N(v) over v in xs.
    VertexSet neighborhood(const VertexSet& xs) const;

    /// True iff u != v and dist(u, v) <= 2. Throws std::out_of_range for
    /// invalid vertex indices.
    bool dist_le2(int u, int v) const;

    /// True iff all members of xs are pairwise at distance > 2.
    bool is_2packing(const VertexSet& xs) const;

    /// The graph square: same vertices, edges between all pairs at
    /// distance 1 or 2.
    Graph square() const;

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void add_edge_unchecked(int u, int v);
    void build_square();

    int n_;
    std::size_t m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<VertexSet> square_adj_;
};

} // namespace lspan

#endif
