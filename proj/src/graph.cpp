#include "lspan/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lspan {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (n > VertexSet::capacity)
        throw std::invalid_argument("vertex count " + std::to_string(n) +
                                    " exceeds configured maximum " +
                                    std::to_string(VertexSet::capacity));
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
    square_adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (g.has_edge(u, v)) throw std::invalid_argument("duplicate edge rejected");
        g.add_edge_unchecked(u, v);
    }
    g.build_square();
    return g;
}

void Graph::add_edge_unchecked(int u, int v) {
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
    ++m_;
}

void Graph::build_square() {
    for (int u = 0; u < n_; ++u) {
        VertexSet reach = adj_[static_cast<std::size_t>(u)];
        for (int w : adj_[static_cast<std::size_t>(u)])
            reach |= adj_[static_cast<std::size_t>(w)];
        reach.remove(u);
        square_adj_[static_cast<std::size_t>(u)] = reach;
    }
}

bool Graph::has_edge(int u, int v) const {
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

VertexSet Graph::neighborhood(const VertexSet& xs) const {
    VertexSet out;
    for (int v : xs) out |= adj_[static_cast<std::size_t>(v)];
    return out;
}

bool Graph::dist_le2(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("vertex index out of range");
    return u != v && square_adj_[static_cast<std::size_t>(u)].contains(v);
}

bool Graph::is_2packing(const VertexSet& xs) const {
    for (int v : xs)
        if (square_adj_[static_cast<std::size_t>(v)].intersects(xs)) return false;
    return true;
}

Graph Graph::square() const {
    std::vector<std::pair<int, int>> sq_edges;
    for (int u = 0; u < n_; ++u)
        for (int v : square_adj_[static_cast<std::size_t>(u)])
            if (u < v) sq_edges.emplace_back(u, v);
    return from_edges(n_, sq_edges);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

} // namespace lspan
