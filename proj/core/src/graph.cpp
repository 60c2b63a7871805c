#include "gbond/graph.hpp"

#include <istream>
#include <stdexcept>
#include <string>

namespace gbond {

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v : *this) out.push_back(v);
    return out;
}

Graph::Graph(int n, std::vector<std::uint64_t> adj) : n_(n), adj_(std::move(adj)) {
    int degree_sum = 0;
    for (int v = 0; v < n_; ++v) degree_sum += std::popcount(adj_[v]);
    m_ = degree_sum / 2;
    validate();
}

void Graph::validate() const {
    if (n_ < 1 || n_ > kMaxVertices)
        throw std::logic_error("graph order out of range: " + std::to_string(n_));
    const std::uint64_t full = VertexSet::all(n_).bits();
    int degree_sum = 0;
    for (int u = 0; u < n_; ++u) {
        if (adj_[u] & ~full)
            throw std::logic_error("adjacency row has bits beyond order");
        if ((adj_[u] >> u) & 1)
            throw std::logic_error("loop at vertex " + std::to_string(u));
        for (int v : VertexSet(adj_[u]))
            if (!((adj_[v] >> u) & 1))
                throw std::logic_error("asymmetric adjacency at " + std::to_string(u) + "," + std::to_string(v));
        degree_sum += std::popcount(adj_[u]);
    }
    if (degree_sum != 2 * m_)
        throw std::logic_error("edge count does not match degree sum");
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 1.." +
                                    std::to_string(kMaxVertices));
    std::vector<std::uint64_t> adj(n, 0);
    for (const Edge& e : edges) {
        if (e.u == e.v)
            throw std::invalid_argument("loop edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        if (e.u < 0 || e.v >= n)
            throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " has endpoint outside 0.." + std::to_string(n - 1));
        if ((adj[e.u] >> e.v) & 1)
            throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        adj[e.u] |= std::uint64_t{1} << e.v;
        adj[e.v] |= std::uint64_t{1} << e.u;
    }
    return Graph(n, std::move(adj));
}

VertexSet Graph::closed_neighborhood(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
    return VertexSet(adj_[v] | (std::uint64_t{1} << v));
}

std::optional<int> Graph::regularity() const {
    const int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

Graph Graph::complement() const {
    const std::uint64_t full = VertexSet::all(n_).bits();
    std::vector<std::uint64_t> adj(n_);
    for (int v = 0; v < n_; ++v)
        adj[v] = ~adj_[v] & full & ~(std::uint64_t{1} << v);
    return Graph(n_, std::move(adj));
}

Graph Graph::remove_edges(std::span<const Edge> removed) const {
    std::vector<std::uint64_t> adj = adj_;
    for (const Edge& e : removed) {
        if (e.u < 0 || e.v >= n_ || e.u == e.v || !has_edge(e.u, e.v))
            throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " not present in graph");
        adj[e.u] &= ~(std::uint64_t{1} << e.v);
        adj[e.v] &= ~(std::uint64_t{1} << e.u);
    }
    return Graph(n_, std::move(adj));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet(adj_[u] & ~((std::uint64_t{2} << u) - 1)))
            out.emplace_back(u, v);
    return out;
}

Graph read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m))
        throw std::invalid_argument("edge list: missing \"n m\" header");
    if (m < 0)
        throw std::invalid_argument("edge list: negative edge count");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " +
                                        std::to_string(i));
        edges.emplace_back(u, v);
    }
    std::string extra;
    if (in >> extra)
        throw std::invalid_argument("edge list: trailing data \"" + extra + "\"");
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

} // namespace gbond
