#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace gbond {

// Adjacency rows are single machine words. Everything in this library is
// sized for exhaustive search on desk-scale graphs, so the cap is a hard
// error, not an assumption.
inline constexpr int kMaxVertices = 64;

// Set of vertex indices packed into one word. All set bits must be < the
// order of the graph the set refers to; operations never produce bits >= 64.
class VertexSet {
public:
    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    // {0, 1, ..., n-1}
    static constexpr VertexSet all(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool test(int v) const { return (bits_ >> v) & 1; }
    constexpr VertexSet& set(int v) { bits_ |= std::uint64_t{1} << v; return *this; }
    constexpr VertexSet& reset(int v) { bits_ &= ~(std::uint64_t{1} << v); return *this; }

    int count() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    // lowest set index, -1 when empty
    int lowest() const { return bits_ ? std::countr_zero(bits_) : -1; }

    constexpr std::uint64_t bits() const { return bits_; }

    constexpr bool contains(VertexSet other) const { return (other.bits_ & ~bits_) == 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const;

    class const_iterator {
    public:
        using value_type = int;
        int operator*() const { return std::countr_zero(rest_); }
        const_iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        bool operator==(const const_iterator&) const = default;
    private:
        friend class VertexSet;
        explicit const_iterator(std::uint64_t rest) : rest_(rest) {}
        std::uint64_t rest_;
    };
    const_iterator begin() const { return const_iterator(bits_); }
    const_iterator end() const { return const_iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

// Undirected edge in canonical orientation u < v. The constructor sorts the
// endpoints; validity against a host graph is checked by the graph ops.
struct Edge {
    int u;
    int v;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    auto operator<=>(const Edge&) const = default;
};

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is kept
// symmetric and irreflexive by construction; every constructor re-validates.
class Graph {
public:
    static Graph from_edge_list(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const { return std::popcount(adj_[v]); }

    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    VertexSet closed_neighborhood(int v) const;
    VertexSet vertices() const { return VertexSet::all(n_); }

    // common degree if the graph is regular
    std::optional<int> regularity() const;

    Graph complement() const;
    Graph remove_edges(std::span<const Edge> removed) const;

    // all edges in canonical lexicographic (u, v) order; this ordering is the
    // contract for deterministic edge-subset enumeration
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    Graph(int n, std::vector<std::uint64_t> adj);
    void validate() const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Plain text edge list: first line "n m", then m lines "u v".
Graph read_edge_list(std::istream& in);

} // namespace gbond
