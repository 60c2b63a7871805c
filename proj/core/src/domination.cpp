#include "gbond/domination.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gbond {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Branch-and-bound over closed-neighborhood set cover. To dominate an
// uncovered vertex u some member of N[u] must be chosen, so branching on u
// with candidate list N[u] is complete. The lower bound greedily packs
// uncovered vertices with pairwise disjoint closed neighborhoods: each needs
// its own dominator.
struct CoverSearch {
    std::span<const std::uint64_t> closed;
    std::uint64_t full;
    int best;                 // size bound; only strictly smaller covers are recorded
    std::uint64_t best_set = 0;
    bool stop_at_first;       // decision mode: accept the first cover within the bound
    bool found = false;

    int packing_bound(std::uint64_t covered) const {
        std::uint64_t uncovered = full & ~covered;
        std::uint64_t touched = 0;
        int cnt = 0;
        while (uncovered) {
            const int u = std::countr_zero(uncovered);
            uncovered &= uncovered - 1;
            if ((closed[u] & touched) == 0) {
                ++cnt;
                touched |= closed[u];
            }
        }
        return cnt;
    }

    int pick_branch_vertex(std::uint64_t covered) const {
        std::uint64_t uncovered = full & ~covered;
        int best_u = -1, best_c = std::numeric_limits<int>::max();
        while (uncovered) {
            const int u = std::countr_zero(uncovered);
            uncovered &= uncovered - 1;
            const int c = std::popcount(closed[u]);
            if (c < best_c) {
                best_c = c;
                best_u = u;
            }
        }
        return best_u;
    }

    void dfs(std::uint64_t chosen, std::uint64_t covered, int size) {
        if (covered == full) {
            if (size < best) {
                best = size;
                best_set = chosen;
                found = true;
            }
            return;
        }
        if (size + packing_bound(covered) >= best)
            return;
        std::uint64_t candidates = closed[pick_branch_vertex(covered)];
        while (candidates) {
            const int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            dfs(chosen | bit(v), covered | closed[v], size + 1);
            if (stop_at_first && found)
                return;
        }
    }
};

std::vector<std::uint64_t> closed_rows(const Graph& g) {
    std::vector<std::uint64_t> rows(g.order());
    for (int v = 0; v < g.order(); ++v)
        rows[v] = g.closed_neighborhood(v).bits();
    return rows;
}

} // namespace

namespace detail {

DominationCertificate minimum_dominating(std::span<const std::uint64_t> closed, std::uint64_t full) {
    CoverSearch search{closed, full, static_cast<int>(closed.size()) + 1, 0, false};
    search.dfs(0, 0, 0);
    return {search.best, VertexSet(search.best_set)};
}

bool find_dominating_within(std::span<const std::uint64_t> closed, std::uint64_t full, int budget,
                            std::uint64_t& witness) {
    if (budget <= 0)
        return false;
    CoverSearch search{closed, full, budget + 1, 0, true};
    search.dfs(0, 0, 0);
    if (search.found)
        witness = search.best_set;
    return search.found;
}

} // namespace detail

bool is_dominating(const Graph& g, VertexSet d) {
    if (!g.vertices().contains(d))
        throw std::invalid_argument("dominating-set candidate has vertices outside the graph");
    VertexSet covered = d;
    for (int v : d)
        covered |= g.neighbors(v);
    return covered == g.vertices();
}

DominationCertificate domination_number(const Graph& g) {
    return detail::minimum_dominating(closed_rows(g), g.vertices().bits());
}

std::optional<VertexSet> dominating_set_within(const Graph& g, int budget) {
    std::uint64_t witness = 0;
    if (detail::find_dominating_within(closed_rows(g), g.vertices().bits(), budget, witness))
        return VertexSet(witness);
    return std::nullopt;
}

int domination_number_oracle(const Graph& g) {
    const int n = g.order();
    if (n > 16)
        throw std::invalid_argument("domination oracle limited to n <= 16, got " + std::to_string(n));
    const std::uint64_t full = g.vertices().bits();
    const auto rows = closed_rows(g);
    for (int k = 1; k <= n; ++k) {
        // k-subsets in increasing numeric order (Gosper's hack)
        for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask <= full;) {
            std::uint64_t covered = 0;
            for (std::uint64_t rest = mask; rest;) {
                const int v = std::countr_zero(rest);
                rest &= rest - 1;
                covered |= rows[v];
            }
            if (covered == full)
                return k;
            const std::uint64_t low = mask & -mask;
            const std::uint64_t ripple = mask + low;
            mask = ripple | (((mask ^ ripple) >> 2) / low);
        }
    }
    throw std::logic_error("domination oracle found no dominating set");
}

VertexSet two_dominating_set_regular(const Graph& g) {
    const int n = g.order();
    if (n < 4)
        throw std::invalid_argument("constructive 2-set needs order >= 4, got " + std::to_string(n));
    if (g.regularity() != n - 3)
        throw std::invalid_argument("graph is not (n-3)-regular");
    const int x = 0;
    const VertexSet non_neighbors = g.vertices() - g.closed_neighborhood(x);
    const int y = non_neighbors.lowest();
    const VertexSet rest = non_neighbors - VertexSet::single(y);
    const int z = rest.lowest();
    if (g.has_edge(y, z))
        return VertexSet().set(x).set(y);
    const VertexSet common = g.neighbors(y) & g.neighbors(z);
    if (common.empty())
        throw std::logic_error("non-adjacent non-neighbors share no common neighbor");
    return VertexSet().set(x).set(common.lowest());
}

} // namespace gbond
