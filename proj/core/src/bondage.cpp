#include "gbond/bondage.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "gbond/domination.hpp"

namespace gbond {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Iterative-deepening DFS over k-subsets of the canonical edge list. The
// candidate test "is gamma(G - B) still gamma(G)?" runs in decision form
// with budget gamma(G), and every dominating set it finds is cached: a later
// candidate B that touches no edge incident to a cached set D cannot be a
// bondage set, because D still dominates G - B. Cached sets are ordered by
// their highest incident edge index so that a whole DFS subtree dies as soon
// as some cached set lies entirely below the next branch position.
struct BondageSearch {
    explicit BondageSearch(const Graph& g)
        : edges(g.edges()),
          n(g.order()),
          m(static_cast<int>(edges.size())),
          full(g.vertices().bits()),
          closed(static_cast<std::size_t>(n)),
          chosen_flag(static_cast<std::size_t>(m), 0) {
        for (int v = 0; v < n; ++v)
            closed[v] = g.closed_neighborhood(v).bits();
        gamma0 = detail::minimum_dominating(closed, full).gamma;
        edge_words = (m + 63) / 64;
    }

    std::vector<Edge> edges;
    int n, m;
    std::uint64_t full;
    std::vector<std::uint64_t> closed; // rows of G - (chosen edges), kept incrementally
    int gamma0;
    int edge_words;

    std::vector<int> chosen;
    std::vector<char> chosen_flag;

    struct CachedSet {
        std::uint64_t verts;
        int max_edge_idx;
        std::vector<std::uint64_t> incident; // edge-index bitmask
    };
    std::vector<CachedSet> cache;
    std::unordered_set<std::uint64_t> cached_masks;

    bool touches(const CachedSet& d) const {
        for (int idx : chosen)
            if ((d.incident[idx >> 6] >> (idx & 63)) & 1)
                return true;
        return false;
    }

    void cache_insert(std::uint64_t verts) {
        if (!cached_masks.insert(verts).second)
            return;
        CachedSet entry{verts, -1, std::vector<std::uint64_t>(edge_words, 0)};
        for (int idx = 0; idx < m; ++idx) {
            const Edge& e = edges[idx];
            if ((verts >> e.u) & 1 || (verts >> e.v) & 1) {
                entry.incident[idx >> 6] |= bit(idx & 63);
                entry.max_edge_idx = idx;
            }
        }
        const auto pos = std::lower_bound(cache.begin(), cache.end(), entry.max_edge_idx,
                                          [](const CachedSet& c, int key) { return c.max_edge_idx < key; });
        cache.insert(pos, std::move(entry));
    }

    void push_edge(int idx) {
        const Edge& e = edges[idx];
        closed[e.u] &= ~bit(e.v);
        closed[e.v] &= ~bit(e.u);
        chosen_flag[idx] = 1;
        chosen.push_back(idx);
    }

    void pop_edge(int idx) {
        const Edge& e = edges[idx];
        closed[e.u] |= bit(e.v);
        closed[e.v] |= bit(e.u);
        chosen_flag[idx] = 0;
        chosen.pop_back();
    }

    // some cached dominating set survives the current removal?
    bool survivor_below(int pos) const {
        for (const CachedSet& d : cache) {
            if (d.max_edge_idx >= pos)
                break;
            if (!touches(d))
                return true;
        }
        return false;
    }

    bool survivor_any() const {
        for (const CachedSet& d : cache)
            if (!touches(d))
                return true;
        return false;
    }

    // true iff the chosen edge set is a bondage set
    bool leaf_is_bondage() {
        if (survivor_any())
            return false;
        std::uint64_t witness = 0;
        if (detail::find_dominating_within(closed, full, gamma0, witness)) {
            cache_insert(witness);
            return false;
        }
        return true;
    }

    // first bondage set of size k in lexicographic subset order; on success
    // the chosen stack holds the witness indices
    bool dfs(int pos, int depth, int k) {
        if (depth == k)
            return leaf_is_bondage();
        if (m - pos < k - depth)
            return false;
        if (survivor_below(pos))
            return false;
        for (int e = pos; e <= m - (k - depth); ++e) {
            push_edge(e);
            if (dfs(e + 1, depth + 1, k))
                return true;
            pop_edge(e);
        }
        return false;
    }
};

} // namespace

int gamma_after_removal(const Graph& g, std::span<const Edge> removed) {
    return domination_number(g.remove_edges(removed)).gamma;
}

std::optional<StarBound> star_bondage_upper_bound(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("star bound undefined for edgeless graph");
    const int n = g.order();
    const std::uint64_t full = g.vertices().bits();
    std::vector<std::uint64_t> base(n);
    for (int v = 0; v < n; ++v)
        base[v] = g.closed_neighborhood(v).bits();
    const int gamma0 = detail::minimum_dominating(base, full).gamma;

    std::optional<StarBound> best;
    for (int x = 0; x < n; ++x) {
        const int deg = g.degree(x);
        if (deg == 0 || (best && deg >= best->size))
            continue;
        std::vector<std::uint64_t> rows = base;
        rows[x] = bit(x);
        for (int v : g.neighbors(x))
            rows[v] &= ~bit(x);
        std::uint64_t ignored = 0;
        if (!detail::find_dominating_within(rows, full, gamma0, ignored)) {
            StarBound sb{deg, x, {}};
            sb.star.reserve(deg);
            for (int v : g.neighbors(x))
                sb.star.emplace_back(x, v);
            std::sort(sb.star.begin(), sb.star.end());
            best = std::move(sb);
        }
    }
    return best;
}

BondageCertificate bondage_number(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("bondage number undefined for edgeless graph");

    BondageSearch search(g);
    const auto star = star_bondage_upper_bound(g);
    const int ub = star ? star->size : search.m; // removing every edge always raises gamma

    for (int k = 1; k <= ub; ++k) {
        if (search.dfs(0, 0, k)) {
            BondageCertificate cert{k, {}, search.gamma0, 0};
            cert.witness.reserve(k);
            for (int idx : search.chosen)
                cert.witness.push_back(search.edges[idx]);
            cert.gamma_after = gamma_after_removal(g, cert.witness);
            if (cert.gamma_after != cert.gamma_before + 1)
                throw std::logic_error("bondage witness changed gamma by " +
                                       std::to_string(cert.gamma_after - cert.gamma_before));
            return cert;
        }
    }
    throw std::logic_error("no bondage set found within upper bound " + std::to_string(ub));
}

int bondage_number_oracle(const Graph& g) {
    const int n = g.order();
    const int m = g.edge_count();
    if (n > 8 || m > 16)
        throw std::invalid_argument("bondage oracle limited to n <= 8 and 16 edges");
    if (m == 0)
        throw std::invalid_argument("bondage number undefined for edgeless graph");

    const int gamma0 = domination_number_oracle(g);
    const auto edges = g.edges();
    for (int k = 1; k <= m; ++k) {
        const std::uint64_t limit = std::uint64_t{1} << m;
        for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit;) {
            std::vector<Edge> removed;
            removed.reserve(k);
            for (std::uint64_t rest = mask; rest;) {
                const int idx = std::countr_zero(rest);
                rest &= rest - 1;
                removed.push_back(edges[idx]);
            }
            if (domination_number_oracle(g.remove_edges(removed)) > gamma0)
                return k;
            const std::uint64_t low = mask & -mask;
            const std::uint64_t ripple = mask + low;
            mask = ripple | (((mask ^ ripple) >> 2) / low);
        }
    }
    throw std::logic_error("bondage oracle found no bondage set");
}

} // namespace gbond
