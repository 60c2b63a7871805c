#pragma once

// Deterministic graph corpora shared by the unit and acceptance suites.
// Random graphs use raw mt19937 draws (never std::uniform_int_distribution,
// whose output is implementation-defined) so the corpora are bit-identical
// on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "gbond/generators.hpp"
#include "gbond/graph.hpp"

namespace gbond::testing {

// named families plus the whole (n-3)-regular family up to max_n
inline std::vector<Graph> generated_corpus(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        out.push_back(complete_graph(n));
    for (int n = 3; n <= max_n; ++n)
        out.push_back(cycle_graph(n));
    for (int n = 1; n <= max_n; ++n)
        out.push_back(path_graph(n));
    for (int t = 2; 2 * t <= max_n; ++t)
        out.push_back(cocktail_party(t));
    for (int n = 6; n <= max_n; ++n)
        for (const CyclePartition& p : cycle_partitions(n))
            if (p.parts().size() > 1)
                out.push_back(disjoint_cycles(p));
    for (int n = 4; n <= max_n; ++n)
        for (auto& [p, g] : enumerate_n_minus_3_regular(n))
            out.push_back(std::move(g));
    return out;
}

inline bool chance(std::mt19937& rng, std::uint32_t numer, std::uint32_t denom) {
    return rng() % denom < numer;
}

// G(n, p) sample with n in [min_n, max_n] and p cycling over 1/4, 1/2, 3/4
inline std::vector<Graph> random_graphs(int count, int min_n, int max_n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const int n = min_n + static_cast<int>(rng() % (max_n - min_n + 1));
        const std::uint32_t numer = 1 + i % 3;
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (chance(rng, numer, 4))
                    edges.emplace_back(u, v);
        out.push_back(Graph::from_edge_list(n, edges));
    }
    return out;
}

// nonempty graphs within the bondage-oracle limits: n <= 8, at most 16 edges
inline std::vector<Graph> random_sparse_graphs(int count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        const int n = 3 + static_cast<int>(rng() % 6);
        std::vector<Edge> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                all.emplace_back(u, v);
        // random subset of at most 16 edges
        const int target = 1 + static_cast<int>(rng() % 16);
        std::vector<Edge> edges;
        for (const Edge& e : all)
            if (chance(rng, 1, 2) && static_cast<int>(edges.size()) < target)
                edges.push_back(e);
        if (edges.empty())
            continue;
        out.push_back(Graph::from_edge_list(n, edges));
    }
    return out;
}

// fixture graphs matching the labelings used throughout the tests
inline Graph two_k2() {
    const std::vector<Edge> edges{{0, 1}, {2, 3}};
    return Graph::from_edge_list(4, edges);
}

inline Graph prism() {
    // triangles {0,1,2} and {3,4,5}, matching i -- i+3
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
    return Graph::from_edge_list(6, edges);
}

inline Graph k33() {
    // parts {0,1,2} and {3,4,5}
    std::vector<Edge> edges;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edge_list(6, edges);
}

inline Graph edgeless(int n) {
    return Graph::from_edge_list(n, {});
}

} // namespace gbond::testing
