#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "gbond/graph.hpp"

namespace gbond {

// Exact minimum dominating set: the gamma value plus one witness of that
// size. Witnesses are deterministic: branching always picks the uncovered
// vertex with the fewest candidate dominators (lowest index on ties) and
// tries candidates in increasing vertex order.
struct DominationCertificate {
    int gamma;
    VertexSet witness;
};

// True iff the union of closed neighborhoods of d covers every vertex.
bool is_dominating(const Graph& g, VertexSet d);

// Exact gamma(G) by branch-and-bound over closed-neighborhood set cover.
DominationCertificate domination_number(const Graph& g);

// Decision form: some dominating set of size <= budget, or nullopt. This is
// the inner query of the bondage search.
std::optional<VertexSet> dominating_set_within(const Graph& g, int budget);

// Independent test oracle: enumerate vertex subsets in increasing size.
// Exponential by design; rejects n > 16.
int domination_number_oracle(const Graph& g);

// The constructive two-vertex dominating set for an (n-3)-regular graph:
// take the lowest vertex x and its two non-neighbors y < z; if yz is an edge
// the set is {x,y}, otherwise {x,w} for the lowest common neighbor w of y
// and z. Rejects graphs that are not (n-3)-regular of order >= 4.
VertexSet two_dominating_set_regular(const Graph& g);

namespace detail {

// Search core shared with the bondage module. `closed` holds the closed
// neighborhood row of every vertex (self bit always present); `full` is the
// all-vertices mask. Rows may describe an edge-deleted graph.

// Minimum cover size and its witness.
DominationCertificate minimum_dominating(std::span<const std::uint64_t> closed, std::uint64_t full);

// First dominating set of size <= budget in search order, if any.
bool find_dominating_within(std::span<const std::uint64_t> closed, std::uint64_t full, int budget,
                            std::uint64_t& witness);

} // namespace detail

} // namespace gbond
