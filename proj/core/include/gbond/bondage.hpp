#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gbond/graph.hpp"

namespace gbond {

// Exact bondage number with a witness edge set B. Removing a minimum bondage
// set raises gamma by exactly one (a single edge removal cannot raise it by
// more), so gamma_after == gamma_before + 1 always holds; the solver checks
// this before returning. The witness is the lexicographically first minimum
// bondage set under canonical edge order.
struct BondageCertificate {
    int b;
    std::vector<Edge> witness;
    int gamma_before;
    int gamma_after;
};

// gamma of the edge-deleted graph G - B.
int gamma_after_removal(const Graph& g, std::span<const Edge> removed);

// Exact b(G) by iterative deepening over canonical edge subsets. Rejects
// edgeless graphs (the bondage number is defined only for nonempty graphs).
BondageCertificate bondage_number(const Graph& g);

// Best single-vertex edge star that works as a bondage set: the minimum
// vertex degree |E_G(x)| over all x with gamma(G - E_G(x)) > gamma(G),
// lowest such x on ties. nullopt when no star raises gamma.
struct StarBound {
    int size;
    int center;
    std::vector<Edge> star;
};
std::optional<StarBound> star_bondage_upper_bound(const Graph& g);

// Independent test oracle: unpruned enumeration of all edge subsets in
// increasing size, gamma computed by the domination oracle. Rejects
// instances with n > 8 or more than 16 edges.
int bondage_number_oracle(const Graph& g);

} // namespace gbond
