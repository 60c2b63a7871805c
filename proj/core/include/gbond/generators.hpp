#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gbond/graph.hpp"

namespace gbond {

// Multiset of cycle lengths, each >= 3, kept sorted non-increasing. This is
// the canonical name of a 2-regular graph, and therefore of its complement:
// an (n-3)-regular graph of order n = sum of the parts.
class CyclePartition {
public:
    explicit CyclePartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int total() const { return total_; }
    std::string to_string() const; // "6+3"

    bool operator==(const CyclePartition&) const = default;

private:
    std::vector<int> parts_;
    int total_;
};

Graph complete_graph(int n);

// K_{2,2,...,2} with t parts laid out as {0,1},{2,3},...; the unique
// (n-2)-regular graph of order n = 2t.
Graph cocktail_party(int t);

// vertices in consecutive order: i ~ i+1 (mod n for the cycle)
Graph cycle_graph(int n);
Graph path_graph(int n);

// one cycle per part, parts occupying consecutive index blocks
Graph disjoint_cycles(const CyclePartition& partition);

// All partitions of n into parts >= 3, canonical non-increasing form, in
// lexicographically decreasing order. This ordering is part of the
// verification report contract.
std::vector<CyclePartition> cycle_partitions(int n);

// The complete, duplicate-free family of (n-3)-regular graphs of order n:
// complements of disjoint cycle unions, one per partition of n into parts
// >= 3. Every output is re-verified (n-3)-regular before return.
std::vector<std::pair<CyclePartition, Graph>> enumerate_n_minus_3_regular(int n);

// Parse a family spec such as "complete 5", "cycle 7", "path 4",
// "cocktail-party 3", "disjoint-cycles 5 4 3" or "n-minus-3-regular 6".
// Most specs name one graph; n-minus-3-regular yields the whole family.
std::vector<Graph> graphs_from_family_spec(const std::string& spec);

} // namespace gbond
