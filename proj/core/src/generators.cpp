#include "gbond/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gbond {

CyclePartition::CyclePartition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("cycle partition needs at least one part");
    for (int p : parts_)
        if (p < 3)
            throw std::invalid_argument("cycle part " + std::to_string(p) + " below 3");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string CyclePartition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += '+';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Graph complete_graph(int n) {
    if (n < 1)
        throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph cocktail_party(int t) {
    if (t < 2)
        throw std::invalid_argument("cocktail party graph needs t >= 2 parts");
    const int n = 2 * t;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / 2 != v / 2)
                edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
    if (n < 1)
        throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph disjoint_cycles(const CyclePartition& partition) {
    std::vector<Edge> edges;
    edges.reserve(partition.total());
    int offset = 0;
    for (int p : partition.parts()) {
        for (int i = 0; i < p; ++i)
            edges.emplace_back(offset + i, offset + (i + 1) % p);
        offset += p;
    }
    return Graph::from_edge_list(partition.total(), edges);
}

std::vector<CyclePartition> cycle_partitions(int n) {
    if (n < 3)
        throw std::invalid_argument("no partition of " + std::to_string(n) + " into parts >= 3");
    std::vector<CyclePartition> out;
    std::vector<int> parts;
    // largest part first, bounded by the previous one: emits canonical forms
    // in lexicographically decreasing order
    const std::function<void(int, int)> recurse = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(remaining, cap); p >= 3; --p) {
            if (remaining - p == 1 || remaining - p == 2)
                continue;
            parts.push_back(p);
            recurse(remaining - p, p);
            parts.pop_back();
        }
    };
    recurse(n, n);
    return out;
}

std::vector<std::pair<CyclePartition, Graph>> enumerate_n_minus_3_regular(int n) {
    if (n < 4)
        throw std::invalid_argument("(n-3)-regular family needs order >= 4, got " + std::to_string(n));
    if (n > kMaxVertices)
        throw std::invalid_argument("order " + std::to_string(n) + " above vertex cap");
    std::vector<std::pair<CyclePartition, Graph>> out;
    for (const CyclePartition& partition : cycle_partitions(n)) {
        Graph g = disjoint_cycles(partition).complement();
        if (g.regularity() != n - 3)
            throw std::logic_error("generator produced a non-(n-3)-regular graph for partition " +
                                   partition.to_string());
        out.emplace_back(partition, std::move(g));
    }
    return out;
}

namespace {

int parse_int(const std::string& token) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer, got \"" + token + "\"");
    }
    if (used != token.size())
        throw std::invalid_argument("expected an integer, got \"" + token + "\"");
    return value;
}

} // namespace

std::vector<Graph> graphs_from_family_spec(const std::string& spec) {
    std::istringstream in(spec);
    std::string family;
    std::vector<std::string> args;
    in >> family;
    for (std::string tok; in >> tok;)
        args.push_back(tok);
    if (family.empty())
        throw std::invalid_argument("empty family spec");

    const auto want_one_arg = [&]() {
        if (args.size() != 1)
            throw std::invalid_argument("family \"" + family + "\" takes exactly one parameter");
        return parse_int(args[0]);
    };

    if (family == "complete")
        return {complete_graph(want_one_arg())};
    if (family == "cycle")
        return {cycle_graph(want_one_arg())};
    if (family == "path")
        return {path_graph(want_one_arg())};
    if (family == "cocktail-party")
        return {cocktail_party(want_one_arg())};
    if (family == "disjoint-cycles") {
        if (args.empty())
            throw std::invalid_argument("disjoint-cycles needs at least one part");
        std::vector<int> parts;
        parts.reserve(args.size());
        for (const std::string& a : args)
            parts.push_back(parse_int(a));
        return {disjoint_cycles(CyclePartition(parts))};
    }
    if (family == "n-minus-3-regular") {
        std::vector<Graph> out;
        for (auto& [partition, g] : enumerate_n_minus_3_regular(want_one_arg()))
            out.push_back(std::move(g));
        return out;
    }
    throw std::invalid_argument("unknown family \"" + family + "\"");
}

} // namespace gbond
