#include "gbond/graph6.hpp"

#include <stdexcept>

namespace gbond {

namespace {
constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";
} // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxGraph6Vertices)
        throw std::invalid_argument("graph6 small format holds at most " +
                                    std::to_string(kMaxGraph6Vertices) + " vertices, got " +
                                    std::to_string(n));
    std::string out;
    out.reserve(1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
    out.push_back(static_cast<char>(kBias + n));
    // upper triangle, column by column: bit (u,v) for v = 1..n-1, u = 0..v-1
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(kBias + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>(kBias + (acc << (6 - nbits))));
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.substr(0, kHeader.size()) == kHeader)
        text.remove_prefix(kHeader.size());
    if (text.empty())
        throw std::invalid_argument("graph6: empty input");

    const unsigned size_byte = static_cast<unsigned char>(text[0]);
    if (size_byte == 126)
        throw std::invalid_argument("graph6: long size prefix (order > 62) not supported");
    if (size_byte < kBias || size_byte > kBias + kMaxGraph6Vertices)
        throw std::invalid_argument("graph6: malformed size prefix byte " + std::to_string(size_byte));
    const int n = static_cast<int>(size_byte) - kBias;
    if (n == 0)
        throw std::invalid_argument("graph6: order-0 graph not representable");

    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body_len = (nbits + 5) / 6;
    if (text.size() - 1 < body_len)
        throw std::invalid_argument("graph6: truncated body, expected " + std::to_string(body_len) +
                                    " bytes, got " + std::to_string(text.size() - 1));
    if (text.size() - 1 > body_len)
        throw std::invalid_argument("graph6: trailing garbage after body");

    std::vector<Edge> edges;
    std::size_t bitpos = 0;
    int group = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bitpos) {
            if (bitpos % 6 == 0) {
                const unsigned c = static_cast<unsigned char>(text[1 + bitpos / 6]);
                if (c < kBias || c > 126)
                    throw std::invalid_argument("graph6: body byte " + std::to_string(c) +
                                                " out of range");
                group = static_cast<int>(c) - kBias;
            }
            if ((group >> (5 - bitpos % 6)) & 1)
                edges.emplace_back(u, v);
        }
    }
    if (bitpos % 6 != 0 && (group & ((1 << (6 - bitpos % 6)) - 1)) != 0)
        throw std::invalid_argument("graph6: nonzero padding bits");
    return Graph::from_edge_list(n, edges);
}

} // namespace gbond
