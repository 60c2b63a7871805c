#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbond/generators.hpp"
#include "gbond/graph6.hpp"
#include "support/corpus.hpp"
#include "support/ref_graph6.hpp"

using namespace gbond;
using namespace gbond::testing;

// Values frozen from the reference encoder (cross-checked against nauty's
// format description and an independent third-party codec).
TEST_CASE("known encodings") {
    CHECK(to_graph6(edgeless(1)) == "@");
    CHECK(to_graph6(edgeless(2)) == "A?");
    CHECK(to_graph6(complete_graph(5)) == "D~{");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(to_graph6(two_k2()) == "C`");
    CHECK(to_graph6(k33()) == "EFz_");
    CHECK(to_graph6(prism()) == "E{Sw");
}

TEST_CASE("known decodings") {
    CHECK(from_graph6("@") == edgeless(1));
    CHECK(from_graph6("D~{") == complete_graph(5));
    CHECK(from_graph6("A?") == edgeless(2));
    CHECK(from_graph6(">>graph6<<D~{") == complete_graph(5));
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6(">>graph6<<"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("?"), std::invalid_argument);        // order 0
    CHECK_THROWS_AS(from_graph6("~??"), std::invalid_argument);      // long size prefix
    CHECK_THROWS_AS(from_graph6("D~"), std::invalid_argument);       // truncated body
    CHECK_THROWS_AS(from_graph6("D~{{"), std::invalid_argument);     // trailing garbage
    CHECK_THROWS_AS(from_graph6("D~{\n"), std::invalid_argument);    // newline is not part of the string
    CHECK_THROWS_AS(from_graph6("B\x1f"), std::invalid_argument);    // body byte below range
    CHECK_THROWS_AS(from_graph6("A@"), std::invalid_argument);       // nonzero padding
    CHECK_THROWS_AS(from_graph6("\x07"), std::invalid_argument);     // size byte below range
}

TEST_CASE("cap: graphs above 62 vertices have no small-format encoding") {
    CHECK_THROWS_AS(to_graph6(complete_graph(63)), std::invalid_argument);
    CHECK(to_graph6(edgeless(62)).size() == 1 + (62 * 61 / 2 + 5) / 6);
}

TEST_CASE("round trip identity on the 500-graph fixed-seed corpus") {
    const auto corpus = random_graphs(500, 1, 40, 424242);
    for (const Graph& g : corpus) {
        const std::string encoded = to_graph6(g);
        CHECK(encoded == reference_graph6(g));
        CHECK(from_graph6(encoded) == g);
    }
}

TEST_CASE("round trip on the generated families") {
    for (const Graph& g : generated_corpus(9)) {
        CHECK(from_graph6(to_graph6(g)) == g);
        CHECK(to_graph6(g) == reference_graph6(g));
    }
}
