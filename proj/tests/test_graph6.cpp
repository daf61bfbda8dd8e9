#include <catch2/catch_amalgamated.hpp>

#include "cfeg/enumeration.hpp"
#include "cfeg/graph6.hpp"

using namespace cfeg;

TEST_CASE("graph6 fixed encodings") {
    REQUIRE(write_graph6(Graph(1)) == "@");
    REQUIRE(parse_graph6("@") == Graph(1));
    REQUIRE(parse_graph6("?") == Graph(0));

    // Byte 95 = 63 + 32: only the top bit of the 6-bit group, i.e. pair (0,1).
    REQUIRE(write_graph6(Graph::complete(2)) == "A_");
    REQUIRE(parse_graph6("A_") == Graph::complete(2));

    // "D?{": n=5, payload 000000 111100 -> edges (0,4),(1,4),(2,4),(3,4),
    // decoded by hand from the colex bit layout.
    const Graph star = parse_graph6("D?{");
    REQUIRE(star == Graph::from_edges(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));

    // C4 in one payload byte: bits 101101 = 45 -> 'l'.
    REQUIRE(write_graph6(Graph::cycle(4)) == "Cl");
}

TEST_CASE("graph6 parse errors") {
    REQUIRE_THROWS_AS(parse_graph6(""), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_graph6(">"), std::invalid_argument);      // header < 63
    REQUIRE_THROWS_AS(parse_graph6("~??"), std::invalid_argument);    // long form
    REQUIRE_THROWS_AS(parse_graph6("A"), std::invalid_argument);      // missing payload
    REQUIRE_THROWS_AS(parse_graph6("A__"), std::invalid_argument);    // trailing payload
    REQUIRE_THROWS_AS(parse_graph6("B\x7f"), std::invalid_argument);  // byte out of range
    REQUIRE_THROWS_AS(write_graph6(Graph(63)), std::invalid_argument);
}

TEST_CASE("graph6 round trip, exhaustive small + random") {
    for (int n = 0; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask) {
            const Graph g = Graph::from_edge_mask(n, mask);
            const std::string s = write_graph6(g);
            REQUIRE(parse_graph6(s) == g);
            REQUIRE(write_graph6(parse_graph6(s)) == s);
        }
    }
    std::mt19937_64 rng(20240101);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 62);
        const Graph g = random_graph(n, next_unit(rng), rng);
        REQUIRE(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("edge list round trip and errors") {
    REQUIRE(parse_edge_list("3 2\n0 1\n1 2") == Graph::path(3));
    REQUIRE(parse_edge_list("1 0") == Graph(1));
    REQUIRE(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0") == Graph::cycle(4));

    const Graph g = Graph::cycle(5);
    REQUIRE(parse_edge_list(write_edge_list(g)) == g);
    REQUIRE(write_edge_list(Graph::path(3)) == "3 2\n0 1\n1 2\n");

    REQUIRE_THROWS_AS(parse_edge_list("2 1\n0 0"), std::invalid_argument);        // self loop
    REQUIRE_THROWS_AS(parse_edge_list("2 2\n0 1\n1 0"), std::invalid_argument);   // duplicate
    REQUIRE_THROWS_AS(parse_edge_list("2 1\n0 5"), std::invalid_argument);        // out of range
    REQUIRE_THROWS_AS(parse_edge_list("3 2\n0 1"), std::invalid_argument);        // count mismatch
    REQUIRE_THROWS_AS(parse_edge_list("2 1\n0 1\n9"), std::invalid_argument);     // trailing data
    REQUIRE_THROWS_AS(parse_edge_list("x"), std::invalid_argument);
}
