#include <catch2/catch_amalgamated.hpp>

#include "cfeg/enumeration.hpp"
#include "cfeg/families.hpp"
#include "cfeg/graph.hpp"
#include "cfeg/isomorphism.hpp"
#include "cfeg/twins.hpp"

using namespace cfeg;

TEST_CASE("graph construction rejects bad edges") {
    Graph g(3);
    g.add_edge(0, 1);
    REQUIRE_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
    REQUIRE(g.edge_count() == 1);
    REQUIRE(g.adjacent(1, 0));
}

TEST_CASE("connected components") {
    REQUIRE(connected_components(Graph::cycle(4)) == std::vector<VertexSet>{{0, 1, 2, 3}});
    REQUIRE(connected_components(Graph(2)) == std::vector<VertexSet>{{0}, {1}});

    // P5 minus its middle vertex: two components of size 2.
    auto sub = delete_vertex(Graph::path(5), 2);
    auto comps = connected_components(sub.graph);
    REQUIRE(comps.size() == 2);
    REQUIRE(comps[0].size() == 2);
    REQUIRE(comps[1].size() == 2);

    REQUIRE(is_connected(Graph(0)));
    REQUIRE(is_connected(Graph(1)));
    REQUIRE_FALSE(is_connected(Graph(2)));
}

TEST_CASE("odd/even component counts") {
    REQUIRE(odd_even_component_counts(Graph::path(3), {1}) == std::pair{2, 0});
    REQUIRE(odd_even_component_counts(Graph::cycle(6), {0, 2, 4}) == std::pair{3, 0});
    REQUIRE(odd_even_component_counts(Graph::cycle(7), {0, 2, 4}) == std::pair{2, 1});

    // C7 is equimatchable, so removing any independent 3-set leaves at
    // least two odd components.
    const Graph c7 = Graph::cycle(7);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            for (int k = j + 1; k < 7; ++k) {
                if (!is_independent(c7, {i, j, k})) continue;
                REQUIRE(odd_even_component_counts(c7, {i, j, k}).first >= 2);
            }

    // odd + even = number of components; odd has the parity of n - |removed|.
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        Graph g = random_graph(n, next_unit(rng), rng);
        VertexSet removed;
        for (int v = 0; v < n; ++v)
            if (next_unit(rng) < 0.3) removed.push_back(v);
        auto [odd, even] = odd_even_component_counts(g, removed);
        auto sub = delete_vertices(g, removed);
        REQUIRE(odd + even == static_cast<int>(connected_components(sub.graph).size()));
        REQUIRE(odd % 2 == (n - static_cast<int>(removed.size())) % 2);
    }
}

TEST_CASE("vertex connectivity capped") {
    REQUIRE(vertex_connectivity_capped(Graph::cycle(7), 3) == 2);
    REQUIRE(vertex_connectivity_capped(Graph::complete(5), 3) == std::nullopt);
    REQUIRE(vertex_connectivity_capped(Graph::path(4), 3) == 1);
    REQUIRE(vertex_connectivity_capped(Graph::complete(4), 3) == 3);
    REQUIRE(vertex_connectivity_capped(Graph::complete(2), 3) == 1);
    REQUIRE(vertex_connectivity_capped(Graph(3), 3) == 0);  // disconnected
    REQUIRE(vertex_connectivity_capped(Graph(1), 3) == 0);
    REQUIRE(vertex_connectivity_capped(Graph::cycle(4), 1) == std::nullopt);
}

TEST_CASE("clique, independence, C4 predicates") {
    const Graph k4 = Graph::complete(4);
    const Graph c4 = Graph::cycle(4);
    REQUIRE(is_clique(k4, {0, 1, 2, 3}));
    REQUIRE(is_cycle_c4(c4));
    REQUIRE(is_independent(c4, {0, 2}));
    REQUIRE_FALSE(is_clique(c4, {0, 1, 2, 3}));
    REQUIRE_FALSE(is_cycle_c4(k4));
    REQUIRE(is_complete(k4));
    REQUIRE_FALSE(is_complete(c4));
}

TEST_CASE("twin reduction of cliques and C4") {
    auto tr = twin_reduce(Graph::complete(5));
    REQUIRE(tr.quotient.vertex_count() == 1);
    REQUIRE(tr.multiplicity == std::vector<int>{5});

    auto c4 = twin_reduce(Graph::cycle(4));
    REQUIRE(c4.quotient == Graph::cycle(4));  // false twins are not merged
    REQUIRE(c4.multiplicity == std::vector<int>(4, 1));
}

TEST_CASE("twin reduction is idempotent on twin-free graphs") {
    for (const Graph& g : {Graph::path(5), Graph::cycle(6), base_graph(FamilyId::G22).graph,
                           base_graph(FamilyId::G3).graph}) {
        auto tr = twin_reduce(g);
        REQUIRE(tr.quotient == g);
        REQUIRE(tr.multiplicity == std::vector<int>(g.vertex_count(), 1));
    }
}

TEST_CASE("expand then reduce recovers base and multiplicities") {
    std::mt19937_64 rng(11);
    for (FamilyId id : kBlowUpFamilies) {
        const auto& base = base_graph(id);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<int> mult(base.graph.vertex_count());
            for (auto& m : mult) m = 1 + static_cast<int>(rng() % 3);
            const Graph blown = expand(base.graph, mult);
            auto tr = twin_reduce(blown);
            auto iso = isomorphic_small(tr.quotient, base.graph);
            REQUIRE(iso.has_value());
            // Multiplicities transported through the isomorphism must match.
            std::vector<int> transported(mult.size());
            for (std::size_t v = 0; v < mult.size(); ++v)
                transported[(*iso)[v]] = tr.multiplicity[v];
            REQUIRE(transported == mult);
        }
    }
    // A G22 member with multiplicity multiset {2,1,1,1,1,3}.
    auto tr = twin_reduce(expand(base_graph(FamilyId::G22).graph, {2, 1, 1, 1, 1, 3}));
    REQUIRE(tr.quotient.vertex_count() == 6);
    std::vector<int> sorted = tr.multiplicity;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(sorted == std::vector<int>{1, 1, 1, 1, 2, 3});
    REQUIRE(isomorphic_small(tr.quotient, base_graph(FamilyId::G22).graph).has_value());
}

TEST_CASE("small graph isomorphism") {
    REQUIRE(isomorphic_small(Graph::cycle(4), Graph::complete_bipartite(2, 2)).has_value());
    REQUIRE_FALSE(isomorphic_small(Graph::cycle(4), Graph::path(4)).has_value());

    // The automorphism group of C7 is dihedral of order 14.
    REQUIRE(all_isomorphisms(Graph::cycle(7), Graph::cycle(7)).size() == 14);

    auto iso = isomorphic_small(Graph::path(3), Graph::from_edges(3, {{2, 1}, {1, 0}}));
    REQUIRE(iso.has_value());

    REQUIRE_THROWS_AS(isomorphic_small(Graph(13), Graph(13)), std::invalid_argument);
}

TEST_CASE("induced subgraph back-mapping") {
    const Graph g = Graph::cycle(5);
    auto sub = induced_subgraph(g, {1, 2, 4});
    REQUIRE(sub.graph.vertex_count() == 3);
    REQUIRE(sub.original == std::vector<int>{1, 2, 4});
    REQUIRE(sub.graph.adjacent(0, 1));   // 1-2 survives
    REQUIRE_FALSE(sub.graph.adjacent(0, 2));
    REQUIRE_THROWS_AS(induced_subgraph(g, {0, 0}), std::invalid_argument);
}
