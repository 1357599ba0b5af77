#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mrr/graph.hpp"
#include "test_util.hpp"

using namespace mrr;

TEST_CASE("construction and adjacency") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK(g.adj(0, 1));
    CHECK(g.adj(1, 0));
    CHECK_FALSE(g.adj(0, 2));
    CHECK(g.degree(0) == 1);
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 9), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(kMaxGraphVertices + 1), std::invalid_argument);
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(4)) == empty_graph(4));
    std::mt19937 rng(7);
    for (int t = 0; t < 10; ++t) {
        Graph g = testutil::random_graph(9, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("cartesian product basics") {
    Graph c4 = cycle_graph(4);
    Graph k2 = complete_graph(2);
    Graph p = cartesian_product(k2, k2);
    CHECK(p.n() == 4);
    CHECK(p.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(p.degree(v) == 2); // C4

    // degrees add for regular factors
    Graph prism = cartesian_product(complete_graph(3), k2);
    for (int v = 0; v < 6; ++v) CHECK(prism.degree(v) == 3);

    // product with an edgeless graph duplicates
    Graph two_c4 = cartesian_product(c4, empty_graph(2));
    CHECK(components(two_c4).size() == 2);
    CHECK(two_c4.degree(0) == 2);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(cycle_graph(4)));
    CHECK_FALSE(is_connected(cartesian_product(cycle_graph(4), empty_graph(2))));
    CHECK(is_connected(complete_graph(1)));
    auto comps = components(cartesian_product(complete_graph(3), empty_graph(3)));
    CHECK(comps.size() == 3);
    CHECK(comps[0].size() == 3);
}

TEST_CASE("graph6 round trip") {
    std::mt19937 rng(11);
    for (int n : {1, 2, 5, 61, 62, 63, 70}) {
        Graph g = testutil::random_graph(n, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("\x01"), std::invalid_argument);
}

TEST_CASE("known graph6 strings") {
    // K3 and P3 in standard encoding
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(from_graph6("Bw") == complete_graph(3));
}

TEST_CASE("edge list round trip") {
    std::mt19937 rng(13);
    Graph g = testutil::random_graph(8, rng);
    CHECK(from_edge_list(to_edge_list(g)) == g);
    CHECK_THROWS_AS(from_edge_list(""), std::invalid_argument);
}

TEST_CASE("relabel") {
    Graph g = path_graph(3);
    Graph h = relabel(g, {2, 1, 0});
    CHECK(h.adj(2, 1));
    CHECK(h.adj(1, 0));
    CHECK_FALSE(h.adj(2, 0));
}
