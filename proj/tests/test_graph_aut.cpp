#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mrr/graph.hpp"
#include "mrr/graph_aut.hpp"
#include "test_util.hpp"

using namespace mrr;

TEST_CASE("equitable refinement") {
    // vertex-transitive regular graph: uniform stays uniform
    Coloring c = equitable_refine(cycle_graph(5), uniform_coloring(5));
    CHECK(c.num_colors == 1);

    // path P3: endpoints split from the center by degree
    Coloring p = equitable_refine(path_graph(3), uniform_coloring(3));
    CHECK(p.num_colors == 2);
    CHECK(p.color[0] == p.color[2]);
    CHECK(p.color[0] != p.color[1]);

    // discrete coloring unchanged
    Coloring d;
    d.color = {0, 1, 2};
    d.num_colors = 3;
    Coloring r = equitable_refine(path_graph(3), d);
    CHECK(r.color == d.color);

    // result is equitable: equal neighbour counts into every class
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        Graph g = testutil::random_graph(10, rng);
        Coloring e = equitable_refine(g, uniform_coloring(10));
        for (int c1 = 0; c1 < e.num_colors; ++c1)
            for (int c2 = 0; c2 < e.num_colors; ++c2) {
                int expect = -1;
                for (int v = 0; v < 10; ++v) {
                    if (e.color[v] != c1) continue;
                    int cnt = 0;
                    for (int w = 0; w < 10; ++w)
                        if (e.color[w] == c2 && g.adj(v, w)) ++cnt;
                    if (expect < 0) expect = cnt;
                    CHECK(cnt == expect);
                }
            }
    }
}

TEST_CASE("known automorphism group orders") {
    CHECK(automorphisms(complete_graph(4)).order == 24);
    CHECK(automorphisms(cycle_graph(5)).order == 10);
    CHECK(automorphisms(empty_graph(6)).order == 720);
    // 3-cube = K2 x K2 x K2: |Aut| = 48
    Graph cube = cartesian_product(cartesian_product(complete_graph(2), complete_graph(2)),
                                   complete_graph(2));
    CHECK(automorphisms(cube).order == 48);
    // Petersen graph
    Graph pet(10);
    for (int i = 0; i < 5; ++i) {
        pet.add_edge(i, (i + 1) % 5);
        pet.add_edge(i, i + 5);
        pet.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    CHECK(automorphisms(pet).order == 120);
}

TEST_CASE("generators are automorphisms") {
    std::mt19937 rng(17);
    for (int t = 0; t < 20; ++t) {
        Graph g = testutil::random_graph(12, rng);
        AutResult a = automorphisms(g);
        for (const auto& gen : a.generators) CHECK(is_graph_automorphism(g, gen));
    }
}

TEST_CASE("brute force oracle on small random graphs") {
    std::mt19937 rng(23);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + static_cast<int>(rng() % 6); // 2..7
        Graph g = testutil::random_graph(n, rng);
        CHECK(automorphisms(g).order == testutil::brute_aut_count(g));
    }
}

TEST_CASE("stabilizer order") {
    CHECK(stabilizer_order(complete_graph(4), 0) == 6);
    CHECK(stabilizer_order(cycle_graph(5), 2) == 2);
    std::mt19937 rng(29);
    for (int t = 0; t < 10; ++t) {
        Graph g = testutil::random_graph(8, rng);
        AutResult a = automorphisms(g);
        for (int v : {0, 3}) {
            size_t orbit = permutation_orbit(8, a.generators, v).size();
            CHECK(stabilizer_order(g, v) * static_cast<long>(orbit) == a.order);
        }
    }
}

TEST_CASE("aut order is complement-invariant") {
    std::mt19937 rng(31);
    for (int t = 0; t < 15; ++t) {
        Graph g = testutil::random_graph(9, rng);
        CHECK(automorphisms(g).order == automorphisms(complement(g)).order);
    }
}

TEST_CASE("canonical form is isomorphic and relabeling-stable") {
    std::mt19937 rng(37);
    for (int t = 0; t < 15; ++t) {
        Graph g = testutil::random_graph(10, rng);
        Graph canon = canonical_form(g);
        CHECK(isomorphic(g, canon));
        for (int r = 0; r < 5; ++r) {
            Graph h = relabel(g, testutil::random_permutation(10, rng));
            CHECK(canonical_form(h) == canon);
        }
    }
}

TEST_CASE("isomorphism decisions") {
    CHECK(isomorphic(cartesian_product(complete_graph(2), complete_graph(2)), cycle_graph(4)));
    // C6 and the prism K2 x K3 are both cubic on 6 vertices but distinct
    CHECK_FALSE(isomorphic(cycle_graph(6), cartesian_product(complete_graph(2), complete_graph(3))));
    Graph cube = cartesian_product(cartesian_product(complete_graph(2), complete_graph(2)),
                                   complete_graph(2));
    Graph k4k2 = cartesian_product(complete_graph(4), complete_graph(2));
    CHECK_FALSE(isomorphic(cube, k4k2));
    CHECK(isomorphic(complement(cube), k4k2));
}

TEST_CASE("aut order multiplies for relatively prime connected products") {
    Graph k3 = complete_graph(3);
    Graph k2 = complete_graph(2);
    CHECK(automorphisms(cartesian_product(k3, k2)).order ==
          automorphisms(k3).order * automorphisms(k2).order);
    Graph c5 = cycle_graph(5);
    CHECK(automorphisms(cartesian_product(c5, k2)).order ==
          automorphisms(c5).order * automorphisms(k2).order);
}
