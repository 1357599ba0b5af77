#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mrr/cayley.hpp"
#include "mrr/graph_factor.hpp"
#include "mrr/search.hpp"
#include "mrr/spec_lang.hpp"

using namespace mrr;

namespace {

GroupPtr make(const std::string& spec) {
    return std::make_shared<const Group>(parse_group_spec(spec));
}

ConnectionSet conn(GroupPtr g, const std::string& text) {
    return connection_set(g, parse_connection_elements(*g, text));
}

} // namespace

TEST_CASE("connection set validation") {
    auto d6 = make("dih:3");
    CHECK_NOTHROW(conn(d6, "a, a*b")); // both involutions
    auto z4 = make("ab:4");
    CHECK_THROWS_AS(connection_set(z4, {1}), std::invalid_argument); // missing inverse
    CHECK_NOTHROW(connection_set(z4, {1}, /*close=*/true));
    CHECK_THROWS_AS(connection_set(z4, {0}), std::invalid_argument); // identity
    CHECK(connection_set(z4, {}).size() == 0);                       // empty is valid
    ConnectionSet closed = connection_set(z4, {1}, true);
    CHECK(closed.elements() == std::vector<int>{1, 3});
}

TEST_CASE("cayley graphs") {
    auto z2 = make("ab:2");
    CHECK(cayley_graph(connection_set(z2, {1})) == complete_graph(2));

    // Cay(Q8, {i, -i}) is two disjoint 4-cycles
    auto q8 = make("q8");
    Graph g = cayley_graph(conn(q8, "pm(i)"));
    CHECK(components(g).size() == 2);
    for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 2);
    CHECK(isomorphic(g, cartesian_product(cycle_graph(4), empty_graph(2))));

    // Cay(Z2^3, {z1,z2,z3}) is the cube
    auto e8 = make("ab:2,2,2");
    Graph cube = cayley_graph(conn(e8, "z1, z2, z3"));
    Graph ref = cartesian_product(cartesian_product(complete_graph(2), complete_graph(2)),
                                  complete_graph(2));
    CHECK(isomorphic(cube, ref));
}

TEST_CASE("left regular embedding") {
    auto d6 = make("dih:3");
    CHECK(left_regular_embedding_check(conn(d6, "a, a*b")));
    auto z4 = make("ab:4");
    CHECK(left_regular_embedding_check(connection_set(z4, {})));
    CHECK(left_regular_embedding_check(conn(z4, "pm(z1), z1^2"))); // complete graph
}

TEST_CASE("cayley index computation") {
    auto d6 = make("dih:3");
    IndexReport r = cayley_index_of(conn(d6, "a, a*b"));
    CHECK(r.cayley_index == 2);
    CHECK(r.aut_order == 12);
    CHECK(r.stabilizer_of_identity_order == 2);

    auto q8 = make("q8");
    CHECK(cayley_index_of(conn(q8, "pm(i)")).cayley_index == 16);

    auto z2 = make("ab:2");
    CHECK(cayley_index_of(connection_set(z2, {1})).cayley_index == 1);
    CHECK(is_grr(connection_set(z2, {1})));

    auto e8 = make("ab:2,2,2");
    CHECK(cayley_index_of(conn(e8, "z1, z2, z3")).cayley_index == 6);
    CHECK_FALSE(is_grr(conn(e8, "z1, z2, z3")));
}

TEST_CASE("complement connection set shares the index") {
    std::mt19937 rng(41);
    auto d8 = make("dih:4");
    auto classes = inverse_classes(*d8);
    for (int t = 0; t < 8; ++t) {
        std::vector<int> elems;
        for (const auto& c : classes)
            if (rng() & 1)
                for (int e : c) elems.push_back(e);
        ConnectionSet s = connection_set(d8, elems);
        CHECK(cayley_index_of(s).cayley_index == cayley_index_of(complement_set(s)).cayley_index);
    }
}

TEST_CASE("product_mrr") {
    // K3 on Z3 (index 2) with K2 on Z2 (index 1): relatively prime, index 2
    auto z3 = make("ab:3");
    auto z2 = make("ab:2");
    ConnectionSet s3 = conn(z3, "pm(z1)");
    ConnectionSet s2 = connection_set(z2, {1});
    IndexReport r = product_mrr(s3, s2);
    CHECK(r.cayley_index == 2);
    CHECK(r.group_order == 6);

    // C4 on Z4 and K2 share the factor K2: rejected
    auto z4 = make("ab:4");
    CHECK_THROWS_AS(product_mrr(conn(z4, "pm(z1)"), s2), std::invalid_argument);

    // disconnected first factor: rejected
    auto q8 = make("q8");
    CHECK_THROWS_AS(product_mrr(conn(q8, "pm(i)"), s2), std::invalid_argument);
}

TEST_CASE("the Q8 x Z2 product MRR has index 16") {
    // complement of Cay(Q8, {i,-i}) boxed with K2
    auto q8 = make("q8");
    ConnectionSet s = complement_set(conn(q8, "pm(i)"));
    CHECK(cayley_index_of(s).cayley_index == 16);
    auto z2 = make("ab:2");
    IndexReport r = product_mrr(s, connection_set(z2, {1}));
    CHECK(r.cayley_index == 16);
    CHECK(r.group_order == 16);
}
