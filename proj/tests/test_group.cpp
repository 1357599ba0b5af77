#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "mrr/group.hpp"

using namespace mrr;

TEST_CASE("abelian constructors") {
    Group e222 = abelian({2, 2, 2});
    CHECK(e222.order == 8);
    CHECK(involutions(e222).size() == 7);

    Group z42 = abelian({4, 2});
    CHECK(z42.order == 8);
    CHECK(element_order(z42, z42.generators.at("z1")) == 4);
    CHECK(element_order(z42, z42.generators.at("z2")) == 2);

    Group z333 = abelian({3, 3, 3});
    CHECK(z333.order == 27);
    CHECK(involutions(z333).empty());

    CHECK_THROWS_AS(abelian({}), std::invalid_argument);
    CHECK_THROWS_AS(abelian({1}), std::invalid_argument);
    CHECK_THROWS_AS(abelian({600}), std::invalid_argument);
    for (const Group& g : {e222, z42, z333}) check_axioms(g);
}

TEST_CASE("dihedral") {
    Group d3 = dihedral(3);
    CHECK(d3.order == 6);
    CHECK(involutions(d3).size() == 3); // the three reflections, n odd
    CHECK_FALSE(is_abelian(d3));

    Group d4 = dihedral(4);
    CHECK(d4.order == 8);
    CHECK(involutions(d4).size() == 5);

    CHECK(dihedral(5).order == 10);
    CHECK_THROWS_AS(dihedral(2), std::invalid_argument);

    // aba = b^-1
    int a = d3.generators.at("a"), b = d3.generators.at("b");
    CHECK(d3.mul_at(d3.mul_at(a, b), a) == d3.inv[b]);
    check_axioms(d3);
    check_axioms(d4);
}

TEST_CASE("quaternion and alternating") {
    Group q = quaternion8();
    CHECK(q.order == 8);
    CHECK(involutions(q).size() == 1); // -1 only
    int i = q.generators.at("i"), j = q.generators.at("j"), k = q.generators.at("k");
    CHECK(q.mul_at(i, j) == k);
    CHECK(q.mul_at(j, i) == q.inv[k]);
    CHECK(q.mul_at(i, i) == q.mul_at(j, j));
    check_axioms(q);

    Group a4 = alternating4();
    CHECK(a4.order == 12);
    CHECK(involutions(a4).size() == 3);
    CHECK(element_order(a4, a4.generators.at("r")) == 3);
    CHECK(element_order(a4, a4.generators.at("s")) == 2);
    check_axioms(a4);
}

TEST_CASE("direct product") {
    Group q = quaternion8();
    Group z3 = abelian({3});
    Group p = direct_product(q, z3);
    CHECK(p.order == 24);
    check_axioms(p);
    // element orders are lcm of component orders
    for (int a = 0; a < q.order; ++a)
        for (int b = 0; b < z3.order; ++b)
            CHECK(p.elem_order[a * 3 + b] == std::lcm(q.elem_order[a], z3.elem_order[b]));
    CHECK(p.generators.count("i"));
    CHECK(p.generators.count("z1"));
    CHECK_THROWS_AS(direct_product(abelian({32}), abelian({32})), std::invalid_argument);
}

TEST_CASE("generalized dicyclic") {
    Group z6 = abelian({6});
    Group d = generalized_dicyclic(z6, 3);
    CHECK(d.order == 12);
    check_axioms(d);
    REQUIRE(d.dic.has_value());
    int x = d.dic->x_elem, y = d.dic->y;
    CHECK(d.mul_at(x, x) == y);
    // (xa)^2 = y for every a in A
    for (int a = 0; a < 6; ++a) {
        int xa = d.mul_at(x, a);
        CHECK(d.mul_at(xa, xa) == y);
    }
    // x^-1 a x = a^-1
    for (int a = 0; a < 6; ++a) CHECK(d.mul_at(d.mul_at(d.inv[x], a), x) == d.inv[a]);

    CHECK_THROWS_AS(generalized_dicyclic(dihedral(3), 3), std::invalid_argument);
    CHECK_THROWS_AS(generalized_dicyclic(z6, 2), std::invalid_argument); // order 3, not involution
    CHECK_THROWS_AS(generalized_dicyclic(z6, 0), std::invalid_argument);
}

TEST_CASE("element queries") {
    Group q = quaternion8();
    CHECK(element_order(q, q.mul_at(q.generators.at("i"), q.generators.at("i"))) == 2);
    CHECK(is_abelian(abelian({6})));
    CHECK_FALSE(is_abelian(dihedral(3)));
    CHECK(group_exponent(abelian({4, 2})) == 4);
    CHECK(group_exponent(abelian({2, 2})) == 2);
    Group z8 = abelian({8});
    CHECK(z8.power(1, 3) == 3);
    CHECK(z8.power(1, -1) == 7);
    CHECK(z8.power(2, 0) == 0);
}

TEST_CASE("abelian group enumeration by order") {
    CHECK(abelian_groups_of_order(16).size() == 5);
    CHECK(abelian_groups_of_order(32).size() == 7);
    CHECK(abelian_groups_of_order(36).size() == 4);
    CHECK(abelian_groups_of_order(48).size() == 5);
    CHECK(abelian_groups_of_order(7).size() == 1);
    // invariant factor chains: each divides its predecessor
    for (const auto& f : abelian_groups_of_order(48)) {
        long prod = 1;
        for (size_t i = 0; i < f.size(); ++i) {
            prod *= f[i];
            if (i > 0) CHECK(f[i - 1] % f[i] == 0);
        }
        CHECK(prod == 48);
    }
}
