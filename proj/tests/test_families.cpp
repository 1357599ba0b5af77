#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <random>

#include "mrr/families.hpp"
#include "mrr/group_iso.hpp"
#include "mrr/search.hpp"
#include "mrr/spec_lang.hpp"

using namespace mrr;

namespace {

GroupPtr make(const std::string& spec) {
    return std::make_shared<const Group>(parse_group_spec(spec));
}

} // namespace

TEST_CASE("suitable pairs") {
    // (z1, z1^-2) in Dic(Z_2n, z1^n, x) satisfies (iii) only from n = 6 on:
    // at n = 5, z1 = y * z1^-4 exactly.
    Group d10 = parse_group_spec("dic:ab:10@5");
    int w1 = d10.generators.at("z1");
    CHECK_FALSE(is_suitable_pair(d10, w1, d10.power(w1, -2)));

    Group d = parse_group_spec("dic:ab:12@6");
    int z1 = d.generators.at("z1");
    CHECK(is_suitable_pair(d, z1, d.power(z1, -2)));
    CHECK_FALSE(is_suitable_pair(d, z1, z1));        // (i)
    CHECK_FALSE(is_suitable_pair(d, z1, d.inv[z1])); // (iv)
    CHECK_THROWS_AS(is_suitable_pair(d, z1, d.dic->x_elem), std::invalid_argument);
    CHECK_THROWS_AS(is_suitable_pair(parse_group_spec("q8"), 1, 2), std::invalid_argument);
}

TEST_CASE("each suitable-pair condition is independently falsifiable") {
    // witnesses in Dic(Z16, 8, x): search for pairs violating exactly one
    // of the four conditions
    Group d = parse_group_spec("dic:ab:16@8");
    int m = d.dic->a_order, y = d.dic->y;
    auto conds = [&](int a1, int a2) {
        std::array<bool, 4> v{};
        int ya2 = d.mul_at(y, a2);
        v[0] = a1 != a2 && a1 != ya2;
        int s1 = d.mul_at(a1, a1), s2 = d.mul_at(a2, a2);
        v[1] = s1 != 0 && s1 != y && s2 != 0 && s2 != y;
        v[2] = a1 != s2 && a1 != d.mul_at(y, s2) && a2 != s1 && a2 != d.mul_at(y, s1);
        int p = d.mul_at(a1, a2);
        v[3] = p != 0 && p != y;
        return v;
    };
    for (int fail = 0; fail < 4; ++fail) {
        bool found = false;
        for (int a1 = 0; a1 < m && !found; ++a1)
            for (int a2 = 0; a2 < m && !found; ++a2) {
                auto v = conds(a1, a2);
                bool only = !v[fail];
                for (int o = 0; o < 4; ++o)
                    if (o != fail && !v[o]) only = false;
                if (only) {
                    found = true;
                    CHECK_FALSE(is_suitable_pair(d, a1, a2));
                }
            }
        CHECK(found);
    }
    // and the conjunction matches is_suitable_pair everywhere
    for (int a1 = 0; a1 < m; ++a1)
        for (int a2 = 0; a2 < m; ++a2) {
            auto v = conds(a1, a2);
            CHECK(is_suitable_pair(d, a1, a2) == (v[0] && v[1] && v[2] && v[3]));
        }
}

TEST_CASE("lemma 5.2 construction") {
    // n = 6 is the first cyclic case where the index-2 claim holds
    FamilyGraph fg = lemma52_graph(6);
    CHECK(fg.conn.size() == 8);
    Graph g = cayley_graph(fg.conn);
    for (int v = 0; v < g.n(); ++v) CHECK(g.degree(v) == 8);
    IndexReport r = cayley_index_of(fg.conn);
    CHECK(r.cayley_index == 2);
    CHECK(r.stabilizer_of_identity_order == 2);
    // the nonidentity stabilizer element fixes A pointwise and inverts xA
    const Group& d = *fg.group;
    std::vector<int> phi(d.order);
    for (int e = 0; e < d.order; ++e) phi[e] = e < d.dic->a_order ? e : d.inv[e];
    CHECK(is_graph_automorphism(g, phi));
    // (z1, z1^-2) is suitable here too
    int z1 = d.generators.at("z1");
    CHECK(is_suitable_pair(d, z1, d.power(z1, -2)));
    CHECK_THROWS_AS(lemma52_graph(4), std::invalid_argument);
}

TEST_CASE("the order-20 dicyclic group is a genuine index-4 exception") {
    // The n = 5 instance of the cyclic construction: the suitable pair
    // degenerates, the stated graph has index 4, and in fact no connection
    // set on Dic(Z10, 5, x) does better (exhaustive over all 2^10 subsets).
    FamilyGraph fg = lemma52_graph(5);
    IndexReport r = cayley_index_of(fg.conn);
    CHECK(r.cayley_index == 4);
    CHECK(r.stabilizer_of_identity_order == 4);
    auto d = std::make_shared<const Group>(parse_group_spec("dic:ab:10@5"));
    SearchResult res = min_cayley_index(d);
    CHECK(res.exhaustive);
    CHECK(res.min_index == 4);
}

TEST_CASE("lemma 5.3 construction") {
    FamilyGraph fg = lemma53_graph(3);
    CHECK(fg.conn.size() == 9);
    Graph g = cayley_graph(fg.conn);
    CHECK(is_connected(g));
    CHECK(cayley_index_of(fg.conn).cayley_index == 2);
    const Group& d = *fg.group;
    int z1 = d.generators.at("z1");
    CHECK(is_suitable_pair(d, z1, d.power(z1, -2)));
    CHECK_THROWS_AS(lemma53_graph(2), std::invalid_argument);
}

TEST_CASE("quasi-automorphisms") {
    auto q8 = make("q8");
    auto q = quasi_automorphisms(*q8);
    CHECK(q.size() == 8);

    auto big = make("prod(q8,ab:2,2)");
    CHECK(quasi_automorphisms(*big).size() == 8);

    // Z3: identity and inversion only (brute force over the 2 permutations
    // of 3 elements fixing 0 confirms both satisfy the two-choice rule)
    auto z3 = make("ab:3");
    auto qz3 = quasi_automorphisms(*z3);
    CHECK(qz3.size() == 2);

    // identity always present; global inversion is quasi for abelian groups,
    // while dicyclic groups get the fix-A-invert-xA map instead (global
    // inversion fails the two-choice rule at g = x, h = x z1 there)
    for (auto gptr : {z3, make("ab:4,2")}) {
        auto qs = quasi_automorphisms(*gptr);
        std::vector<int> id(gptr->order), inv = gptr->inv;
        for (int e = 0; e < gptr->order; ++e) id[e] = e;
        CHECK(std::find(qs.begin(), qs.end(), id) != qs.end());
        CHECK(std::find(qs.begin(), qs.end(), inv) != qs.end());
    }
    auto dic = make("dic:ab:6@3");
    auto qd = quasi_automorphisms(*dic);
    std::vector<int> psi(dic->order);
    for (int e = 0; e < dic->order; ++e) psi[e] = e < dic->dic->a_order ? e : dic->inv[e];
    CHECK(std::find(qd.begin(), qd.end(), psi) != qd.end());
    std::vector<int> full_inv = dic->inv;
    CHECK(std::find(qd.begin(), qd.end(), full_inv) == qd.end());
}

TEST_CASE("quasi-automorphisms preserve adjacency of arbitrary cayley graphs") {
    auto g = make("prod(q8,ab:2)");
    auto quasi = quasi_automorphisms(*g);
    auto classes = inverse_classes(*g);
    std::mt19937 rng(67);
    for (int t = 0; t < 50; ++t) {
        std::vector<int> elems;
        for (const auto& c : classes)
            if (rng() & 1)
                for (int e : c) elems.push_back(e);
        Graph graph = cayley_graph(connection_set(g, elems));
        for (const auto& phi : quasi) CHECK(is_graph_automorphism(graph, phi));
    }
}

TEST_CASE("hamiltonian 2-group recognition and the lower bound certificate") {
    CHECK(is_hamiltonian_2group(*make("q8")));
    CHECK(is_hamiltonian_2group(*make("prod(q8,ab:2)")));
    CHECK(is_hamiltonian_2group(*make("dic:ab:4,2@4"))); // Dic(Z4xZ2,(2,0)) = Q8 x Z2
    CHECK_FALSE(is_hamiltonian_2group(*make("dih:4")));
    CHECK_FALSE(is_hamiltonian_2group(*make("ab:8")));

    auto g = make("prod(q8,ab:2,2)");
    ConnectionSet mrr = connection_set(
        g, parse_connection_elements(*g, "pm(i), pm(j), pm(k), pm(i*z1), pm(k*z1*z2), z1, z2"));
    CHECK(mrr.size() == 12);
    CHECK(verify_lower_bound_8(mrr));
    CHECK(verify_lower_bound_8(connection_set(g, {})));
    CHECK(verify_lower_bound_8(complement_set(connection_set(g, {}))));
    CHECK_THROWS_AS(verify_lower_bound_8(connection_set(make("dih:4"), {})),
                    std::invalid_argument);
}

TEST_CASE("cor 4.4 products") {
    // Dic(Z4xZ4,(2,0),x) extends to index 2 on the double group
    auto base = make("dic:ab:4,4@8");
    ConnectionSet s = connection_set(
        base, parse_connection_elements(*base, "pm(z1), pm(z2), pm(z1*z2), pm(x), pm(z1*x)"));
    IndexReport r = cor44_bound(s);
    CHECK(r.cayley_index == 2);
    CHECK(r.group_order == 64);

    // GRR x Z2 keeps index 1 when relatively prime: K2 is the GRR of Z2 but
    // shares a factor with itself, so use Z3's K3 at index 2 to check the
    // multiplication; exclusion list raises
    auto z4 = make("ab:4");
    CHECK_THROWS_AS(cor44_bound(connection_set(z4, {1, 3})), std::invalid_argument);
}

TEST_CASE("family coverage recognizer") {
    CHECK(covered_by_dicyclic_families(*make("dic:ab:10@5")));   // bullet 1, n=5
    CHECK(covered_by_dicyclic_families(*make("dic:ab:6,2@1")));  // bullet 2, n=3
    CHECK_FALSE(covered_by_dicyclic_families(*make("dic:ab:8@4")));
    CHECK_FALSE(covered_by_dicyclic_families(*make("dic:ab:8,2@8")));
    CHECK_FALSE(covered_by_dicyclic_families(*make("dic:ab:6@3")));
}

TEST_CASE("family spot verification at desk scale") {
    // bullet 1 at k=0 up to order 48 covers n = 6..12 (n = 5 is the
    // index-4 exception checked above)
    std::vector<int> v1 = verify_dicyclic_family(1, 0, 48);
    CHECK(v1 == std::vector<int>{24, 28, 32, 36, 40, 44, 48});
    // bullet 2 at k=0 up to order 48: n = 3..6
    std::vector<int> v2 = verify_dicyclic_family(2, 0, 48);
    CHECK(v2 == std::vector<int>{24, 32, 40, 48});
}

TEST_CASE("dicyclic target enumeration") {
    std::vector<DicTarget> targets = enumerate_dicyclic_targets();
    CHECK(targets.size() == 15);
    // pairwise non-isomorphic
    for (size_t i = 0; i < targets.size(); ++i)
        for (size_t j = i + 1; j < targets.size(); ++j)
            CHECK_FALSE(groups_isomorphic(*targets[i].group, *targets[j].group));
    // contains Dic(Z6,3,x)
    Group row1 = parse_group_spec("dic:ab:6@3");
    bool has_row1 = false;
    for (const DicTarget& t : targets)
        if (t.group->order == 12 && groups_isomorphic(*t.group, row1)) has_row1 = true;
    CHECK(has_row1);
    // excludes Q8 = Dic(Z4,2,x)
    Group q8 = parse_group_spec("q8");
    for (const DicTarget& t : targets)
        if (t.group->order == 8) CHECK_FALSE(groups_isomorphic(*t.group, q8));
}
