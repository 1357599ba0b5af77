#pragma once

// Property suites shared by the standalone property test binary and the
// acceptance runner. Each check returns true when the property holds over
// its whole (seeded, deterministic) sample.

#include <random>

#include "mrr/cayley.hpp"
#include "mrr/families.hpp"
#include "mrr/graph_aut.hpp"
#include "mrr/group.hpp"
#include "mrr/search.hpp"
#include "mrr/spec_lang.hpp"

namespace mrr::propcheck {

// Full group axioms on every constructed family plus one capacity-sized group.
inline bool group_axioms() {
    try {
        for (const char* spec :
             {"ab:2", "ab:4,2", "ab:3,3,3", "dih:3", "dih:7", "q8", "a4", "dic:ab:6@3",
              "dic:ab:8,2@8", "prod(q8,ab:2,2)", "h1", "h2", "h3", "h4"})
            check_axioms(parse_group_spec(spec));
        check_axioms(abelian({512}));
        check_axioms(direct_product(quaternion8(), abelian({2, 2, 2, 2})));
    } catch (...) {
        return false;
    }
    return true;
}

// index(S) == index of the complement set, over random sets in several groups.
inline bool complement_index_equality() {
    std::mt19937 rng(0xA11CE);
    for (const char* spec : {"dih:4", "q8", "ab:3,3"}) {
        auto g = std::make_shared<const Group>(parse_group_spec(spec));
        auto classes = inverse_classes(*g);
        for (int t = 0; t < 6; ++t) {
            std::vector<int> elems;
            for (const auto& c : classes)
                if (rng() & 1)
                    for (int e : c) elems.push_back(e);
            ConnectionSet s = connection_set(g, elems);
            if (cayley_index_of(s).cayley_index != cayley_index_of(complement_set(s)).cayley_index)
                return false;
        }
    }
    return true;
}

// Left multiplications are automorphisms of every Cayley graph sampled.
inline bool left_regular_embedding() {
    std::mt19937 rng(0xB0B);
    for (const char* spec : {"dih:3", "ab:8", "q8", "dic:ab:6@3"}) {
        auto g = std::make_shared<const Group>(parse_group_spec(spec));
        auto classes = inverse_classes(*g);
        for (int t = 0; t < 4; ++t) {
            std::vector<int> elems;
            for (const auto& c : classes)
                if (rng() & 1)
                    for (int e : c) elems.push_back(e);
            if (!left_regular_embedding_check(connection_set(g, elems))) return false;
        }
    }
    return true;
}

// is_suitable_pair is exactly the four-condition conjunction.
inline bool suitable_pair_decomposition() {
    Group d = parse_group_spec("dic:ab:12@6");
    int m = d.dic->a_order, y = d.dic->y;
    for (int a1 = 0; a1 < m; ++a1)
        for (int a2 = 0; a2 < m; ++a2) {
            int ya2 = d.mul_at(y, a2);
            int s1 = d.mul_at(a1, a1), s2 = d.mul_at(a2, a2);
            int p = d.mul_at(a1, a2);
            bool c1 = a1 != a2 && a1 != ya2;
            bool c2 = s1 != 0 && s1 != y && s2 != 0 && s2 != y;
            bool c3 = a1 != s2 && a1 != d.mul_at(y, s2) && a2 != s1 && a2 != d.mul_at(y, s1);
            bool c4 = p != 0 && p != y;
            if (is_suitable_pair(d, a1, a2) != (c1 && c2 && c3 && c4)) return false;
        }
    return true;
}

// canonical_form is invariant under 100 random relabelings per graph.
inline bool canonical_relabeling_stability() {
    std::mt19937 rng(0xCAFE);
    std::vector<Graph> corpus;
    corpus.push_back(cartesian_product(complete_graph(3), complete_graph(2)));
    corpus.push_back(cycle_graph(9));
    {
        auto g = std::make_shared<const Group>(parse_group_spec("dih:4"));
        corpus.push_back(cayley_graph(
            connection_set(g, parse_connection_elements(*g, "a, a*b"))));
    }
    for (int t = 0; t < 3; ++t) {
        Graph g(10);
        std::bernoulli_distribution coin(0.5);
        for (int u = 0; u < 10; ++u)
            for (int v = u + 1; v < 10; ++v)
                if (coin(rng)) g.add_edge(u, v);
        corpus.push_back(g);
    }
    for (const Graph& g : corpus) {
        Graph canon = canonical_form(g);
        for (int r = 0; r < 100; ++r) {
            std::vector<int> perm(g.n());
            for (int i = 0; i < g.n(); ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            if (canonical_form(relabel(g, perm)) != canon) return false;
        }
    }
    return true;
}

} // namespace mrr::propcheck
