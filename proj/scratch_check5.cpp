// Row 5: full exhaustive min over all 17 inverse classes (order 32).
// Row 9: lemma-5.4-style guided search: S_A with small index on A, plus
// {x, x a1, x a2} for suitable pairs (a1, a2).
#include <cstdio>
#include <vector>

#include "mrr/cayley.hpp"
#include "mrr/families.hpp"
#include "mrr/search.hpp"
#include "mrr/spec_lang.hpp"

using namespace mrr;

int main(int argc, char**) {
    if (argc < 99) {
        auto g = std::make_shared<const Group>(parse_group_spec("dic:ab:4,4@8"));
        SearchBudget b;
        b.max_classes = 20;
        SearchResult r = min_cayley_index(g, b, [](long done, const BigInt& best) {
            std::printf("progress %ld best=%s\n", done, best.str().c_str());
            std::fflush(stdout);
        });
        std::printf("row5 group: min=%s exhaustive=%d witness:", r.min_index.str().c_str(),
                    r.exhaustive);
        for (int e : r.witness.elements()) std::printf(" %d", e);
        std::printf("  (examined %ld)\n", r.candidates_examined);
    }
    {
        // row 9 guided search
        auto g = std::make_shared<const Group>(parse_group_spec("dic:ab:8,4@2"));
        int m = g->dic->a_order, x = g->dic->x_elem;
        // candidate S_A: unions of 2..3 inverse classes of A (within D)
        std::vector<std::vector<int>> aclasses;
        {
            std::vector<char> seen(m, 0);
            for (int e = 1; e < m; ++e) {
                if (seen[e]) continue;
                seen[e] = 1;
                if (g->inv[e] == e)
                    aclasses.push_back({e});
                else {
                    seen[g->inv[e]] = 1;
                    aclasses.push_back({e, g->inv[e]});
                }
            }
        }
        int k = static_cast<int>(aclasses.size());
        std::printf("row9: %d A-classes\n", k);
        int found = 0;
        for (int c1 = 0; c1 < k && found < 6; ++c1)
            for (int c2 = c1; c2 < k && found < 6; ++c2) {
                std::vector<int> sa = aclasses[c1];
                if (c2 != c1)
                    for (int e : aclasses[c2]) sa.push_back(e);
                for (int a1 = 1; a1 < m && found < 6; ++a1)
                    for (int a2 = a1 + 1; a2 < m && found < 6; ++a2) {
                        if (!is_suitable_pair(*g, a1, a2)) continue;
                        std::vector<int> elems = sa;
                        for (int c : {0, a1, a2}) {
                            int cx = g->mul_at(c, x);
                            elems.push_back(cx);
                            elems.push_back(g->inv[cx]);
                        }
                        ConnectionSet s = connection_set(g, elems, true);
                        BigInt idx = cayley_index_of(s).cayley_index;
                        if (idx == 2) {
                            std::printf("row9 FOUND idx=2: SA={");
                            for (int e : sa) std::printf(" %d", e);
                            std::printf(" } a1=%d a2=%d\n", a1, a2);
                            ++found;
                        }
                    }
            }
        if (!found) std::printf("row9: nothing at index 2 in the guided family\n");
    }
    return 0;
}
