// Find index-2 witnesses for Table 4 rows 5 and 9 near the printed shapes.
#include <cstdio>
#include <string>
#include <vector>

#include "mrr/cayley.hpp"
#include "mrr/spec_lang.hpp"

using namespace mrr;

static std::string word_of(const Group& g, int e) {
    // crude description relative to the dic structure
    if (!g.dic) return std::to_string(e);
    int m = g.dic->a_order;
    if (e < m) return "a" + std::to_string(e);
    return "x*a" + std::to_string(g.mul_at(g.inv[g.dic->x_elem], e));
}

int main() {
    {
        // row 5: Dic(Z4 x Z4, (2,0), x), A-part {z1 z2 z1z2}^{pm}, x-part
        // {x^{pm}, (a x)^{pm}}
        auto g = std::make_shared<const Group>(parse_group_spec("dic:ab:4,4@8"));
        int m = g->dic->a_order, x = g->dic->x_elem;
        std::vector<int> apart = parse_connection_elements(*g, "pm(z1), pm(z2), pm(z1*z2)");
        for (int a = 0; a < m; ++a) {
            std::vector<int> elems = apart;
            elems.push_back(x);
            elems.push_back(g->inv[x]);
            int ax = g->mul_at(a, x);
            elems.push_back(ax);
            elems.push_back(g->inv[ax]);
            ConnectionSet s = connection_set(g, elems, /*close=*/true);
            if (s.size() != 10) continue;
            BigInt idx = cayley_index_of(s).cayley_index;
            if (idx <= 4)
                std::printf("row5 a=%d (%s): idx=%s\n", a, word_of(*g, ax).c_str(),
                            idx.str().c_str());
        }
    }
    {
        // row 9: Dic(Z8 x Z4, (0,2), x), A-part {z1 z2}^{pm}, x-part
        // {x^{pm}, (a x)^{pm}, (b x)^{pm}}
        auto g = std::make_shared<const Group>(parse_group_spec("dic:ab:8,4@2"));
        int m = g->dic->a_order, x = g->dic->x_elem;
        std::vector<int> apart = parse_connection_elements(*g, "pm(z1), pm(z2)");
        int found = 0;
        for (int a = 0; a < m && found < 12; ++a)
            for (int b = a + 1; b < m && found < 12; ++b) {
                std::vector<int> elems = apart;
                for (int c : {0, a, b}) {
                    int cx = g->mul_at(c, x);
                    elems.push_back(cx);
                    elems.push_back(g->inv[cx]);
                }
                ConnectionSet s = connection_set(g, elems, true);
                if (s.size() != 10) continue;
                BigInt idx = cayley_index_of(s).cayley_index;
                if (idx == 2) {
                    std::printf("row9 a=%d b=%d: idx=2  (a=%s, b=%s)\n", a, b,
                                word_of(*g, g->mul_at(a, x)).c_str(),
                                word_of(*g, g->mul_at(b, x)).c_str());
                    ++found;
                }
            }
    }
    return 0;
}
