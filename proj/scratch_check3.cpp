// Which reading of the Table 4 connection sets gives index 2 (or 4)?
#include <cstdio>
#include <string>
#include <vector>

#include "mrr/cayley.hpp"
#include "mrr/spec_lang.hpp"

using namespace mrr;

static void probe(const std::string& group, const std::string& conn, long expect) {
    auto g = std::make_shared<const Group>(parse_group_spec(group));
    try {
        ConnectionSet s = connection_set(g, parse_connection_elements(*g, conn));
        IndexReport r = cayley_index_of(s);
        std::printf("%-18s deg=%-3d idx=%-6s expect=%ld conn=%s\n", group.c_str(), s.size(),
                    r.cayley_index.str().c_str(), expect, conn.c_str());
    } catch (const std::exception& ex) {
        std::printf("%-18s ERROR %s conn=%s\n", group.c_str(), ex.what(), conn.c_str());
    }
}

int main() {
    // row 1-3 (index 4):
    probe("dic:ab:6@3", "pm(z1), pm(x)", 4);
    probe("dic:ab:8@4", "pm(z1), pm(x)", 4);
    probe("dic:ab:4,2@1", "pm(z1), pm(x), pm(z1*x)", 4);
    probe("dic:ab:4,2@1", "pm(z1), pm(x), pm(x*z1)", 4);
    // row 4:
    probe("dic:ab:8,2@8", "pm(z1), z2, pm(x), pm(z1*x), pm(z2*x)", 2);
    probe("dic:ab:8,2@8", "pm(z1), z2, pm(x), pm(x*z1), pm(x*z2)", 2);
    // row 5 with all three involutions:
    for (const char* y : {"8", "2", "10"}) {
        probe(std::string("dic:ab:4,4@") + y, "pm(z1), pm(z2), pm(z1*z2), pm(x), pm(z1*x)", 2);
    }
    // row 6:
    probe("dic:ab:4,2,2@2", "pm(z1), z3, pm(x), pm(z1*x), pm(z3*x)", 2);
    // row 7:
    probe("dic:ab:6,3@9", "pm(z1), pm(z2), pm(x), pm(z2*x), pm(z1*z2*x)", 2);
    // row 8:
    probe("dic:ab:8,4@16", "pm(z1), pm(z2), pm(x), pm(z1^6*z2^-1*x), pm(z1^5*z2*x)", 2);
    // row 9:
    probe("dic:ab:8,4@2", "pm(z1), pm(z2), pm(x), pm(z1^5*x), pm(z1^3*z2*x)", 2);
    // row 11:
    probe("dic:ab:4,4,2@1", "pm(z1), pm(z2), pm(x), pm(z2^3*x), pm(z1^3*z2^2*x)", 2);
    // row 13:
    probe("dic:ab:12,3@18", "pm(z1), pm(z2), pm(x), pm(z1^7*z2*x), pm(z1^3*z2*x)", 2);
    // row 15:
    probe("dic:ab:12,4@24", "pm(z1), pm(z2), pm(x), pm(z1^4*z2*x), pm(z1^9*z2^3*x)", 2);
    return 0;
}
