// How large are Aut(G) for the search groups, and how long to enumerate?
#include <chrono>
#include <cstdio>

#include "mrr/group_iso.hpp"
#include "mrr/spec_lang.hpp"

using namespace mrr;
using Clock = std::chrono::steady_clock;

int main() {
    for (const char* spec : {"dic:ab:8,2@8", "dic:ab:4,4@8", "ab:2,2,2,2", "ab:3,3,3", "q8",
                             "prod(q8,ab:2)", "h3", "h4", "prod(q8,ab:3)", "ab:4,2,2"}) {
        Group g = parse_group_spec(spec);
        auto t0 = Clock::now();
        auto auts = automorphism_group(g);
        auto t1 = Clock::now();
        std::printf("%-16s order=%-3d |Aut|=%-7zu %8.1f ms\n", spec, g.order, auts.size(),
                    std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return 0;
}
