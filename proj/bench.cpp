// Scratch benchmark for the IR engine. Not part of the build.
#include <chrono>
#include <cstdio>
#include <random>

#include "mrr/cayley.hpp"
#include "mrr/graph_aut.hpp"
#include "mrr/spec_lang.hpp"

using namespace mrr;
using Clock = std::chrono::steady_clock;

static double ms(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

static void bench_aut(const char* name, const Graph& g, int reps = 5) {
    auto t0 = Clock::now();
    BigInt order;
    for (int i = 0; i < reps; ++i) order = automorphisms(g).order;
    auto t1 = Clock::now();
    std::printf("%-28s n=%-4d |Aut|=%-14s %8.2f ms/call\n", name, g.n(), order.str().c_str(),
                ms(t0, t1) / reps);
}

int main() {
    auto mk = [](const char* s) { return std::make_shared<const Group>(parse_group_spec(s)); };
    auto cs = [](GroupPtr g, const char* t) {
        return connection_set(g, parse_connection_elements(*g, t));
    };
    bench_aut("row4 (32v)",
              cayley_graph(cs(mk("dic:ab:8,2@8"), "pm(z1), z2, pm(x), pm(z1*x), pm(z2*x)")));
    bench_aut("row8 (64v)",
              cayley_graph(cs(mk("dic:ab:8,4@16"),
                              "pm(z1), pm(z2), pm(x), pm(z1^6*z2^-1*x), pm(z1^5*z2*x)")),
              2);
    bench_aut("row15 (96v)",
              cayley_graph(cs(mk("dic:ab:12,4@24"),
                              "pm(z1), pm(z2), pm(x), pm(z1^4*z2*x), pm(z1^9*z2^3*x)")),
              2);
    bench_aut("empty 27", empty_graph(27), 2);
    bench_aut("complete 27", complete_graph(27), 2);
    bench_aut("2C4 q8", cayley_graph(cs(mk("q8"), "pm(i)")));
    std::mt19937 rng(1);
    Graph r32(32);
    for (int u = 0; u < 32; ++u)
        for (int v = u + 1; v < 32; ++v)
            if (rng() & 1) r32.add_edge(u, v);
    bench_aut("random 32", r32);
    bench_aut("K4 box K4", cartesian_product(complete_graph(4), complete_graph(4)));
    bench_aut("Z2^4 cube graph", cayley_graph(cs(mk("ab:2,2,2,2"), "z1, z2, z3, z4")), 2);
    bench_aut("Z2^4 one edge class", cayley_graph(cs(mk("ab:2,2,2,2"), "z1")), 2);
    return 0;
}
