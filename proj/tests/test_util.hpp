#pragma once

// Shared test helpers: seeded random graphs and the independent brute-force
// oracles the unit and acceptance suites check the real implementations
// against. Everything here is deliberately naive.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "mrr/bigint.hpp"
#include "mrr/graph.hpp"
#include "mrr/group.hpp"

namespace mrr::testutil {

inline Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// |Aut(g)| by checking all n! permutations; n <= 8 or so.
inline long brute_aut_count(const Graph& g) {
    int n = g.n();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g.adj(u, v) != g.adj(p[u], p[v])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

// All automorphisms of a group by brute force over images of a generating
// pair/triple, verifying the homomorphism property elementwise.
inline long brute_group_aut_count(const Group& g) {
    // pick a minimal generating prefix greedily, naive version
    std::vector<int> gens;
    std::vector<char> in(g.order, 0);
    auto closure = [&](const std::vector<int>& gs) {
        std::fill(in.begin(), in.end(), 0);
        std::vector<int> elems{0};
        in[0] = 1;
        for (size_t i = 0; i < elems.size(); ++i)
            for (int s : gs) {
                int e = g.mul_at(elems[i], s);
                if (!in[e]) {
                    in[e] = 1;
                    elems.push_back(e);
                }
            }
        return elems;
    };
    while (static_cast<int>(closure(gens).size()) < g.order) {
        for (int e = 1; e < g.order; ++e) {
            std::vector<int> trial = gens;
            trial.push_back(e);
            if (closure(trial).size() > closure(gens).size()) {
                gens = trial;
                break;
            }
        }
    }
    // enumerate all image tuples
    long count = 0;
    std::vector<int> img(gens.size(), 0);
    while (true) {
        // build map by word closure
        std::vector<int> phi(g.order, -1);
        phi[0] = 0;
        std::vector<int> elems{0};
        bool ok = true;
        for (size_t i = 0; i < elems.size() && ok; ++i)
            for (size_t s = 0; s < gens.size() && ok; ++s) {
                int e = g.mul_at(elems[i], gens[s]);
                int target = g.mul_at(phi[elems[i]], img[s]);
                if (phi[e] < 0) {
                    phi[e] = target;
                    elems.push_back(e);
                } else if (phi[e] != target)
                    ok = false;
            }
        if (ok) {
            std::vector<char> seen(g.order, 0);
            for (int v : phi)
                if (v < 0 || seen[v]) {
                    ok = false;
                    break;
                } else
                    seen[v] = 1;
        }
        if (ok)
            for (int a = 0; a < g.order && ok; ++a)
                for (int b = 0; b < g.order && ok; ++b)
                    if (phi[g.mul_at(a, b)] != g.mul_at(phi[a], phi[b])) ok = false;
        if (ok) ++count;
        size_t i = 0;
        for (; i < img.size(); ++i) {
            if (++img[i] < g.order) break;
            img[i] = 0;
        }
        if (i == img.size()) break;
    }
    return count;
}

} // namespace mrr::testutil
