// Exhaustively re-verify c(Dic(Z10,5,x)) with the dumbest possible method:
// every inverse-class subset, stabilizer of vertex 0 by brute DFS, index =
// stabilizer order (the graph is vertex-transitive under left translation).
#include <cstdio>
#include <functional>
#include <vector>

#include "mrr/cayley.hpp"
#include "mrr/search.hpp"
#include "mrr/spec_lang.hpp"

using namespace mrr;

// Counts stabilizer elements up to a cap (so hugely symmetric graphs like
// the complete graph terminate); we only care about small counts.
static long brute_stabilizer(const Graph& g, long cap = 64) {
    int n = g.n();
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    img[0] = 0;
    used[0] = 1;
    long count = 0;
    std::function<void(int)> rec = [&](int v) {
        if (count >= cap) return;
        if (v == n) {
            ++count;
            return;
        }
        if (img[v] >= 0) {
            rec(v + 1);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (count >= cap) return;
            if (used[w] || g.degree(w) != g.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                if (img[u] >= 0 && g.adj(u, v) != g.adj(img[u], w)) ok = false;
            if (!ok) continue;
            img[v] = w;
            used[w] = 1;
            rec(v + 1);
            img[v] = -1;
            used[w] = 0;
        }
    };
    rec(1);
    return count;
}

int main() {
    auto d = std::make_shared<const Group>(parse_group_spec("dic:ab:10@5"));
    auto classes = inverse_classes(*d);
    int k = static_cast<int>(classes.size());
    std::printf("classes: %d\n", k);
    long best = -1;
    unsigned best_mask = 0;
    int checked = 0, mismatches = 0;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> elems;
        for (int i = 0; i < k; ++i)
            if ((mask >> i) & 1)
                for (int e : classes[i]) elems.push_back(e);
        ConnectionSet s = connection_set(d, elems);
        Graph g = cayley_graph(s);
        long stab = brute_stabilizer(g);
        BigInt ir = cayley_index_of(s).cayley_index;
        if (stab < 64 ? ir != stab : ir < 64) {
            ++mismatches;
            std::printf("MISMATCH mask=%u ir=%s brute=%ld\n", mask, ir.str().c_str(), stab);
        }
        if (best < 0 || stab < best) {
            best = stab;
            best_mask = mask;
        }
        ++checked;
    }
    std::printf("checked %d masks, %d mismatches, min index (brute) = %ld at mask %u\n", checked,
                mismatches, best, best_mask);

    // same question for Z10 itself as a control: expect 2
    auto z10 = std::make_shared<const Group>(parse_group_spec("ab:10"));
    SearchResult rz = min_cayley_index(z10);
    std::printf("c(Z10) = %s\n", rz.min_index.str().c_str());
    return 0;
}
