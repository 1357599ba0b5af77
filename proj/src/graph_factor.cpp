#include "mrr/graph_factor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mrr/graph_aut.hpp"

namespace mrr {

namespace {

std::vector<std::vector<int>> all_pairs_dist(const Graph& g) {
    int n = g.n();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        queue.assign(1, s);
        d[s][s] = 0;
        for (size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            for (int w = 0; w < n; ++w)
                if (g.adj(v, w) && d[s][w] < 0) {
                    d[s][w] = d[s][v] + 1;
                    queue.push_back(w);
                }
        }
    }
    return d;
}

struct EdgeUF {
    std::vector<int> parent;
    explicit EdgeUF(int m) : parent(m) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int e) {
        while (parent[e] != e) e = parent[e] = parent[parent[e]];
        return e;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

struct EdgeIndex {
    std::vector<std::pair<int, int>> edges;
    std::map<std::pair<int, int>, int> id;
    int of(int u, int v) const {
        auto it = id.find(std::minmax(u, v));
        if (it == id.end()) throw std::logic_error("unknown edge");
        return it->second;
    }
};

EdgeIndex collect_edges(const Graph& g) {
    EdgeIndex ei;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adj(u, v)) {
                ei.id[{u, v}] = static_cast<int>(ei.edges.size());
                ei.edges.push_back({u, v});
            }
    return ei;
}

// Components of the spanning subgraph using only edges whose class passes
// the filter. Component ids are assigned in order of smallest vertex.
std::vector<int> filtered_components(const Graph& g, const EdgeIndex& ei, EdgeUF& uf,
                                     const std::vector<char>& use_class, int* count_out) {
    int n = g.n();
    std::vector<std::vector<int>> adj(n);
    for (int e = 0; e < static_cast<int>(ei.edges.size()); ++e)
        if (use_class[uf.find(e)]) {
            adj[ei.edges[e].first].push_back(ei.edges[e].second);
            adj[ei.edges[e].second].push_back(ei.edges[e].first);
        }
    std::vector<int> comp(n, -1);
    int cid = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = cid;
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = cid;
                    stack.push_back(w);
                }
        }
        ++cid;
    }
    if (count_out) *count_out = cid;
    return comp;
}

std::vector<int> live_classes(const EdgeIndex& ei, EdgeUF& uf) {
    std::vector<int> cls;
    for (int e = 0; e < static_cast<int>(ei.edges.size()); ++e)
        if (uf.find(e) == e) cls.push_back(e);
    return cls;
}

// One square-property pass; returns true if any classes merged.
// Adjacent edges in different classes must lie on exactly one common
// chordless square, and the square's opposite edges inherit the classes.
bool square_pass(const Graph& g, const EdgeIndex& ei, EdgeUF& uf) {
    bool merged = false;
    int n = g.n();
    for (int u = 0; u < n; ++u) {
        std::vector<int> nbrs;
        for (int v = 0; v < n; ++v)
            if (g.adj(u, v)) nbrs.push_back(v);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                int v = nbrs[i], w = nbrs[j];
                int e = ei.of(u, v), f = ei.of(u, w);
                if (uf.find(e) == uf.find(f)) continue;
                if (g.adj(v, w)) { // triangle: same factor
                    merged |= uf.unite(e, f);
                    continue;
                }
                int t = -1, count = 0;
                for (int c = 0; c < n; ++c)
                    if (c != u && g.adj(c, v) && g.adj(c, w) && !g.adj(c, u)) {
                        t = c;
                        ++count;
                    }
                if (count != 1) {
                    merged |= uf.unite(e, f);
                } else {
                    merged |= uf.unite(e, ei.of(w, t));
                    merged |= uf.unite(f, ei.of(v, t));
                }
            }
    }
    return merged;
}

struct Candidate {
    std::vector<Graph> factors;
    std::vector<std::vector<int>> coords;
    bool ok = false;
};

// Builds factor graphs and per-vertex coordinates from an edge-class
// partition, verifying the product structure exactly.
Candidate coordinatize(const Graph& g, const EdgeIndex& ei, EdgeUF& uf,
                       const std::vector<int>& classes) {
    Candidate cand;
    int n = g.n();
    int k = static_cast<int>(classes.size());
    std::vector<std::vector<int>> coord(n, std::vector<int>(k));
    std::vector<int> sizes(k);
    for (int i = 0; i < k; ++i) {
        // coordinate i = component id when class-i edges are removed
        std::vector<char> use_by_class(ei.edges.size(), 0);
        for (int j = 0; j < k; ++j)
            if (j != i) use_by_class[classes[j]] = 1;
        int cnt = 0;
        std::vector<int> comp = filtered_components(g, ei, uf, use_by_class, &cnt);
        sizes[i] = cnt;
        for (int v = 0; v < n; ++v) coord[v][i] = comp[v];
    }
    long prod = 1;
    for (int i = 0; i < k; ++i) prod *= sizes[i];
    if (prod != n) return cand;

    std::vector<Graph> factors;
    for (int i = 0; i < k; ++i) factors.push_back(Graph(sizes[i]));
    for (int e = 0; e < static_cast<int>(ei.edges.size()); ++e) {
        int cls = uf.find(e);
        int i = static_cast<int>(std::find(classes.begin(), classes.end(), cls) - classes.begin());
        auto [u, v] = ei.edges[e];
        int diff = -1;
        for (int x = 0; x < k; ++x)
            if (coord[u][x] != coord[v][x]) {
                if (diff >= 0) return cand; // edge moves two coordinates
                diff = x;
            }
        if (diff != i) return cand;
        if (!factors[i].adj(coord[u][i], coord[v][i])) factors[i].add_edge(coord[u][i], coord[v][i]);
    }
    cand.factors = std::move(factors);
    cand.coords = std::move(coord);
    cand.ok = factorization_reproduces(g, Factorization{cand.factors, cand.coords});
    return cand;
}

} // namespace

bool factorization_reproduces(const Graph& g, const Factorization& f) {
    int n = g.n();
    int k = static_cast<int>(f.factors.size());
    if (static_cast<int>(f.coordinates.size()) != n) return false;
    long prod = 1;
    for (const Graph& h : f.factors) prod *= h.n();
    if (prod != n) return false;
    // injectivity of the coordinate map
    std::map<std::vector<int>, int> seen;
    for (int v = 0; v < n; ++v)
        if (!seen.emplace(f.coordinates[v], v).second) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int diff = -1;
            bool multi = false;
            for (int i = 0; i < k; ++i)
                if (f.coordinates[u][i] != f.coordinates[v][i]) {
                    if (diff >= 0) multi = true;
                    diff = i;
                }
            bool expect =
                !multi && diff >= 0 && f.factors[diff].adj(f.coordinates[u][diff], f.coordinates[v][diff]);
            if (g.adj(u, v) != expect) return false;
        }
    return true;
}

Factorization prime_factorization(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("prime_factorization: graph must be connected");
    int n = g.n();
    if (n == 1) return Factorization{{}, std::vector<std::vector<int>>(1)};

    EdgeIndex ei = collect_edges(g);
    int m = static_cast<int>(ei.edges.size());
    EdgeUF uf(m);

    // Djokovic-Winkler relation via the distance criterion.
    std::vector<std::vector<int>> dist = all_pairs_dist(g);
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            auto [x, y] = ei.edges[e];
            auto [u, v] = ei.edges[f];
            if (dist[x][u] + dist[y][v] != dist[x][v] + dist[y][u]) uf.unite(e, f);
        }

    while (square_pass(g, ei, uf)) {
    }

    // Refine to the product coloring: if coordinatization fails, merge the
    // first offending pair of classes and retry. Merging only coarsens, and
    // a single class always verifies (the graph itself).
    while (true) {
        std::vector<int> classes = live_classes(ei, uf);
        Candidate cand = coordinatize(g, ei, uf, classes);
        if (cand.ok) {
            Factorization out;
            out.coordinates.assign(n, {});
            std::vector<int> keep;
            for (int i = 0; i < static_cast<int>(cand.factors.size()); ++i)
                if (cand.factors[i].n() >= 2) keep.push_back(i);
            if (keep.empty()) { // K1 fed back in; cannot happen for n >= 2
                throw std::logic_error("factorization produced no nontrivial factor");
            }
            for (int i : keep) out.factors.push_back(cand.factors[i]);
            for (int v = 0; v < n; ++v)
                for (int i : keep) out.coordinates[v].push_back(cand.coords[v][i]);
            return out;
        }
        if (classes.size() <= 1) throw std::logic_error("single-class factorization failed to verify");
        uf.unite(classes[0], classes[1]);
        while (square_pass(g, ei, uf)) {
        }
    }
}

namespace {

std::vector<int> divisors_of(int n) {
    std::vector<int> d;
    for (int a = 2; a * 2 <= n; ++a)
        if (n % a == 0) d.push_back(a);
    return d;
}

Graph induced(const Graph& g, const std::vector<int>& verts) {
    Graph h(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.adj(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

bool connected_subset(const Graph& g, const std::vector<int>& verts) {
    return is_connected(induced(g, verts));
}

void subsets_through_0(int n, int size, std::vector<int>& cur, int next,
                       const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == size) {
        fn(cur);
        return;
    }
    int need = size - static_cast<int>(cur.size());
    for (int v = next; v <= n - need; ++v) {
        cur.push_back(v);
        subsets_through_0(n, size, cur, v + 1, fn);
        cur.pop_back();
    }
}

} // namespace

std::vector<Graph> prime_factorization_bruteforce(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("bruteforce factorization: connected input only");
    if (g.n() > 16) throw std::invalid_argument("bruteforce factorization: n <= 16 only");
    int n = g.n();
    if (n == 1) return {};
    int deg0 = g.degree(0);
    for (int a : divisors_of(n)) {
        int b = n / a;
        if (b < 2) continue;
        // layers through vertex 0 induce the factors in a genuine product
        std::vector<std::vector<int>> lefts;
        std::vector<int> cur{0};
        subsets_through_0(n, a, cur, 1, [&](const std::vector<int>& L) {
            if (connected_subset(g, L)) lefts.push_back(L);
        });
        for (const auto& L : lefts) {
            Graph hl = induced(g, L);
            int dl = hl.degree(0);
            cur.assign(1, 0);
            std::vector<Graph> result;
            bool done = false;
            subsets_through_0(n, b, cur, 1, [&](const std::vector<int>& M) {
                if (done) return;
                Graph hm = induced(g, M);
                if (hm.degree(0) + dl != deg0 || !is_connected(hm)) return;
                if (isomorphic(g, cartesian_product(hl, hm))) {
                    std::vector<Graph> fl = prime_factorization_bruteforce(hl);
                    std::vector<Graph> fm = prime_factorization_bruteforce(hm);
                    result = fl;
                    result.insert(result.end(), fm.begin(), fm.end());
                    done = true;
                }
            });
            if (done) return result;
        }
    }
    return {g}; // prime
}

bool relatively_prime(const Graph& g1, const Graph& g2) {
    if (!is_connected(g1) || !is_connected(g2))
        throw std::invalid_argument("relatively_prime: both graphs must be connected");
    Factorization f1 = prime_factorization(g1);
    Factorization f2 = prime_factorization(g2);
    std::vector<Graph> c1, c2;
    for (const Graph& h : f1.factors) c1.push_back(canonical_form(h));
    for (const Graph& h : f2.factors) c2.push_back(canonical_form(h));
    for (const Graph& a : c1)
        for (const Graph& b : c2)
            if (a == b) return false;
    return true;
}

} // namespace mrr
