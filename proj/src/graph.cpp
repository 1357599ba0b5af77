#include "mrr/graph.hpp"

#include <sstream>
#include <stdexcept>

namespace mrr {

Graph::Graph(int n) : n_(n), stride_((n + 63) / 64) {
    if (n < 1 || n > kMaxGraphVertices)
        throw std::invalid_argument("graph vertex count out of range: " + std::to_string(n));
    bits_.assign(static_cast<size_t>(n_) * stride_, 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("loops are not allowed");
    bits_[static_cast<size_t>(u) * stride_ + (v >> 6)] |= 1ull << (v & 63);
    bits_[static_cast<size_t>(v) * stride_ + (u >> 6)] |= 1ull << (u & 63);
}

int Graph::degree(int v) const {
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < stride_; ++w) d += __builtin_popcountll(r[w]);
    return d;
}

long Graph::edge_count() const {
    long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

Graph complement(const Graph& g) {
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adj(u, v)) h.add_edge(u, v);
    return h;
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    long n = static_cast<long>(g1.n()) * g2.n();
    if (n > kMaxGraphVertices)
        throw std::invalid_argument("cartesian product exceeds vertex capacity");
    Graph h(static_cast<int>(n));
    int n2 = g2.n();
    for (int u = 0; u < g1.n(); ++u)
        for (int v = 0; v < n2; ++v) {
            for (int w = v + 1; w < n2; ++w)
                if (g2.adj(v, w)) h.add_edge(u * n2 + v, u * n2 + w);
            for (int t = u + 1; t < g1.n(); ++t)
                if (g1.adj(u, t)) h.add_edge(u * n2 + v, t * n2 + v);
        }
    return h;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w = 0; w < g.n(); ++w)
                if (g.adj(v, w) && comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n())
        throw std::invalid_argument("relabel permutation has wrong length");
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adj(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

std::string to_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int k = 1; k < n; ++k)
        for (int j = 0; j < k; ++j) {
            acc = (acc << 1) | (g.adj(j, k) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph from_graph6(const std::string& s) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > s.size()) throw std::invalid_argument("truncated graph6 string");
    };
    auto val = [&](size_t i) {
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("invalid graph6 byte at offset " + std::to_string(i));
        return c - 63;
    };
    need(1);
    int n;
    if (s[0] == 126) {
        need(4);
        n = (val(1) << 12) | (val(2) << 6) | val(3);
        pos = 4;
    } else {
        n = val(0);
        pos = 1;
    }
    if (n < 1) throw std::invalid_argument("graph6: empty graph header");
    Graph g(n);
    long bits_needed = static_cast<long>(n) * (n - 1) / 2;
    int acc = 0, nbits = 0;
    long seen = 0;
    for (int k = 1; k < n; ++k)
        for (int j = 0; j < k; ++j) {
            if (nbits == 0) {
                need(1);
                acc = val(pos++);
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(j, k);
            --nbits;
            ++seen;
        }
    (void)bits_needed;
    (void)seen;
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.n() << '\n';
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adj(u, v)) os << u << ' ' << v << '\n';
    return os.str();
}

Graph from_edge_list(const std::string& s) {
    std::istringstream is(s);
    int n;
    if (!(is >> n)) throw std::invalid_argument("edge list: missing vertex count");
    Graph g(n);
    int u, v;
    while (is >> u >> v) g.add_edge(u, v);
    if (!is.eof() && is.fail()) throw std::invalid_argument("edge list: malformed pair");
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
    Graph g(n);
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

} // namespace mrr
