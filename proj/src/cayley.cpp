#include "mrr/cayley.hpp"

#include <stdexcept>

#include "mrr/graph_factor.hpp"

namespace mrr {

std::vector<int> ConnectionSet::elements() const {
    std::vector<int> out;
    for (int e = 0; e < group->order; ++e)
        if (contains(e)) out.push_back(e);
    return out;
}

int ConnectionSet::size() const {
    int c = 0;
    for (std::uint64_t w : mask) c += __builtin_popcountll(w);
    return c;
}

ConnectionSet connection_set(GroupPtr g, const std::vector<int>& elems, bool close) {
    if (!g) throw std::invalid_argument("connection_set: null group");
    ConnectionSet s;
    s.group = g;
    s.mask.assign((g->order + 63) / 64, 0);
    auto add = [&](int e) { s.mask[e >> 6] |= 1ull << (e & 63); };
    for (int e : elems) {
        if (e < 0 || e >= g->order) throw std::invalid_argument("connection set element out of range");
        if (e == 0) throw std::invalid_argument("connection set must not contain the identity");
        add(e);
        if (close) add(g->inv[e]);
    }
    if (!close) {
        for (int e : elems)
            if (!s.contains(g->inv[e]))
                throw std::invalid_argument("connection set is not inverse-closed (element " +
                                            std::to_string(e) + " lacks its inverse)");
    }
    return s;
}

ConnectionSet complement_set(const ConnectionSet& s) {
    std::vector<int> elems;
    for (int e = 1; e < s.group->order; ++e)
        if (!s.contains(e)) elems.push_back(e);
    return connection_set(s.group, elems);
}

Graph cayley_graph(const ConnectionSet& s) {
    const Group& g = *s.group;
    Graph graph(g.order);
    for (int v = 0; v < g.order; ++v)
        for (int e : s.elements()) {
            int w = g.mul_at(v, e);
            if (!graph.adj(v, w)) graph.add_edge(v, w);
        }
    return graph;
}

bool left_regular_embedding_check(const ConnectionSet& s) {
    const Group& g = *s.group;
    Graph graph = cayley_graph(s);
    for (int a = 0; a < g.order; ++a) {
        for (int v = 0; v < g.order; ++v)
            for (int w = v + 1; w < g.order; ++w)
                if (graph.adj(v, w) != graph.adj(g.mul_at(a, v), g.mul_at(a, w))) return false;
    }
    return true;
}

IndexReport cayley_index_of(const ConnectionSet& s) {
    IndexReport r;
    r.graph = cayley_graph(s);
    r.aut = automorphisms(r.graph);
    r.aut_order = r.aut.order;
    r.group_order = s.group->order;
    if (r.aut_order % r.group_order != 0)
        throw std::logic_error("|G| does not divide |Aut(Cay(G,S))|: construction bug");
    r.cayley_index = r.aut_order / r.group_order;
    size_t orbit0 = permutation_orbit(r.graph.n(), r.aut.generators, 0).size();
    if (r.aut_order % static_cast<long>(orbit0) != 0)
        throw std::logic_error("orbit of identity does not divide |Aut|");
    r.stabilizer_of_identity_order = r.aut_order / static_cast<long>(orbit0);
    if (static_cast<int>(orbit0) == r.graph.n() &&
        r.stabilizer_of_identity_order != r.cayley_index)
        throw std::logic_error("stabilizer order disagrees with Cayley index");
    return r;
}

bool is_grr(const ConnectionSet& s) { return cayley_index_of(s).cayley_index == 1; }

ConnectionSet product_connection_set(GroupPtr product, const ConnectionSet& s1,
                                     const ConnectionSet& s2) {
    int n2 = s2.group->order;
    std::vector<int> elems;
    for (int e : s1.elements()) elems.push_back(e * n2);
    for (int e : s2.elements()) elems.push_back(e);
    return connection_set(product, elems);
}

IndexReport product_mrr(const ConnectionSet& s1, const ConnectionSet& s2) {
    Graph g1 = cayley_graph(s1);
    Graph g2 = cayley_graph(s2);
    if (!is_connected(g1) || !is_connected(g2))
        throw std::invalid_argument("product_mrr: both Cayley graphs must be connected");
    if (!relatively_prime(g1, g2))
        throw std::invalid_argument("product_mrr: Cayley graphs are not relatively prime");

    auto product = std::make_shared<const Group>(direct_product(*s1.group, *s2.group));
    ConnectionSet sp = product_connection_set(product, s1, s2);
    Graph expected = cartesian_product(g1, g2);
    if (cayley_graph(sp) != expected)
        throw std::logic_error("product connection set does not reproduce the cartesian product");

    IndexReport r = cayley_index_of(sp);
    BigInt i1 = cayley_index_of(s1).cayley_index;
    BigInt i2 = cayley_index_of(s2).cayley_index;
    if (r.cayley_index != i1 * i2)
        throw std::logic_error("product index does not multiply for relatively prime factors");
    return r;
}

} // namespace mrr
