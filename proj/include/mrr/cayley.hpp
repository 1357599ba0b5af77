#pragma once

#include <cstdint>
#include <vector>

#include "mrr/bigint.hpp"
#include "mrr/graph.hpp"
#include "mrr/graph_aut.hpp"
#include "mrr/group.hpp"

namespace mrr {

// Inverse-closed, identity-free subset of a group, stored as an element
// bitset keyed to the group's element numbering.
struct ConnectionSet {
    GroupPtr group;
    std::vector<std::uint64_t> mask;

    bool contains(int e) const { return (mask[e >> 6] >> (e & 63)) & 1u; }
    std::vector<int> elements() const;
    int size() const;
};

// Validates the set; with close=false a non-inverse-closed input is an
// error, with close=true inverses are added automatically.
ConnectionSet connection_set(GroupPtr g, const std::vector<int>& elems, bool close = false);

// The complement connection set G \ ({1} u S); its Cayley graph is the
// complement graph, so both share an automorphism group.
ConnectionSet complement_set(const ConnectionSet& s);

// Vertex g is element index g; no relabeling.
Graph cayley_graph(const ConnectionSet& s);

// Verifies h -> gh is an automorphism of Cay(G,S) for every g. Always true;
// doubles as a construction self-test.
bool left_regular_embedding_check(const ConnectionSet& s);

struct IndexReport {
    Graph graph;
    AutResult aut;
    BigInt aut_order;
    int group_order = 0;
    BigInt cayley_index;
    BigInt stabilizer_of_identity_order;
};

// |Aut(Cay(G,S))| / |G|; the division is checked exact.
IndexReport cayley_index_of(const ConnectionSet& s);

bool is_grr(const ConnectionSet& s);

// Identifies Cay(G1,S1) box Cay(G2,S2) as the Cayley graph of the product
// connection set S1 x {1} u {1} x S2 on G1 x G2 (bit-exact under the
// row-major vertex encoding) and returns its index report. Requires both
// graphs connected and relatively prime; asserts the index multiplies.
IndexReport product_mrr(const ConnectionSet& s1, const ConnectionSet& s2);

ConnectionSet product_connection_set(GroupPtr product, const ConnectionSet& s1,
                                     const ConnectionSet& s2);

} // namespace mrr
