#pragma once

#include <iosfwd>
#include <vector>

#include "mrr/bigint.hpp"
#include "mrr/graph.hpp"

namespace mrr {

// Ordered vertex coloring. color[v] is the index of v's class; classes are
// ordered by index and every index 0..num_colors-1 is nonempty.
struct Coloring {
    std::vector<int> color;
    int num_colors = 0;
};

Coloring uniform_coloring(int n);

// Coarsest equitable refinement of c: within each class, all vertices have
// the same number of neighbours in every class. Deterministic; never merges
// classes of c.
Coloring equitable_refine(const Graph& g, const Coloring& c);

struct AutResult {
    std::vector<std::vector<int>> generators; // each gen[v] = image of v
    BigInt order = 1;
    std::vector<int> base; // individualized vertices along the first search path
};

// Generators and exact order of Aut(g), by individualization-refinement with
// orbit pruning along a base. Order is the product of orbit lengths down the
// stabilizer chain of the base.
AutResult automorphisms(const Graph& g);

BigInt stabilizer_order(const Graph& g, int v);

// Relabeling-invariant canonical representative; two graphs are isomorphic
// iff their canonical forms are equal.
std::vector<int> canonical_labeling(const Graph& g); // perm[v] = canonical label of v
Graph canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// Debug trace (one line per search tree node) written to *os; pass nullptr to
// disable. Format: "node level=<l> cells=<k> pick=<v>". Not a stable API.
void set_aut_trace(std::ostream* os);

bool is_graph_automorphism(const Graph& g, const std::vector<int>& perm);

// Orbit of v under a set of permutations (used for orbit-stabilizer counting).
std::vector<int> permutation_orbit(int n, const std::vector<std::vector<int>>& gens, int v);

} // namespace mrr
