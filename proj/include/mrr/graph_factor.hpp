#pragma once

#include <vector>

#include "mrr/graph.hpp"

namespace mrr {

// Prime factorization with respect to the cartesian product. factors are the
// prime factors; coordinates[v] is the tuple of factor-vertex indices of v,
// so that u ~ v in the input iff the tuples differ in exactly one slot i by
// an edge of factors[i].
struct Factorization {
    std::vector<Graph> factors;
    std::vector<std::vector<int>> coordinates;
};

// Djokovic-Winkler relation + transitive closure, then square-property
// merging down to the product coloring. Input must be connected.
Factorization prime_factorization(const Graph& g);

// Independent oracle: tries all induced-subgraph pairs through vertex 0 over
// vertex-count divisor pairs. n <= 16. Returns the prime factor multiset.
std::vector<Graph> prime_factorization_bruteforce(const Graph& g);

bool relatively_prime(const Graph& g1, const Graph& g2);

// Checks that the factorization exactly reproduces g (used by tests and
// internally as the construction post-condition).
bool factorization_reproduces(const Graph& g, const Factorization& f);

} // namespace mrr
