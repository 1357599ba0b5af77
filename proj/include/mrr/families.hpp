#pragma once

#include <string>
#include <vector>

#include "mrr/cayley.hpp"
#include "mrr/group.hpp"

namespace mrr {

// A connection set together with ownership of its group.
struct FamilyGraph {
    GroupPtr group;
    ConnectionSet conn;
};

// Suitable pair (a1, a2) of elements of the abelian part A of Dic(A,y,x):
//   (i)   a1 not in {a2, y*a2}
//   (ii)  ai^2 not in {1, y} for both i
//   (iii) ai not in {aj^2, y*aj^2} for both orderings
//   (iv)  a1*a2 not in {1, y}
// Throws if d is not generalized dicyclic or the arguments lie outside A.
bool is_suitable_pair(const Group& d, int a1, int a2);

// Cay(Dic(Z_2n, z1^n, x), {z1, z1^-1, x, x^-1, x z1, x^-1 z1, x z1^-2, x^-1 z1^-2});
// index 2 for n >= 5.
FamilyGraph lemma52_graph(int n);

// Same connection pattern plus z2 on Dic(Z_2n x Z_2, z2, x); index 2 for n >= 3.
FamilyGraph lemma53_graph(int n);

// All permutations phi with phi(1) = 1 and phi(gh) in {phi(g)h, phi(g)h^-1}
// for all g, h; found by constrained DFS (each phi(g) is g or g^-1).
std::vector<std::vector<int>> quasi_automorphisms(const Group& g, int max_order = 64);

// Certifies index >= 8 for a hamiltonian 2-group without computing Aut:
// checks that all 8 quasi-automorphisms preserve adjacency of Cay(G,S).
bool verify_lower_bound_8(const ConnectionSet& s);

// Constructive c(G x Z2) <= c(G): products the given connected MRR with K2
// after checking it is relatively prime to K2 and that G avoids the five
// exceptional groups for which no such MRR exists.
IndexReport cor44_bound(const ConnectionSet& mrr);

bool is_hamiltonian_2group(const Group& g);

// True if d is isomorphic to a group covered by the two index-2 dicyclic
// families: Dic(Z_2n x Z2^k, z1^n, x) with n >= 5 and
// Dic(Z_2n x Z2^{k+1}, z2, x) with n >= 3.
bool covered_by_dicyclic_families(const Group& d);

struct DicTarget {
    GroupPtr group;
    GroupPtr abelian_part;
    int y = 0;
    std::string label;
};

// The filter pipeline over all abelian A of even order <= 48, one y per
// Aut(A)-class of involutions: drops abelian and hamiltonian results, groups
// covered by the two families above, and D x Z2 for smaller dicyclic D
// already certified at index 2 at that stage; dedupes by isomorphism.
// Yields the 15 remaining target groups.
std::vector<DicTarget> enumerate_dicyclic_targets();

// Spot verification of the two index-2 families at Z2-extension depth k
// (0 or 1) for all n with group order <= max_order. Returns the orders
// verified; every instance must compute index exactly 2.
std::vector<int> verify_dicyclic_family(int bullet, int k, int max_order = 128);

} // namespace mrr
