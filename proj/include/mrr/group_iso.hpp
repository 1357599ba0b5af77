#pragma once

#include <vector>

#include "mrr/group.hpp"

namespace mrr {

// Homomorphism between explicit groups, stored as a per-element image map.
// Pointers are non-owning; callers keep the groups alive.
struct GroupHom {
    const Group* source = nullptr;
    const Group* target = nullptr;
    std::vector<int> image;

    bool is_homomorphism() const;
    bool is_automorphism() const;
};

// Greedy generating sequence: repeatedly add the element that extends the
// generated subgroup the most (ties broken by lowest index). Small sequences
// keep the image-assignment search trees shallow.
std::vector<int> greedy_generating_sequence(const Group& g);

std::vector<int> subgroup_closure(const Group& g, const std::vector<int>& gens);

// All automorphisms of g, by backtracking over images of a greedy generating
// sequence with element-order pruning. Throws if g.order > max_order.
std::vector<GroupHom> automorphism_group(const Group& g, int max_order = 64);

bool groups_isomorphic(const Group& g1, const Group& g2, int max_order = 128);

// Aut(A)-orbits of the involutions of an abelian group, each class sorted,
// classes ordered by smallest member.
std::vector<std::vector<int>> involution_classes(const Group& a, int max_order = 64);

} // namespace mrr
