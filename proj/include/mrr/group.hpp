#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mrr {

inline constexpr int kMaxGroupOrder = 512;

// Finite group as a dense multiplication table. Elements are indices
// 0..order-1 with the identity fixed at 0. Immutable after construction.
struct Group {
    int order = 0;
    std::vector<int> mul;        // order x order, row-major
    std::vector<int> inv;        // per-element inverse
    std::vector<int> elem_order; // per-element multiplicative order
    std::string label;
    std::map<std::string, int> generators; // named generators for the parsers

    // Set for generalized dicyclic groups Dic(A, y, x): elements 0..a_order-1
    // are A (with A's own numbering), element x_elem = a_order represents x,
    // and index a_order + a is x*a.
    struct DicInfo {
        int a_order;
        int y;
        int x_elem;
    };
    std::optional<DicInfo> dic;

    int mul_at(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
    int power(int g, long e) const;
};

using GroupPtr = std::shared_ptr<const Group>;

// Builds inv/elem_order from a multiplication table and validates the
// identity and inverse axioms (associativity is checked by check_axioms).
Group make_group(int order, std::vector<int> mul, std::string label);

// Full axiom check: associativity over all triples, identity, inverses,
// element orders. Exhaustive, so quadratic-to-cubic in the order; intended
// for tests and construction-time sanity at desk scale. Throws on violation.
void check_axioms(const Group& g);

// Z_{i1} x ... x Z_{ik}; elements are mixed-radix tuples with the last factor
// varying fastest, so element (a1,..,ak) has index a1*i2*...*ik + ... + ak.
// Canonical generators z1..zk are registered by name.
Group abelian(const std::vector<int>& invariant_factors);

// Dihedral group of order 2n with presentation a^2 = b^n = 1, aba = b^-1.
// Elements 0..n-1 are rotations b^k, n..2n-1 are reflections a b^k.
Group dihedral(int n);

Group quaternion8();  // named generators i, j, k
Group alternating4(); // named generators r = (0 1 2), s = (0 1)(2 3)

// Componentwise product; element (g1, g2) has index g1 * |G2| + g2, matching
// the row-major vertex encoding of cartesian graph products.
Group direct_product(const Group& g1, const Group& g2);

// Dic(A, y, x): A abelian, y an involution of A, x^2 = y, x^-1 a x = a^-1.
// Elements are A followed by xA (index |A| + a encodes x*a).
Group generalized_dicyclic(const Group& a, int y);

int element_order(const Group& g, int e);
std::vector<int> involutions(const Group& g);
bool is_abelian(const Group& g);
int group_exponent(const Group& g);

// Invariant-factor lists (d1 >= d2 >= ..., d_{i+1} | d_i) of all abelian
// groups of order n, in a fixed deterministic order.
std::vector<std::vector<int>> abelian_groups_of_order(int n);

} // namespace mrr
