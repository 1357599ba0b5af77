#pragma once

#include <string>
#include <vector>

#include "mrr/group.hpp"

namespace mrr {

// Finitely presented group. Relator letters are signed generator indices:
// +(g+1) for generator g, -(g+1) for its inverse.
struct Presentation {
    int generator_count = 0;
    std::vector<std::vector<int>> relators;
    std::vector<std::string> gen_names; // optional; g1, g2, ... when absent
};

inline constexpr int kMaxPresentationGenerators = 8;
inline constexpr int kDefaultMaxCosets = 4096;

// HLT-style Todd-Coxeter over the trivial subgroup, with a lookahead pass
// when the table fills up. Returns the regular-representation multiplication
// table of the presented group. Deterministic given the presentation.
// Throws on coset table overflow; overflow means the enumeration exceeded
// its budget, not that the group is infinite.
Group coset_enumerate(const Presentation& p, int max_cosets = kDefaultMaxCosets);

// Text format: `gens a b c; rel a^2; rel a*b*c*(b*c*a)^-1;`
// Equations are accepted as sugar: `rel a*b*c = b*c*a;` stores lhs*(rhs)^-1.
// Parse errors report a byte offset.
Presentation parse_presentation(const std::string& text);

enum class Exceptional { H1, H2, H3, H4 };

// The four exceptional groups realized by coset enumeration of their stored
// presentations; orders 16, 16, 18, 27.
Group builtin_exceptional(Exceptional which);

// Evaluates a relator word at the realized generators; identity iff satisfied.
int evaluate_word(const Group& g, const std::vector<int>& gen_elems, const std::vector<int>& word);

} // namespace mrr
