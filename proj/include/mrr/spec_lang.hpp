#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mrr/group.hpp"

namespace mrr {

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& msg, size_t off)
        : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Group spec mini-language:
//   ab:4,2,2 | dih:6 | q8 | a4 | h1..h4 | dic:<abelian spec>@<involution index>
//   | prod(<spec>,<spec>)
// dih:n is the dihedral group of order 2n; the dic involution is the
// mixed-radix element index of y in the abelian group (last factor fastest).
// Whitespace-insensitive; errors carry a byte offset.
Group parse_group_spec(const std::string& text);

// Connection-set element expressions over the group's named generators:
//   z1, z1^-1, x*z1, pm(z2), i^2*k
// pm(e) includes e and its inverse. Returns element indices (duplicates
// removed, order preserved).
std::vector<int> parse_connection_elements(const Group& g, const std::string& text);

} // namespace mrr
