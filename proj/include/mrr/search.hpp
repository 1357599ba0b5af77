#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mrr/bigint.hpp"
#include "mrr/cayley.hpp"
#include "mrr/group.hpp"

namespace mrr {

struct SearchBudget {
    int max_classes = 19;
    long max_candidates = 1L << 20;
    int parallel_width = 1;
};

struct SearchResult {
    std::string group_label;
    BigInt min_index;
    ConnectionSet witness;
    long candidates_examined = 0;
    bool exhaustive = false;
};

// Partition of G \ {1} into inverse classes: {g} for involutions, {g, g^-1}
// pairs otherwise. Deterministic: ascending by smallest member.
std::vector<std::vector<int>> inverse_classes(const Group& g);

using ProgressFn = std::function<void(long examined, const BigInt& best)>;

// Exact c(G) by exhaustive enumeration of inverse-class subsets, pruning
// complements (keep the side with |S| <= (|G|-1)/2) and Aut(G)-orbit
// duplicates (lexicographically minimal class mask per orbit). Candidates
// are evaluated in ascending mask order; the witness is the (index, mask)
// minimum, so results are deterministic under any parallel_width.
SearchResult min_cayley_index(GroupPtr g, const SearchBudget& budget = {},
                              const ProgressFn& progress = nullptr);

// Test oracle: no complement or orbit pruning at all.
SearchResult min_cayley_index_nopruning(GroupPtr g, const SearchBudget& budget = {});

bool verify_upper_bound(const ConnectionSet& s, const BigInt& claimed);

} // namespace mrr
