#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mrr/bigint.hpp"
#include "mrr/search.hpp"

namespace mrr {

enum class ClaimKind { IndexUpperBound, ExactIndexExhaustive, ExactIndexByTheorem };

// How the lower half of an exact claim is certified when no exhaustive
// search runs: no_grr (the group admits no GRR, so index >= 2), inversion
// (abelian of exponent > 2: inversion is a nontrivial automorphism fixing
// the identity), quasi8 (hamiltonian 2-group: the 8 quasi-automorphisms).
enum class LowerBoundRule { None, NoGrr, Inversion, Quasi8 };

struct CatalogEntry {
    int table = 0; // paper table the row transcribes; 0 for generated rows
    std::string group_spec;
    ClaimKind claim_kind = ClaimKind::IndexUpperBound;
    long claimed_index = 1;
    std::optional<std::string> witness_conn;
    std::optional<std::string> product_base_spec; // rows presented as D x Z2
    std::optional<std::string> product_base_conn;
    LowerBoundRule lower_bound = LowerBoundRule::None;
    std::string provenance;
};

struct Certificate {
    enum class Status { Pass, Fail, Skipped };
    CatalogEntry entry;
    BigInt computed_index = 0;
    std::vector<std::vector<int>> aut_generators; // of the verified witness graph
    std::optional<SearchResult> exhaustive_search;
    Status status = Status::Skipped;
    std::string detail;
};

struct Report {
    std::vector<Certificate> certificates;
    int pass_count = 0;
    int fail_count = 0;
    int skipped_count = 0;
};

// Line-delimited catalog with a versioned header; see data/catalog.txt.
std::vector<CatalogEntry> parse_catalog(const std::string& text);
std::vector<CatalogEntry> load_catalog(const std::string& path);

// The Table 1 row "all other abelian groups -> 2" realized as a generated
// desk-scale sweep: every abelian group of order <= max_order not carrying
// its own catalog row, claimed at index exactly 2.
std::vector<CatalogEntry> abelian_sweep_entries(int max_order = 32);

Certificate verify_entry(const CatalogEntry& e, const SearchBudget& budget = {});

Report run_all(const std::vector<CatalogEntry>& entries, const SearchBudget& budget = {},
               int jobs = 1);

std::string serialize_report(const Report& r);

// Parses a serialized report and re-checks every stored automorphism
// generator against the rebuilt witness graph.
Report parse_report(const std::string& text);

// Randomized GRR hunt (fixed seed): random inverse-closed sets until one has
// Cayley index 1. Returns the witness elements if found.
std::optional<std::vector<int>> hunt_grr(GroupPtr g, int max_tries = 512, unsigned seed = 0x5EED);

} // namespace mrr
