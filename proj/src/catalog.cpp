#include "mrr/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mrr/families.hpp"
#include "mrr/group_iso.hpp"
#include "mrr/spec_lang.hpp"

namespace mrr {

namespace {

std::string kind_str(ClaimKind k) {
    switch (k) {
        case ClaimKind::IndexUpperBound: return "upper";
        case ClaimKind::ExactIndexExhaustive: return "exhaustive";
        case ClaimKind::ExactIndexByTheorem: return "theorem";
    }
    return "?";
}

ClaimKind kind_of(const std::string& s, size_t off) {
    if (s == "upper") return ClaimKind::IndexUpperBound;
    if (s == "exhaustive") return ClaimKind::ExactIndexExhaustive;
    if (s == "theorem") return ClaimKind::ExactIndexByTheorem;
    throw ParseError("unknown claim kind '" + s + "'", off);
}

std::string lower_str(LowerBoundRule r) {
    switch (r) {
        case LowerBoundRule::None: return "none";
        case LowerBoundRule::NoGrr: return "no_grr";
        case LowerBoundRule::Inversion: return "inversion";
        case LowerBoundRule::Quasi8: return "quasi8";
    }
    return "?";
}

LowerBoundRule lower_of(const std::string& s, size_t off) {
    if (s == "none") return LowerBoundRule::None;
    if (s == "no_grr") return LowerBoundRule::NoGrr;
    if (s == "inversion") return LowerBoundRule::Inversion;
    if (s == "quasi8") return LowerBoundRule::Quasi8;
    throw ParseError("unknown lower bound rule '" + s + "'", off);
}

std::vector<std::pair<std::string, std::string>> split_fields(const std::string& line,
                                                              size_t line_off) {
    std::vector<std::pair<std::string, std::string>> out;
    size_t pos = 0;
    while (pos < line.size()) {
        size_t bar = line.find('|', pos);
        std::string field = line.substr(pos, bar == std::string::npos ? bar : bar - pos);
        size_t eq = field.find('=');
        if (eq == std::string::npos)
            throw ParseError("field without '='", line_off + pos);
        out.push_back({field.substr(0, eq), field.substr(eq + 1)});
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    return out;
}

} // namespace

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
    std::vector<CatalogEntry> entries;
    size_t offset = 0;
    bool saw_header = false;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        size_t line_off = offset;
        offset += line.size() + 1;
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("# mrr-catalog v1", 0) == 0) saw_header = true;
            continue;
        }
        if (!saw_header) throw ParseError("entry before '# mrr-catalog v1' header", line_off);
        if (line.rfind("row|", 0) != 0) throw ParseError("expected 'row|'", line_off);
        CatalogEntry e;
        for (auto& [key, value] : split_fields(line.substr(4), line_off + 4)) {
            if (key == "table")
                e.table = std::stoi(value);
            else if (key == "group")
                e.group_spec = value;
            else if (key == "claim")
                e.claim_kind = kind_of(value, line_off);
            else if (key == "index")
                e.claimed_index = std::stol(value);
            else if (key == "conn")
                e.witness_conn = value;
            else if (key == "base")
                e.product_base_spec = value;
            else if (key == "baseconn")
                e.product_base_conn = value;
            else if (key == "lower")
                e.lower_bound = lower_of(value, line_off);
            else if (key == "prov")
                e.provenance = value;
            else
                throw ParseError("unknown field '" + key + "'", line_off);
        }
        if (e.group_spec.empty()) throw ParseError("row without group", line_off);
        if (e.claimed_index < 1) throw ParseError("claimed index must be >= 1", line_off);
        if (e.claim_kind == ClaimKind::IndexUpperBound && !e.witness_conn)
            throw ParseError("upper bound row without witness", line_off);
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open catalog: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_catalog(ss.str());
}

std::vector<CatalogEntry> abelian_sweep_entries(int max_order) {
    // Abelian groups holding their own Table 1 row (or the Z2^n GRR rows).
    static const char* kListed[] = {"ab:2",     "ab:2,2,2", "ab:4,2",     "ab:2,2,2,2",
                                    "ab:4,4",   "ab:4,2,2", "ab:3,3",     "ab:3,3,3",
                                    "ab:2,2,2,2,2"};
    std::vector<Group> listed;
    for (const char* s : kListed) listed.push_back(parse_group_spec(s));

    std::vector<CatalogEntry> out;
    for (int n = 2; n <= max_order; ++n) {
        for (const auto& factors : abelian_groups_of_order(n)) {
            Group g = abelian(factors);
            bool skip = false;
            for (const Group& l : listed)
                if (l.order == g.order && groups_isomorphic(l, g)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            CatalogEntry e;
            e.table = 1;
            e.group_spec = g.label;
            e.claimed_index = 2;
            if (group_exponent(g) > 2) {
                e.claim_kind = ClaimKind::ExactIndexByTheorem;
                e.lower_bound = LowerBoundRule::Inversion;
            } else {
                e.claim_kind = ClaimKind::ExactIndexExhaustive;
            }
            e.provenance = "Table 1, all other abelian groups";
            out.push_back(std::move(e));
        }
    }
    return out;
}

namespace {

// Size-ordered hunt for a subset of inverse classes whose Cayley graph has
// the target index; used for sweep rows (a witness at index exactly 2).
std::optional<ConnectionSet> find_index_witness(GroupPtr g, const BigInt& target) {
    std::vector<std::vector<int>> classes = inverse_classes(*g);
    int k = static_cast<int>(classes.size());
    if (k > 24) return std::nullopt;
    std::vector<std::uint64_t> masks;
    for (std::uint64_t m = 0; m < (1ull << k); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        return __builtin_popcountll(a) < __builtin_popcountll(b);
    });
    for (std::uint64_t m : masks) {
        std::vector<int> elems;
        for (int i = 0; i < k; ++i)
            if ((m >> i) & 1)
                for (int e : classes[i]) elems.push_back(e);
        ConnectionSet s = connection_set(g, elems);
        if (cayley_index_of(s).cayley_index == target) return s;
    }
    return std::nullopt;
}

// g -> g^-1 as a vertex permutation; an automorphism of every Cayley graph
// on an abelian group, and it fixes the identity.
bool inversion_is_nontrivial_automorphism(const ConnectionSet& s) {
    const Group& g = *s.group;
    if (group_exponent(g) <= 2) return false;
    std::vector<int> inv_perm(g.inv.begin(), g.inv.end());
    return is_graph_automorphism(cayley_graph(s), inv_perm);
}

Certificate fail(Certificate c, std::string why) {
    c.status = Certificate::Status::Fail;
    c.detail = std::move(why);
    return c;
}

} // namespace

std::optional<std::vector<int>> hunt_grr(GroupPtr g, int max_tries, unsigned seed) {
    std::vector<std::vector<int>> classes = inverse_classes(*g);
    std::mt19937 rng(seed);
    for (int t = 0; t < max_tries; ++t) {
        std::vector<int> elems;
        for (const auto& cls : classes)
            if (rng() & 1)
                for (int e : cls) elems.push_back(e);
        if (elems.empty()) continue;
        ConnectionSet s = connection_set(g, elems);
        if (cayley_index_of(s).cayley_index == 1) return elems;
    }
    return std::nullopt;
}

Certificate verify_entry(const CatalogEntry& e, const SearchBudget& budget) {
    Certificate cert;
    cert.entry = e;
    GroupPtr group;
    try {
        group = std::make_shared<const Group>(parse_group_spec(e.group_spec));
    } catch (const std::exception& ex) {
        return fail(std::move(cert), std::string("group construction failed: ") + ex.what());
    }

    try {
        BigInt claimed = e.claimed_index;
        // establish the upper bound: explicit witness, product recipe, or search
        std::optional<IndexReport> witness_report;
        if (e.witness_conn) {
            ConnectionSet s =
                connection_set(group, parse_connection_elements(*group, *e.witness_conn));
            witness_report = cayley_index_of(s);
            if (e.lower_bound == LowerBoundRule::Quasi8 && !verify_lower_bound_8(s))
                return fail(std::move(cert), "quasi-automorphism lower bound failed");
            if (e.lower_bound == LowerBoundRule::Inversion &&
                !inversion_is_nontrivial_automorphism(s))
                return fail(std::move(cert), "inversion lower bound failed");
        } else if (e.product_base_spec) {
            auto base =
                std::make_shared<const Group>(parse_group_spec(*e.product_base_spec));
            if (!e.product_base_conn)
                return fail(std::move(cert), "product row without base connection set");
            ConnectionSet bs =
                connection_set(base, parse_connection_elements(*base, *e.product_base_conn));
            IndexReport pr = cor44_bound(bs);
            // the product group must be the row's group
            Group ext = direct_product(*base, abelian({2}));
            if (!groups_isomorphic(ext, *group))
                return fail(std::move(cert), "product group is not isomorphic to the row group");
            witness_report = std::move(pr);
            if (e.lower_bound == LowerBoundRule::Quasi8) {
                auto prod_group = std::make_shared<const Group>(direct_product(*base, abelian({2})));
                auto z2 = std::make_shared<const Group>(abelian({2}));
                ConnectionSet sp =
                    product_connection_set(prod_group, bs, connection_set(z2, {1}));
                if (!verify_lower_bound_8(sp))
                    return fail(std::move(cert), "quasi-automorphism lower bound failed");
            }
        }

        switch (e.claim_kind) {
            case ClaimKind::IndexUpperBound:
            case ClaimKind::ExactIndexByTheorem: {
                if (!witness_report) {
                    // no constructive witness shipped: hunt one (randomized
                    // for GRR claims, size-ordered for sweep rows)
                    std::optional<ConnectionSet> s;
                    if (claimed == 1) {
                        auto found = hunt_grr(group);
                        if (found) s = connection_set(group, *found);
                    } else {
                        s = find_index_witness(group, claimed);
                    }
                    if (!s) {
                        cert.status = Certificate::Status::Skipped;
                        cert.detail = "not certified: no witness found within budget";
                        return cert;
                    }
                    if (e.lower_bound == LowerBoundRule::Inversion &&
                        !inversion_is_nontrivial_automorphism(*s))
                        return fail(std::move(cert), "inversion lower bound failed");
                    witness_report = cayley_index_of(*s);
                    std::string elems;
                    for (int v : s->elements())
                        elems += (elems.empty() ? "" : " ") + std::to_string(v);
                    cert.detail = "witness elements: " + elems;
                }
                cert.computed_index = witness_report->cayley_index;
                cert.aut_generators = witness_report->aut.generators;
                cert.status = cert.computed_index == claimed ? Certificate::Status::Pass
                                                             : Certificate::Status::Fail;
                if (cert.status == Certificate::Status::Fail)
                    cert.detail = "computed index " + cert.computed_index.str() + " != claimed " +
                                  std::to_string(e.claimed_index);
                return cert;
            }
            case ClaimKind::ExactIndexExhaustive: {
                std::vector<std::vector<int>> classes = inverse_classes(*group);
                if (static_cast<int>(classes.size()) > budget.max_classes) {
                    cert.status = Certificate::Status::Skipped;
                    cert.detail = "inverse-class count exceeds search budget";
                    return cert;
                }
                SearchResult res = min_cayley_index(group, budget);
                cert.exhaustive_search = res;
                cert.computed_index = res.min_index;
                IndexReport wr = cayley_index_of(res.witness);
                if (wr.cayley_index != res.min_index)
                    return fail(std::move(cert), "witness recomputation disagrees with search");
                cert.aut_generators = wr.aut.generators;
                if (!res.exhaustive) {
                    cert.status = Certificate::Status::Skipped;
                    cert.detail = "search truncated by budget; best found " + res.min_index.str();
                    return cert;
                }
                if (witness_report && witness_report->cayley_index != claimed)
                    return fail(std::move(cert), "shipped witness does not match claim");
                cert.status = res.min_index == claimed ? Certificate::Status::Pass
                                                       : Certificate::Status::Fail;
                if (cert.status == Certificate::Status::Fail)
                    cert.detail = "exhaustive minimum " + res.min_index.str() + " != claimed " +
                                  std::to_string(e.claimed_index);
                return cert;
            }
        }
    } catch (const std::exception& ex) {
        return fail(std::move(cert), std::string("verification error: ") + ex.what());
    }
    return fail(std::move(cert), "unreachable");
}

Report run_all(const std::vector<CatalogEntry>& entries, const SearchBudget& budget, int jobs) {
    Report report;
    report.certificates.resize(entries.size());
    jobs = std::max(1, jobs);
    auto work = [&](size_t lo, size_t stride) {
        for (size_t i = lo; i < entries.size(); i += stride)
            report.certificates[i] = verify_entry(entries[i], budget);
    };
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(work, t, jobs);
        for (auto& th : threads) th.join();
    }
    for (const Certificate& c : report.certificates) {
        switch (c.status) {
            case Certificate::Status::Pass: ++report.pass_count; break;
            case Certificate::Status::Fail: ++report.fail_count; break;
            case Certificate::Status::Skipped: ++report.skipped_count; break;
        }
    }
    return report;
}

namespace {

std::string perm_str(const std::vector<int>& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s;
}

std::vector<int> parse_perm(const std::string& s, size_t off) {
    std::vector<int> p;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) p.push_back(std::stoi(tok));
    if (p.empty()) throw ParseError("empty permutation", off);
    return p;
}

std::string status_str(Certificate::Status s) {
    switch (s) {
        case Certificate::Status::Pass: return "pass";
        case Certificate::Status::Fail: return "fail";
        case Certificate::Status::Skipped: return "skipped";
    }
    return "?";
}

} // namespace

std::string serialize_report(const Report& r) {
    std::ostringstream os;
    os << "# mrr-report v1\n";
    for (const Certificate& c : r.certificates) {
        os << "cert|table=" << c.entry.table << "|group=" << c.entry.group_spec
           << "|claim=" << kind_str(c.entry.claim_kind) << "|index=" << c.entry.claimed_index;
        if (c.entry.witness_conn) os << "|conn=" << *c.entry.witness_conn;
        if (c.entry.product_base_spec) os << "|base=" << *c.entry.product_base_spec;
        if (c.entry.product_base_conn) os << "|baseconn=" << *c.entry.product_base_conn;
        os << "|lower=" << lower_str(c.entry.lower_bound) << "|prov=" << c.entry.provenance
           << "|computed=" << c.computed_index.str() << "|status=" << status_str(c.status);
        if (!c.detail.empty()) os << "|detail=" << c.detail;
        os << "\n";
        for (const auto& gen : c.aut_generators) os << "gen|" << perm_str(gen) << "\n";
    }
    os << "summary|pass=" << r.pass_count << "|fail=" << r.fail_count
       << "|skipped=" << r.skipped_count << "\n";
    return os.str();
}

Report parse_report(const std::string& text) {
    Report r;
    std::istringstream is(text);
    std::string line;
    size_t offset = 0;
    bool saw_header = false;
    Certificate* cur = nullptr;
    while (std::getline(is, line)) {
        size_t line_off = offset;
        offset += line.size() + 1;
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("# mrr-report v1", 0) == 0) saw_header = true;
            continue;
        }
        if (!saw_header) throw ParseError("report body before header", line_off);
        if (line.rfind("cert|", 0) == 0) {
            Certificate c;
            for (auto& [key, value] : split_fields(line.substr(5), line_off + 5)) {
                if (key == "table")
                    c.entry.table = std::stoi(value);
                else if (key == "group")
                    c.entry.group_spec = value;
                else if (key == "claim")
                    c.entry.claim_kind = kind_of(value, line_off);
                else if (key == "index")
                    c.entry.claimed_index = std::stol(value);
                else if (key == "conn")
                    c.entry.witness_conn = value;
                else if (key == "base")
                    c.entry.product_base_spec = value;
                else if (key == "baseconn")
                    c.entry.product_base_conn = value;
                else if (key == "lower")
                    c.entry.lower_bound = lower_of(value, line_off);
                else if (key == "prov")
                    c.entry.provenance = value;
                else if (key == "computed")
                    c.computed_index = BigInt(value);
                else if (key == "status") {
                    if (value == "pass")
                        c.status = Certificate::Status::Pass;
                    else if (value == "fail")
                        c.status = Certificate::Status::Fail;
                    else if (value == "skipped")
                        c.status = Certificate::Status::Skipped;
                    else
                        throw ParseError("unknown status", line_off);
                } else if (key == "detail")
                    c.detail = value;
                else
                    throw ParseError("unknown report field '" + key + "'", line_off);
            }
            r.certificates.push_back(std::move(c));
            cur = &r.certificates.back();
            switch (cur->status) {
                case Certificate::Status::Pass: ++r.pass_count; break;
                case Certificate::Status::Fail: ++r.fail_count; break;
                case Certificate::Status::Skipped: ++r.skipped_count; break;
            }
        } else if (line.rfind("gen|", 0) == 0) {
            if (!cur) throw ParseError("gen line before cert line", line_off);
            cur->aut_generators.push_back(parse_perm(line.substr(4), line_off + 4));
        } else if (line.rfind("summary|", 0) == 0) {
            for (auto& [key, value] : split_fields(line.substr(8), line_off + 8)) {
                int v = std::stoi(value);
                if (key == "pass" && v != r.pass_count)
                    throw ParseError("summary pass count mismatch", line_off);
                if (key == "fail" && v != r.fail_count)
                    throw ParseError("summary fail count mismatch", line_off);
                if (key == "skipped" && v != r.skipped_count)
                    throw ParseError("summary skipped count mismatch", line_off);
            }
        } else {
            throw ParseError("unknown report line", line_off);
        }
    }
    // Certificates are self-validating: stored generators must be
    // automorphisms of the rebuilt witness graph.
    for (const Certificate& c : r.certificates) {
        if (c.aut_generators.empty() || !c.entry.witness_conn) continue;
        auto group = std::make_shared<const Group>(parse_group_spec(c.entry.group_spec));
        Graph graph = cayley_graph(
            connection_set(group, parse_connection_elements(*group, *c.entry.witness_conn)));
        for (const auto& gen : c.aut_generators)
            if (!is_graph_automorphism(graph, gen))
                throw std::runtime_error("stored generator is not an automorphism of " +
                                         c.entry.group_spec);
    }
    return r;
}

} // namespace mrr
