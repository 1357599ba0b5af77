// Command-line front end: catalog verification, single-graph index
// computation, exhaustive search, graph factorization, quasi-automorphism
// counting, and the dicyclic target enumeration.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mrr/catalog.hpp"
#include "mrr/families.hpp"
#include "mrr/graph_factor.hpp"
#include "mrr/search.hpp"
#include "mrr/spec_lang.hpp"

using namespace mrr;

namespace {

SearchBudget budget_from_env() {
    SearchBudget b;
    if (const char* v = std::getenv("MRR_MAX_CANDIDATES")) b.max_candidates = std::atol(v);
    return b;
}

int cmd_verify(const std::string& catalog_path, const std::string& out_path, int jobs,
               bool with_sweep) {
    std::vector<CatalogEntry> entries = load_catalog(catalog_path);
    if (with_sweep) {
        std::vector<CatalogEntry> sweep = abelian_sweep_entries();
        entries.insert(entries.end(), sweep.begin(), sweep.end());
    }
    Report report = run_all(entries, budget_from_env(), jobs);
    std::string text = serialize_report(report);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << text;
    } else {
        std::cout << text;
    }
    std::cerr << "pass " << report.pass_count << ", fail " << report.fail_count << ", skipped "
              << report.skipped_count << " of " << report.certificates.size() << '\n';
    return report.fail_count == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley index verification toolkit"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "verify a claim catalog");
    std::string catalog_path = "data/catalog.txt";
    std::string out_path;
    int jobs = 1;
    bool no_sweep = false;
    verify->add_option("--catalog", catalog_path, "catalog file");
    verify->add_option("--out", out_path, "write the report here instead of stdout");
    verify->add_option("--jobs", jobs, "parallel verification workers");
    verify->add_flag("--no-sweep", no_sweep, "skip the generated abelian sweep rows");

    auto* index = app.add_subcommand("index", "Cayley index of one connection set");
    std::string group_spec, conn_text;
    index->add_option("--group", group_spec, "group spec")->required();
    index->add_option("--conn", conn_text, "connection set")->required();

    auto* search = app.add_subcommand("search", "exhaustive minimum Cayley index");
    std::string search_group;
    long budget_candidates = 0;
    int width = 1;
    search->add_option("--group", search_group, "group spec")->required();
    search->add_option("--budget", budget_candidates, "candidate cap");
    search->add_option("--jobs", width, "parallel evaluation width");

    auto* factor = app.add_subcommand("factor", "cartesian prime factorization of a graph6 file");
    std::string graph_path;
    factor->add_option("--graph", graph_path, "graph6 file")->required();

    auto* quasi = app.add_subcommand("quasi", "quasi-automorphisms of a group");
    std::string quasi_group;
    quasi->add_option("--group", quasi_group, "group spec")->required();

    app.add_subcommand("enumerate-dicyclic", "the 15 dicyclic target groups");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(catalog_path, out_path, jobs, !no_sweep);

        if (index->parsed()) {
            auto g = std::make_shared<const Group>(parse_group_spec(group_spec));
            ConnectionSet s = connection_set(g, parse_connection_elements(*g, conn_text));
            IndexReport r = cayley_index_of(s);
            std::cout << "group " << g->label << " order " << g->order << '\n'
                      << "degree " << s.size() << '\n'
                      << "aut order " << r.aut_order.str() << '\n'
                      << "cayley index " << r.cayley_index.str() << '\n'
                      << "graph6 " << to_graph6(r.graph) << '\n';
            return 0;
        }

        if (search->parsed()) {
            auto g = std::make_shared<const Group>(parse_group_spec(search_group));
            SearchBudget b = budget_from_env();
            if (budget_candidates > 0) b.max_candidates = budget_candidates;
            b.parallel_width = width;
            SearchResult r = min_cayley_index(g, b, [](long examined, const BigInt& best) {
                std::cout << "PROGRESS " << examined << ' ' << best.str() << '\n';
            });
            std::cout << "group " << r.group_label << '\n'
                      << "min index " << r.min_index.str() << '\n'
                      << "witness";
            for (int e : r.witness.elements()) std::cout << ' ' << e;
            std::cout << '\n'
                      << "candidates " << r.candidates_examined << '\n'
                      << "exhaustive " << (r.exhaustive ? "true" : "false") << '\n';
            return 0;
        }

        if (factor->parsed()) {
            std::ifstream f(graph_path);
            if (!f) throw std::runtime_error("cannot open " + graph_path);
            std::string line;
            std::getline(f, line);
            Graph g = from_graph6(line);
            Factorization fac = prime_factorization(g);
            std::cout << fac.factors.size() << " prime factor(s)\n";
            for (const Graph& h : fac.factors)
                std::cout << "  n=" << h.n() << " graph6 " << to_graph6(h) << '\n';
            return 0;
        }

        if (quasi->parsed()) {
            Group g = parse_group_spec(quasi_group);
            auto q = quasi_automorphisms(g);
            std::cout << q.size() << " quasi-automorphism(s) of " << g.label << '\n';
            return 0;
        }

        // enumerate-dicyclic
        for (const DicTarget& t : enumerate_dicyclic_targets())
            std::cout << t.label << "  order " << t.group->order << '\n';
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
}
