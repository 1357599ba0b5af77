#include "mrr/graph_aut.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace mrr {

namespace {

std::ostream* g_trace = nullptr;

using Cells = std::vector<std::vector<int>>;

Cells cells_from_coloring(const Coloring& c) {
    Cells cells(c.num_colors);
    for (int v = 0; v < static_cast<int>(c.color.size()); ++v) {
        int k = c.color[v];
        if (k < 0 || k >= c.num_colors) throw std::invalid_argument("coloring has out-of-range color");
        cells[k].push_back(v);
    }
    for (auto& cell : cells)
        if (cell.empty()) throw std::invalid_argument("coloring has an empty color class");
    return cells;
}

Coloring coloring_from_cells(int n, const Cells& cells) {
    Coloring c;
    c.color.assign(n, -1);
    c.num_colors = static_cast<int>(cells.size());
    for (int k = 0; k < c.num_colors; ++k)
        for (int v : cells[k]) c.color[v] = k;
    return c;
}

struct Mask {
    std::vector<std::uint64_t> words;
    explicit Mask(int n) : words((n + 63) / 64, 0) {}
    void set(int v) { words[v >> 6] |= 1ull << (v & 63); }
};

int count_into(const Graph& g, int v, const Mask& m) {
    const std::uint64_t* r = g.row(v);
    int c = 0;
    for (size_t w = 0; w < m.words.size(); ++w) c += __builtin_popcountll(r[w] & m.words[w]);
    return c;
}

// Worklist refinement. Splitter snapshots stay valid because cells only ever
// subdivide. Subcells are emitted in ascending neighbour-count order, which
// keeps the result isomorphism-invariant.
void refine_cells(const Graph& g, Cells& cells) {
    std::vector<std::vector<int>> queue(cells.begin(), cells.end());
    size_t qhead = 0;
    while (qhead < queue.size()) {
        Mask m(g.n());
        for (int v : queue[qhead]) m.set(v);
        ++qhead;
        for (size_t ci = 0; ci < cells.size(); ++ci) {
            if (cells[ci].size() <= 1) continue;
            std::map<int, std::vector<int>> by_count;
            for (int v : cells[ci]) by_count[count_into(g, v, m)].push_back(v);
            if (by_count.size() <= 1) continue;
            Cells parts;
            for (auto& [cnt, vs] : by_count) parts.push_back(std::move(vs));
            cells.erase(cells.begin() + ci);
            cells.insert(cells.begin() + ci, parts.begin(), parts.end());
            for (auto& p : parts) queue.push_back(p);
            ci += parts.size() - 1;
        }
    }
}

bool discrete(const Cells& cells) {
    for (auto& c : cells)
        if (c.size() != 1) return false;
    return true;
}

// First non-singleton cell of smallest size, lowest index.
int target_cell(const Cells& cells) {
    int best = -1;
    size_t best_size = 0;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].size() <= 1) continue;
        if (best < 0 || cells[i].size() < best_size) {
            best = static_cast<int>(i);
            best_size = cells[i].size();
        }
    }
    return best;
}

Cells individualize(const Cells& cells, int cell_idx, int v) {
    Cells out;
    out.reserve(cells.size() + 1);
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
        if (i != cell_idx) {
            out.push_back(cells[i]);
            continue;
        }
        out.push_back({v});
        std::vector<int> rest;
        for (int w : cells[i])
            if (w != v) rest.push_back(w);
        out.push_back(std::move(rest));
    }
    return out;
}

std::vector<int> cell_sizes(const Cells& cells) {
    std::vector<int> s;
    s.reserve(cells.size());
    for (auto& c : cells) s.push_back(static_cast<int>(c.size()));
    return s;
}

std::vector<int> flatten(const Cells& cells) {
    std::vector<int> lab;
    for (auto& c : cells) lab.push_back(c[0]);
    return lab;
}

void trace_node(int level, const Cells& cells, int pick) {
    if (g_trace)
        (*g_trace) << "node level=" << level << " cells=" << cells.size() << " pick=" << pick << '\n';
}

struct OrbitSet {
    std::vector<int> parent;
    explicit OrbitSet(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    void absorb(const std::vector<int>& perm) {
        for (int v = 0; v < static_cast<int>(perm.size()); ++v) unite(v, perm[v]);
    }
};

// --- automorphism group search -------------------------------------------

class AutSearch {
public:
    explicit AutSearch(const Graph& g) : g_(g) {}

    AutResult run() {
        Cells root = cells_from_coloring(uniform_coloring(g_.n()));
        refine_cells(g_, root);
        first_path(root, 0);
        AutResult res;
        res.generators = gens_;
        res.order = order_;
        res.base = base_;
        return res;
    }

private:
    const Graph& g_;
    std::vector<std::vector<int>> gens_;
    std::vector<int> base_;
    std::vector<int> first_leaf_;
    std::vector<std::vector<int>> first_inv_; // per-level refined cell sizes
    BigInt order_ = 1;

    std::vector<std::vector<int>> gens_fixing_prefix(int depth) const {
        std::vector<std::vector<int>> out;
        for (const auto& p : gens_) {
            bool fixes = true;
            for (int i = 0; i < depth; ++i)
                if (p[base_[i]] != base_[i]) {
                    fixes = false;
                    break;
                }
            if (fixes) out.push_back(p);
        }
        return out;
    }

    // Continues the leftmost path, then resolves sibling orbits level by level.
    void first_path(const Cells& cells, int level) {
        first_inv_.push_back(cell_sizes(cells));
        if (discrete(cells)) {
            first_leaf_ = flatten(cells);
            return;
        }
        int t = target_cell(cells);
        const std::vector<int> cell = cells[t];
        int b = cell[0];
        trace_node(level, cells, b);
        base_.push_back(b);
        {
            Cells child = individualize(cells, t, b);
            refine_cells(g_, child);
            first_path(child, level + 1);
        }
        // Sibling exploration: one witness automorphism per candidate suffices
        // to settle orbit membership of the base point at this level.
        std::vector<int> tried{b};
        for (size_t i = 1; i < cell.size(); ++i) {
            int v = cell[i];
            OrbitSet orb(g_.n());
            for (const auto& p : gens_fixing_prefix(level)) orb.absorb(p);
            bool dup = false;
            for (int u : tried)
                if (orb.find(u) == orb.find(v)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            Cells child = individualize(cells, t, v);
            refine_cells(g_, child);
            off_path(child, level + 1);
            tried.push_back(v);
        }
        OrbitSet orb(g_.n());
        for (const auto& p : gens_fixing_prefix(level)) orb.absorb(p);
        int orbit_size = 0;
        for (int v : cell)
            if (orb.find(v) == orb.find(b)) ++orbit_size;
        order_ *= orbit_size;
    }

    // Searches for a single automorphism whose leaf matches the first leaf.
    bool off_path(const Cells& cells, int level) {
        if (cell_sizes(cells) != first_inv_[level]) return false;
        if (discrete(cells)) {
            std::vector<int> lab = flatten(cells);
            std::vector<int> perm(g_.n());
            for (size_t p = 0; p < lab.size(); ++p) perm[first_leaf_[p]] = lab[p];
            if (is_graph_automorphism(g_, perm)) {
                gens_.push_back(perm);
                return true;
            }
            return false;
        }
        int t = target_cell(cells);
        const std::vector<int> cell = cells[t];
        for (int v : cell) {
            trace_node(level, cells, v);
            Cells child = individualize(cells, t, v);
            refine_cells(g_, child);
            if (off_path(child, level + 1)) return true;
        }
        return false;
    }
};

// --- canonical labeling search --------------------------------------------

using LeafString = std::vector<std::uint64_t>;

LeafString leaf_string(const Graph& g, const std::vector<int>& lab) {
    int n = g.n();
    LeafString s((static_cast<long>(n) * (n - 1) / 2 + 63) / 64, 0);
    long bit = 0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            if (g.adj(lab[p], lab[q])) s[bit >> 6] |= 1ull << (bit & 63);
            ++bit;
        }
    return s;
}

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g) {}

    std::vector<int> run() {
        Cells root = cells_from_coloring(uniform_coloring(g_.n()));
        refine_cells(g_, root);
        search(root);
        // best_lab_[p] = vertex at canonical position p; return v -> position.
        std::vector<int> canon(g_.n());
        for (int p = 0; p < g_.n(); ++p) canon[best_lab_[p]] = p;
        return canon;
    }

private:
    const Graph& g_;
    bool have_best_ = false;
    std::vector<int> best_trail_;
    LeafString best_string_;
    std::vector<int> best_lab_;
    std::vector<int> cur_trail_;
    std::vector<int> prefix_; // individualized vertices along the current path
    std::vector<std::vector<int>> gens_;

    // -1: current path is lexicographically smaller (better) so far,
    //  0: equal, +1: worse.
    int compare_trail_prefix() const {
        size_t m = std::min(cur_trail_.size(), best_trail_.size());
        for (size_t i = 0; i < m; ++i) {
            if (cur_trail_[i] < best_trail_[i]) return -1;
            if (cur_trail_[i] > best_trail_[i]) return 1;
        }
        return 0;
    }

    void search(const Cells& cells) {
        std::vector<int> inv = cell_sizes(cells);
        size_t mark = cur_trail_.size();
        cur_trail_.push_back(static_cast<int>(inv.size()));
        cur_trail_.insert(cur_trail_.end(), inv.begin(), inv.end());
        if (have_best_ && compare_trail_prefix() > 0) {
            cur_trail_.resize(mark);
            return;
        }
        if (discrete(cells)) {
            process_leaf(flatten(cells));
            cur_trail_.resize(mark);
            return;
        }
        int t = target_cell(cells);
        const std::vector<int> cell = cells[t];
        std::vector<int> tried;
        for (int v : cell) {
            OrbitSet orb(g_.n());
            for (const auto& p : gens_) {
                bool fixes = true;
                for (int u : prefix_)
                    if (p[u] != u) {
                        fixes = false;
                        break;
                    }
                if (fixes) orb.absorb(p);
            }
            bool dup = false;
            for (int u : tried)
                if (orb.find(u) == orb.find(v)) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            tried.push_back(v);
            Cells child = individualize(cells, t, v);
            refine_cells(g_, child);
            prefix_.push_back(v);
            search(child);
            prefix_.pop_back();
        }
        cur_trail_.resize(mark);
    }

    void process_leaf(const std::vector<int>& lab) {
        LeafString s = leaf_string(g_, lab);
        if (!have_best_) {
            adopt(lab, s);
            return;
        }
        int c = compare_trail_prefix();
        if (c == 0 && cur_trail_.size() != best_trail_.size())
            c = cur_trail_.size() < best_trail_.size() ? -1 : 1;
        if (c == 0) {
            if (s < best_string_) {
                adopt(lab, s);
            } else if (s == best_string_) {
                std::vector<int> perm(g_.n());
                for (size_t p = 0; p < lab.size(); ++p) perm[best_lab_[p]] = lab[p];
                if (is_graph_automorphism(g_, perm)) gens_.push_back(perm);
            }
        } else if (c < 0) {
            adopt(lab, s);
        }
    }

    void adopt(const std::vector<int>& lab, const LeafString& s) {
        have_best_ = true;
        best_trail_ = cur_trail_;
        best_string_ = s;
        best_lab_ = lab;
    }
};

} // namespace

void set_aut_trace(std::ostream* os) { g_trace = os; }

Coloring uniform_coloring(int n) {
    Coloring c;
    c.color.assign(n, 0);
    c.num_colors = 1;
    return c;
}

Coloring equitable_refine(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.n())
        throw std::invalid_argument("coloring size does not match graph");
    Cells cells = cells_from_coloring(c);
    refine_cells(g, cells);
    return coloring_from_cells(g.n(), cells);
}

bool is_graph_automorphism(const Graph& g, const std::vector<int>& perm) {
    int n = g.n();
    if (static_cast<int>(perm.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        if (perm[v] < 0 || perm[v] >= n || seen[perm[v]]) return false;
        seen[perm[v]] = 1;
    }
    // Edges map to edges; with a bijection and equal edge counts that is
    // already the full condition.
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != g.degree(perm[u])) return false;
        for (int v = u + 1; v < n; ++v)
            if (g.adj(u, v) && !g.adj(perm[u], perm[v])) return false;
    }
    return true;
}

std::vector<int> permutation_orbit(int n, const std::vector<std::vector<int>>& gens, int v) {
    std::vector<char> in(n, 0);
    std::vector<int> orbit{v};
    in[v] = 1;
    for (size_t i = 0; i < orbit.size(); ++i)
        for (const auto& p : gens) {
            int w = p[orbit[i]];
            if (!in[w]) {
                in[w] = 1;
                orbit.push_back(w);
            }
        }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

AutResult automorphisms(const Graph& g) {
    AutSearch s(g);
    return s.run();
}

BigInt stabilizer_order(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("stabilizer vertex out of range");
    AutResult a = automorphisms(g);
    size_t orbit = permutation_orbit(g.n(), a.generators, v).size();
    if (a.order % orbit != 0) throw std::logic_error("orbit size does not divide group order");
    return a.order / static_cast<long>(orbit);
}

std::vector<int> canonical_labeling(const Graph& g) {
    CanonSearch s(g);
    return s.run();
}

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace mrr
