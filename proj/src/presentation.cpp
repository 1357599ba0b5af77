#include "mrr/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

#include "mrr/spec_lang.hpp"

namespace mrr {

namespace {

// Column encoding: generator g -> 2g, its inverse -> 2g+1.
int col_of(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
int col_inv(int c) { return c ^ 1; }

struct CosetTable {
    int ncols;
    int max_cosets;
    std::vector<std::vector<int>> tab; // tab[coset][col], -1 undefined
    std::vector<int> p;                // union-find, p[c] <= c
    std::deque<int> dead_queue;
    int live = 1;

    CosetTable(int ncols_, int max_cosets_) : ncols(ncols_), max_cosets(max_cosets_) {
        tab.push_back(std::vector<int>(ncols, -1));
        p.push_back(0);
    }

    int rep(int c) {
        int r = c;
        while (p[r] != r) r = p[r];
        while (p[c] != r) {
            int next = p[c];
            p[c] = r;
            c = next;
        }
        return r;
    }

    bool alive(int c) { return rep(c) == c; }

    int define(int a, int x) {
        if (live >= max_cosets) return -1;
        int b = static_cast<int>(tab.size());
        tab.push_back(std::vector<int>(ncols, -1));
        p.push_back(b);
        ++live;
        tab[a][x] = b;
        tab[b][col_inv(x)] = a;
        return b;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        int mu = std::min(a, b), nu = std::max(a, b);
        p[nu] = mu;
        --live;
        dead_queue.push_back(nu);
    }

    void coincidence(int a, int b) {
        merge(a, b);
        while (!dead_queue.empty()) {
            int gamma = dead_queue.front();
            dead_queue.pop_front();
            for (int x = 0; x < ncols; ++x) {
                int delta = tab[gamma][x];
                if (delta < 0) continue;
                tab[delta][col_inv(x)] = -1;
                int mu = rep(gamma), nu = rep(delta);
                if (tab[mu][x] >= 0)
                    merge(nu, rep(tab[mu][x]));
                else if (tab[nu][col_inv(x)] >= 0)
                    merge(mu, rep(tab[nu][col_inv(x)]));
                else {
                    tab[mu][x] = nu;
                    tab[nu][col_inv(x)] = mu;
                }
            }
        }
    }

    // Scans relator w at coset a; fills gaps by defining when fill is set.
    // Returns false when a definition was needed but the table is full.
    bool scan(int a, const std::vector<int>& w, bool fill) {
        int f = a, i = 0;
        int b = a, j = static_cast<int>(w.size()) - 1;
        while (true) {
            while (i <= j && tab[f][w[i]] >= 0) f = rep(tab[f][w[i]]), ++i;
            if (i > j) {
                if (f != b) coincidence(f, b);
                return true;
            }
            while (j >= i && tab[b][col_inv(w[j])] >= 0) b = rep(tab[b][col_inv(w[j])]), --j;
            if (j < i) {
                coincidence(f, b);
                return true;
            }
            if (j == i) {
                tab[f][w[i]] = b;
                tab[b][col_inv(w[i])] = f;
                return true;
            }
            if (!fill) return true;
            if (define(f, w[i]) < 0) return false;
        }
    }
};

std::vector<std::vector<int>> relator_columns(const Presentation& pres) {
    std::vector<std::vector<int>> out;
    for (const auto& rel : pres.relators) {
        if (rel.empty()) throw std::invalid_argument("empty relator");
        std::vector<int> w;
        for (int letter : rel) {
            if (letter == 0 || std::abs(letter) > pres.generator_count)
                throw std::invalid_argument("relator letter out of range");
            w.push_back(col_of(letter));
        }
        out.push_back(std::move(w));
    }
    return out;
}

} // namespace

int evaluate_word(const Group& g, const std::vector<int>& gen_elems, const std::vector<int>& word) {
    int acc = 0;
    for (int letter : word) {
        int e = letter > 0 ? gen_elems[letter - 1] : g.inv[gen_elems[-letter - 1]];
        acc = g.mul_at(acc, e);
    }
    return acc;
}

Group coset_enumerate(const Presentation& pres, int max_cosets) {
    if (pres.generator_count < 1 || pres.generator_count > kMaxPresentationGenerators)
        throw std::invalid_argument("generator count out of range");
    if (pres.relators.empty()) throw std::invalid_argument("need at least one relator");
    std::vector<std::vector<int>> rels = relator_columns(pres);
    int ncols = 2 * pres.generator_count;

    CosetTable ct(ncols, max_cosets);
    bool did_lookahead = false;
    for (int alpha = 0; alpha < static_cast<int>(ct.tab.size()); ++alpha) {
        if (!ct.alive(alpha)) continue;
        bool full = false;
        for (const auto& w : rels) {
            if (!ct.scan(alpha, w, /*fill=*/true)) {
                full = true;
                break;
            }
            if (!ct.alive(alpha)) break;
        }
        if (ct.alive(alpha) && !full) {
            for (int x = 0; x < ncols && !full; ++x)
                if (ct.tab[alpha][x] < 0 && ct.define(alpha, x) < 0) full = true;
        }
        if (full) {
            // Lookahead: deduction-only pass over the whole table, hoping
            // coincidences free enough space to continue.
            if (did_lookahead) throw std::runtime_error("coset table overflow");
            did_lookahead = true;
            int before = ct.live;
            for (int beta = 0; beta < static_cast<int>(ct.tab.size()); ++beta) {
                if (!ct.alive(beta)) continue;
                for (const auto& w : rels) {
                    ct.scan(beta, w, /*fill=*/false);
                    if (!ct.alive(beta)) break;
                }
            }
            if (ct.live >= before) throw std::runtime_error("coset table overflow");
            --alpha; // retry this coset
            continue;
        }
    }

    // Renumber live cosets (ascending old id; coset 0 survives as identity).
    std::vector<int> newid(ct.tab.size(), -1);
    int n = 0;
    for (int c = 0; c < static_cast<int>(ct.tab.size()); ++c)
        if (ct.alive(c)) newid[c] = n++;
    if (n > kMaxGroupOrder) throw std::runtime_error("presented group exceeds group capacity");
    std::vector<std::vector<int>> act(n, std::vector<int>(ncols, -1));
    for (int c = 0; c < static_cast<int>(ct.tab.size()); ++c) {
        if (!ct.alive(c)) continue;
        for (int x = 0; x < ncols; ++x) {
            if (ct.tab[c][x] < 0) throw std::logic_error("incomplete coset table after enumeration");
            act[newid[c]][x] = newid[ct.rep(ct.tab[c][x])];
        }
    }

    // Representative words by BFS from the identity coset, then the full
    // multiplication table: coset(i) * coset(j) = i traversed by word(j).
    std::vector<int> parent(n, -1), letter(n, -1);
    std::vector<int> order_bfs{0};
    for (size_t h = 0; h < order_bfs.size(); ++h) {
        int c = order_bfs[h];
        for (int x = 0; x < ncols; ++x) {
            int d = act[c][x];
            if (d != 0 && parent[d] < 0) {
                parent[d] = c;
                letter[d] = x;
                order_bfs.push_back(d);
            }
        }
    }
    if (static_cast<int>(order_bfs.size()) != n)
        throw std::logic_error("coset table is not transitive");
    std::vector<std::vector<int>> word(n);
    for (int c : order_bfs) {
        if (c == 0) continue;
        word[c] = word[parent[c]];
        word[c].push_back(letter[c]);
    }
    std::vector<int> mul(static_cast<long>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int c = i;
            for (int x : word[j]) c = act[c][x];
            mul[static_cast<long>(i) * n + j] = c;
        }
    Group g = make_group(n, std::move(mul), "presented");
    for (int i = 0; i < pres.generator_count; ++i) {
        std::string name =
            i < static_cast<int>(pres.gen_names.size()) ? pres.gen_names[i] : "g" + std::to_string(i + 1);
        g.generators[name] = act[0][2 * i];
    }
    return g;
}

namespace {

struct PresParser {
    const std::string& s;
    size_t pos = 0;

    explicit PresParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) throw ParseError("expected identifier", pos);
        return s.substr(start, pos - start);
    }
    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (digits == pos) throw ParseError("expected integer", pos);
        return std::stol(s.substr(start, pos - start));
    }
};

void append_power(std::vector<int>& word, const std::vector<int>& base, long e) {
    std::vector<int> unit = base;
    if (e < 0) {
        std::reverse(unit.begin(), unit.end());
        for (int& x : unit) x = -x;
        e = -e;
    }
    for (long i = 0; i < e; ++i) word.insert(word.end(), unit.begin(), unit.end());
}

// expr := factor ('*' factor)* ; factor := (name | '(' expr ')') ('^' int)?
std::vector<int> parse_word(PresParser& p, const std::vector<std::string>& names) {
    std::vector<int> word;
    while (true) {
        std::vector<int> factor;
        p.skip_ws();
        if (p.eat('(')) {
            factor = parse_word(p, names);
            if (!p.eat(')')) throw ParseError("expected ')'", p.pos);
        } else {
            size_t at = p.pos;
            std::string name = p.ident();
            auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end()) throw ParseError("unknown generator '" + name + "'", at);
            factor.push_back(static_cast<int>(it - names.begin()) + 1);
        }
        long e = 1;
        if (p.eat('^')) e = p.integer();
        append_power(word, factor, e);
        if (!p.eat('*')) break;
    }
    return word;
}

} // namespace

Presentation parse_presentation(const std::string& text) {
    PresParser p(text);
    Presentation pres;
    bool have_gens = false;
    while (true) {
        p.skip_ws();
        if (p.pos >= text.size()) break;
        size_t at = p.pos;
        std::string kw = p.ident();
        if (kw == "gens") {
            if (have_gens) throw ParseError("duplicate gens statement", at);
            have_gens = true;
            while (true) {
                p.skip_ws();
                if (p.pos < text.size() && std::isalpha(static_cast<unsigned char>(text[p.pos]))) {
                    pres.gen_names.push_back(p.ident());
                } else
                    break;
            }
            if (pres.gen_names.empty()) throw ParseError("gens: need at least one name", p.pos);
            if (static_cast<int>(pres.gen_names.size()) > kMaxPresentationGenerators)
                throw ParseError("too many generators", p.pos);
            pres.generator_count = static_cast<int>(pres.gen_names.size());
        } else if (kw == "rel") {
            if (!have_gens) throw ParseError("rel before gens", at);
            std::vector<int> lhs = parse_word(p, pres.gen_names);
            if (p.eat('=')) {
                std::vector<int> rhs = parse_word(p, pres.gen_names);
                std::reverse(rhs.begin(), rhs.end());
                for (int& x : rhs) x = -x;
                lhs.insert(lhs.end(), rhs.begin(), rhs.end());
            }
            if (lhs.empty()) throw ParseError("empty relator", p.pos);
            pres.relators.push_back(std::move(lhs));
        } else {
            throw ParseError("expected 'gens' or 'rel'", at);
        }
        if (!p.eat(';')) throw ParseError("expected ';'", p.pos);
    }
    if (!have_gens) throw ParseError("missing gens statement", 0);
    if (pres.relators.empty()) throw ParseError("missing relators", text.size());
    return pres;
}

Group builtin_exceptional(Exceptional which) {
    // H4 as printed in the source material leaves |b| unbounded (the
    // presentation would be infinite); b^3 = 1 pins the order-27 group.
    static const char* kH1 =
        "gens a b c; rel a^2; rel b^2; rel c^2; rel a*b*c = b*c*a; rel a*b*c = c*a*b;";
    static const char* kH2 = "gens a b; rel a^8; rel b^2; rel b*a*b = a^5;";
    static const char* kH3 =
        "gens a b c; rel a^3; rel b^3; rel c^2; rel a*b = b*a; rel (a*c)^2; rel (b*c)^2;";
    static const char* kH4 =
        "gens a b c; rel a^3; rel b^3; rel c^3; rel a*c = c*a; rel b*c = c*b; rel b^-1*a*b = a*c;";
    const char* text = nullptr;
    int expect = 0;
    std::string label;
    switch (which) {
        case Exceptional::H1: text = kH1; expect = 16; label = "h1"; break;
        case Exceptional::H2: text = kH2; expect = 16; label = "h2"; break;
        case Exceptional::H3: text = kH3; expect = 18; label = "h3"; break;
        case Exceptional::H4: text = kH4; expect = 27; label = "h4"; break;
    }
    Group g = coset_enumerate(parse_presentation(text));
    if (g.order != expect)
        throw std::logic_error("exceptional group " + label + " enumerated to order " +
                               std::to_string(g.order));
    g.label = label;
    return g;
}

} // namespace mrr
