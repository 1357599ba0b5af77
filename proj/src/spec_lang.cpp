#include "mrr/spec_lang.hpp"

#include <cctype>

#include "mrr/presentation.hpp"

namespace mrr {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    explicit Cursor(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    bool eat_word(const std::string& w) {
        skip_ws();
        if (s.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
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
    // Integer list where a comma continues the list only when a digit follows;
    // this keeps `prod(ab:2,2,ab:3)` unambiguous.
    std::vector<int> int_list() {
        std::vector<int> out;
        out.push_back(static_cast<int>(integer()));
        while (true) {
            size_t save = pos;
            if (!eat(',')) break;
            skip_ws();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
                pos = save;
                break;
            }
            out.push_back(static_cast<int>(integer()));
        }
        return out;
    }
};

Group parse_spec(Cursor& c) {
    c.skip_ws();
    size_t at = c.pos;
    if (c.eat_word("ab:")) return abelian(c.int_list());
    if (c.eat_word("dih:")) return dihedral(static_cast<int>(c.integer()));
    if (c.eat_word("dic:")) {
        Group a = parse_spec(c);
        c.expect('@');
        long y = c.integer();
        if (y < 0 || y >= a.order) throw ParseError("dic involution index out of range", c.pos);
        return generalized_dicyclic(a, static_cast<int>(y));
    }
    if (c.eat_word("prod(")) {
        Group g1 = parse_spec(c);
        c.expect(',');
        Group g2 = parse_spec(c);
        c.expect(')');
        return direct_product(g1, g2);
    }
    if (c.eat_word("q8")) return quaternion8();
    if (c.eat_word("a4")) return alternating4();
    if (c.eat_word("h1")) return builtin_exceptional(Exceptional::H1);
    if (c.eat_word("h2")) return builtin_exceptional(Exceptional::H2);
    if (c.eat_word("h3")) return builtin_exceptional(Exceptional::H3);
    if (c.eat_word("h4")) return builtin_exceptional(Exceptional::H4);
    throw ParseError("unknown group spec", at);
}

} // namespace

Group parse_group_spec(const std::string& text) {
    Cursor c(text);
    Group g = parse_spec(c);
    c.skip_ws();
    if (c.pos != text.size()) throw ParseError("trailing input after group spec", c.pos);
    return g;
}

namespace {

// factor := name ('^' int)? ; expr := factor ('*' factor)*
int parse_element_expr(Cursor& c, const Group& g) {
    int acc = 0;
    while (true) {
        c.skip_ws();
        size_t at = c.pos;
        std::string name;
        while (c.pos < c.s.size() &&
               (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_'))
            name += c.s[c.pos++];
        if (name.empty()) throw ParseError("expected generator name", at);
        auto it = g.generators.find(name);
        if (it == g.generators.end())
            throw ParseError("unknown generator '" + name + "' for group " + g.label, at);
        int e = it->second;
        if (c.eat('^')) e = g.power(e, c.integer());
        acc = g.mul_at(acc, e);
        if (!c.eat('*')) break;
    }
    return acc;
}

} // namespace

std::vector<int> parse_connection_elements(const Group& g, const std::string& text) {
    Cursor c(text);
    std::vector<int> out;
    auto push = [&](int e) {
        for (int x : out)
            if (x == e) return;
        out.push_back(e);
    };
    c.skip_ws();
    if (c.pos == text.size()) return out; // empty set
    while (true) {
        if (c.eat_word("pm(")) {
            int e = parse_element_expr(c, g);
            c.expect(')');
            push(e);
            push(g.inv[e]);
        } else {
            push(parse_element_expr(c, g));
        }
        if (!c.eat(',')) break;
    }
    c.skip_ws();
    if (c.pos != text.size()) throw ParseError("trailing input after connection set", c.pos);
    return out;
}

} // namespace mrr
