#include "mrr/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mrr {

int Group::power(int g, long e) const {
    if (g < 0 || g >= order) throw std::invalid_argument("element out of range");
    long m = elem_order[g];
    e %= m;
    if (e < 0) e += m;
    int acc = 0;
    for (long i = 0; i < e; ++i) acc = mul_at(acc, g);
    return acc;
}

Group make_group(int order, std::vector<int> mul, std::string label) {
    if (order < 1 || order > kMaxGroupOrder)
        throw std::invalid_argument("group order out of range: " + std::to_string(order));
    if (static_cast<int>(mul.size()) != order * order)
        throw std::invalid_argument("multiplication table has wrong size");
    Group g;
    g.order = order;
    g.mul = std::move(mul);
    g.label = std::move(label);
    for (int a = 0; a < order; ++a) {
        if (g.mul_at(0, a) != a || g.mul_at(a, 0) != a)
            throw std::invalid_argument("element 0 is not an identity");
    }
    g.inv.assign(order, -1);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b)
            if (g.mul_at(a, b) == 0) {
                if (g.mul_at(b, a) != 0) throw std::invalid_argument("one-sided inverse");
                g.inv[a] = b;
                break;
            }
        if (g.inv[a] < 0) throw std::invalid_argument("element without inverse");
    }
    g.elem_order.assign(order, 0);
    for (int a = 0; a < order; ++a) {
        int e = a, k = 1;
        while (e != 0) {
            e = g.mul_at(e, a);
            ++k;
            if (k > order + 1) throw std::invalid_argument("element order exceeds group order");
        }
        g.elem_order[a] = a == 0 ? 1 : k;
    }
    return g;
}

void check_axioms(const Group& g) {
    int n = g.order;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = g.mul_at(a, b);
            if (ab < 0 || ab >= n) throw std::logic_error("product out of range");
            for (int c = 0; c < n; ++c)
                if (g.mul_at(ab, c) != g.mul_at(a, g.mul_at(b, c)))
                    throw std::logic_error("associativity violated");
        }
    for (int a = 0; a < n; ++a) {
        if (g.mul_at(0, a) != a || g.mul_at(a, 0) != a) throw std::logic_error("identity violated");
        if (g.mul_at(a, g.inv[a]) != 0) throw std::logic_error("inverse violated");
        if (g.inv[g.inv[a]] != a) throw std::logic_error("inverse is not an involution as a map");
        int e = 0;
        for (int k = 1; k <= g.elem_order[a]; ++k) {
            e = g.mul_at(e, a);
            if (e == 0 && k != g.elem_order[a]) throw std::logic_error("stored element order too large");
        }
        if (e != 0) throw std::logic_error("stored element order wrong");
    }
}

Group abelian(const std::vector<int>& invariant_factors) {
    if (invariant_factors.empty()) throw std::invalid_argument("abelian: need at least one factor");
    long n = 1;
    for (int f : invariant_factors) {
        if (f < 2) throw std::invalid_argument("abelian: factors must be >= 2");
        n *= f;
        if (n > kMaxGroupOrder) throw std::invalid_argument("abelian: order exceeds capacity");
    }
    int k = static_cast<int>(invariant_factors.size());
    std::vector<long> stride(k, 1);
    for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * invariant_factors[i + 1];

    auto digits = [&](long e) {
        std::vector<int> d(k);
        for (int i = 0; i < k; ++i) {
            d[i] = static_cast<int>(e / stride[i]);
            e %= stride[i];
        }
        return d;
    };

    std::vector<int> mul(n * n);
    for (long a = 0; a < n; ++a) {
        std::vector<int> da = digits(a);
        for (long b = 0; b < n; ++b) {
            std::vector<int> db = digits(b);
            long e = 0;
            for (int i = 0; i < k; ++i) e += ((da[i] + db[i]) % invariant_factors[i]) * stride[i];
            mul[a * n + b] = static_cast<int>(e);
        }
    }
    std::string label = "ab:";
    for (int i = 0; i < k; ++i) label += (i ? "," : "") + std::to_string(invariant_factors[i]);
    Group g = make_group(static_cast<int>(n), std::move(mul), label);
    for (int i = 0; i < k; ++i) g.generators["z" + std::to_string(i + 1)] = static_cast<int>(stride[i]);
    return g;
}

Group dihedral(int n) {
    if (n < 3) throw std::invalid_argument("dihedral: need n >= 3");
    if (2 * n > kMaxGroupOrder) throw std::invalid_argument("dihedral: order exceeds capacity");
    int order = 2 * n;
    // element (eps, k) = a^eps b^k, index eps*n + k
    std::vector<int> mul(order * order);
    for (int e1 = 0; e1 < 2; ++e1)
        for (int k1 = 0; k1 < n; ++k1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int k2 = 0; k2 < n; ++k2) {
                    int k = ((e2 ? -k1 : k1) + k2) % n;
                    if (k < 0) k += n;
                    mul[(e1 * n + k1) * order + (e2 * n + k2)] = ((e1 ^ e2) * n + k);
                }
    Group g = make_group(order, std::move(mul), "dih:" + std::to_string(n));
    g.generators["a"] = n;
    g.generators["b"] = 1;
    return g;
}

Group quaternion8() {
    // 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k
    auto unit = [](int e) { return e / 2; }; // 0:1, 1:i, 2:j, 3:k
    auto sign = [](int e) { return e % 2; };
    auto pack = [](int u, int s) { return u * 2 + s; };
    // unit products over {1,i,j,k}; usign[a][b] = 1 when a*b carries a minus
    // (i*j = +k, j*i = -k, i*i = -1, ...)
    static const int uprod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int usign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<int> mul(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int u = uprod[unit(a)][unit(b)];
            int s = (sign(a) + sign(b) + usign[unit(a)][unit(b)]) % 2;
            mul[a * 8 + b] = pack(u, s);
        }
    Group g = make_group(8, std::move(mul), "q8");
    g.generators["i"] = 2;
    g.generators["j"] = 4;
    g.generators["k"] = 6;
    return g;
}

Group alternating4() {
    // Even permutations of {0,1,2,3}, identity first, rest sorted by image tuple.
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2, 3};
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inversions;
        if (inversions % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int n = static_cast<int>(perms.size());
    std::vector<int> mul(n * n);
    auto index_of = [&](const std::vector<int>& q) {
        for (int i = 0; i < n; ++i)
            if (perms[i] == q) return i;
        throw std::logic_error("permutation not found");
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // product ab acts as: first apply b, then a
            std::vector<int> q(4);
            for (int x = 0; x < 4; ++x) q[x] = perms[a][perms[b][x]];
            mul[a * n + b] = index_of(q);
        }
    Group g = make_group(n, std::move(mul), "a4");
    g.generators["r"] = index_of({1, 2, 0, 3});
    g.generators["s"] = index_of({1, 0, 3, 2});
    return g;
}

Group direct_product(const Group& g1, const Group& g2) {
    long n = static_cast<long>(g1.order) * g2.order;
    if (n > kMaxGroupOrder) throw std::invalid_argument("direct product exceeds capacity");
    int n2 = g2.order;
    std::vector<int> mul(n * n);
    for (int a1 = 0; a1 < g1.order; ++a1)
        for (int a2 = 0; a2 < n2; ++a2)
            for (int b1 = 0; b1 < g1.order; ++b1)
                for (int b2 = 0; b2 < n2; ++b2)
                    mul[(static_cast<long>(a1) * n2 + a2) * n + (static_cast<long>(b1) * n2 + b2)] =
                        g1.mul_at(a1, b1) * n2 + g2.mul_at(a2, b2);
    Group g = make_group(static_cast<int>(n), std::move(mul), "prod(" + g1.label + "," + g2.label + ")");
    for (const auto& [name, e] : g1.generators) g.generators[name] = e * n2;
    for (const auto& [name, e] : g2.generators)
        if (!g.generators.count(name)) g.generators[name] = e;
    return g;
}

Group generalized_dicyclic(const Group& a, int y) {
    if (!is_abelian(a)) throw std::invalid_argument("generalized_dicyclic: A must be abelian");
    if (y <= 0 || y >= a.order || a.elem_order[y] != 2)
        throw std::invalid_argument("generalized_dicyclic: y must be an involution of A");
    int m = a.order;
    int n = 2 * m;
    if (n > kMaxGroupOrder) throw std::invalid_argument("generalized_dicyclic: order exceeds capacity");
    std::vector<int> mul(static_cast<long>(n) * n);
    // a*b, a*(xb) = x a^-1 b, (xa)*b = x(ab), (xa)*(xb) = y a^-1 b
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            mul[static_cast<long>(p) * n + q] = a.mul_at(p, q);
            mul[static_cast<long>(p) * n + (m + q)] = m + a.mul_at(a.inv[p], q);
            mul[static_cast<long>(m + p) * n + q] = m + a.mul_at(p, q);
            mul[static_cast<long>(m + p) * n + (m + q)] = a.mul_at(y, a.mul_at(a.inv[p], q));
        }
    Group g = make_group(n, std::move(mul), "dic:" + a.label + "@" + std::to_string(y));
    for (const auto& [name, e] : a.generators) g.generators[name] = e;
    g.generators["x"] = m;
    g.dic = Group::DicInfo{m, y, m};
    return g;
}

int element_order(const Group& g, int e) {
    if (e < 0 || e >= g.order) throw std::invalid_argument("element out of range");
    return g.elem_order[e];
}

std::vector<int> involutions(const Group& g) {
    std::vector<int> out;
    for (int e = 1; e < g.order; ++e)
        if (g.elem_order[e] == 2) out.push_back(e);
    return out;
}

bool is_abelian(const Group& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (g.mul_at(a, b) != g.mul_at(b, a)) return false;
    return true;
}

int group_exponent(const Group& g) {
    long e = 1;
    for (int a = 0; a < g.order; ++a) e = std::lcm(e, static_cast<long>(g.elem_order[a]));
    return static_cast<int>(e);
}

namespace {

// Partitions of e in descending lexicographic order, e.g. 3 -> [3],[2,1],[1,1,1].
std::vector<std::vector<int>> partitions(int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(e, e);
    return out;
}

} // namespace

std::vector<std::vector<int>> abelian_groups_of_order(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    if (n == 1) return {};
    std::vector<std::pair<int, int>> prime_powers; // (p, e)
    int m = n;
    for (int p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            prime_powers.push_back({p, e});
        }
    if (m > 1) prime_powers.push_back({m, 1});

    std::vector<std::vector<std::vector<int>>> per_prime;
    for (auto [p, e] : prime_powers) per_prime.push_back(partitions(e));

    std::vector<std::vector<int>> out;
    std::vector<size_t> pick(prime_powers.size(), 0);
    while (true) {
        // assemble invariant factors d_i = prod_p p^{lambda_i}, descending
        size_t len = 0;
        for (size_t i = 0; i < pick.size(); ++i)
            len = std::max(len, per_prime[i][pick[i]].size());
        std::vector<int> factors(len, 1);
        for (size_t i = 0; i < pick.size(); ++i) {
            const auto& lam = per_prime[i][pick[i]];
            for (size_t j = 0; j < lam.size(); ++j) {
                int pw = 1;
                for (int t = 0; t < lam[j]; ++t) pw *= prime_powers[i].first;
                factors[j] *= pw;
            }
        }
        out.push_back(factors);
        size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < per_prime[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    return out;
}

} // namespace mrr
