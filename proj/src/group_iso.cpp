#include "mrr/group_iso.hpp"

#include <algorithm>
#include <stdexcept>

namespace mrr {

bool GroupHom::is_homomorphism() const {
    if (!source || !target || static_cast<int>(image.size()) != source->order) return false;
    for (int a = 0; a < source->order; ++a)
        for (int b = 0; b < source->order; ++b)
            if (image[source->mul_at(a, b)] != target->mul_at(image[a], image[b])) return false;
    return true;
}

bool GroupHom::is_automorphism() const {
    if (source != target) return false;
    std::vector<char> seen(source->order, 0);
    for (int v : image) {
        if (v < 0 || v >= source->order || seen[v]) return false;
        seen[v] = 1;
    }
    return is_homomorphism();
}

std::vector<int> subgroup_closure(const Group& g, const std::vector<int>& gens) {
    std::vector<char> in(g.order, 0);
    std::vector<int> elems{0};
    in[0] = 1;
    for (size_t i = 0; i < elems.size(); ++i)
        for (int s : gens) {
            int e = g.mul_at(elems[i], s);
            if (!in[e]) {
                in[e] = 1;
                elems.push_back(e);
            }
        }
    return elems;
}

std::vector<int> greedy_generating_sequence(const Group& g) {
    std::vector<int> gens;
    size_t have = 1;
    while (have < static_cast<size_t>(g.order)) {
        int best = -1;
        size_t best_size = have;
        for (int e = 1; e < g.order; ++e) {
            std::vector<int> trial = gens;
            trial.push_back(e);
            size_t sz = subgroup_closure(g, trial).size();
            if (sz > best_size) {
                best_size = sz;
                best = e;
            }
        }
        if (best < 0) throw std::logic_error("generating sequence stalled");
        gens.push_back(best);
        have = best_size;
    }
    return gens;
}

namespace {

// Shared engine for Aut(G) and isomorphism testing: assign images of a
// generating sequence of g1 into g2 and propagate by closure. The closure
// walk checks phi(e*s) = phi(e)*phi(s) for every discovered e and every
// assigned generator s, which by induction on word length gives the full
// homomorphism property once all generators are assigned.
struct ImageSearch {
    const Group& g1;
    const Group& g2;
    std::vector<int> gens;                     // generating sequence of g1
    std::vector<std::vector<int>> prefix_elems; // closure of gens[0..i]
    bool collect_all;
    std::vector<GroupHom> found;

    ImageSearch(const Group& a, const Group& b, bool all) : g1(a), g2(b), collect_all(all) {
        gens = greedy_generating_sequence(g1);
        for (size_t i = 1; i <= gens.size(); ++i)
            prefix_elems.push_back(
                subgroup_closure(g1, std::vector<int>(gens.begin(), gens.begin() + i)));
    }

    bool extend(std::vector<int>& image, size_t level) {
        if (level == gens.size()) {
            GroupHom h{&g1, &g2, image};
            found.push_back(std::move(h));
            return true;
        }
        int src = gens[level];
        bool any = false;
        for (int cand = 0; cand < g2.order; ++cand) {
            if (g2.elem_order[cand] != g1.elem_order[src]) continue;
            std::vector<int> img = image;
            img[src] = cand;
            if (!close_prefix(img, level)) continue;
            if (extend(img, level + 1)) {
                any = true;
                if (!collect_all) return true;
            }
        }
        return any;
    }

    // Rebuild phi on <gens[0..level]> from the generator images; fail on any
    // inconsistency or collision.
    bool close_prefix(std::vector<int>& img, size_t level) {
        const std::vector<int>& elems = prefix_elems[level];
        std::vector<int> phi(g1.order, -1);
        std::vector<char> used(g2.order, 0);
        phi[0] = 0;
        used[0] = 1;
        std::vector<int> work{0};
        std::vector<int> act_gens(gens.begin(), gens.begin() + level + 1);
        for (size_t i = 0; i < work.size(); ++i) {
            int e = work[i];
            for (int s : act_gens) {
                int es = g1.mul_at(e, s);
                int target = g2.mul_at(phi[e], img[s]);
                if (phi[es] < 0) {
                    if (used[target]) return false;
                    phi[es] = target;
                    used[target] = 1;
                    work.push_back(es);
                } else if (phi[es] != target) {
                    return false;
                }
            }
        }
        if (work.size() != elems.size()) throw std::logic_error("closure size mismatch");
        for (int e : work) img[e] = phi[e];
        return true;
    }

    std::vector<int> fresh_image() const {
        std::vector<int> img(g1.order, -1);
        img[0] = 0;
        return img;
    }
};

std::vector<long> order_profile(const Group& g) {
    std::vector<long> p(g.elem_order.begin(), g.elem_order.end());
    std::sort(p.begin(), p.end());
    return p;
}

int center_size(const Group& g) {
    int c = 0;
    for (int a = 0; a < g.order; ++a) {
        bool central = true;
        for (int b = 0; b < g.order && central; ++b) central = g.mul_at(a, b) == g.mul_at(b, a);
        if (central) ++c;
    }
    return c;
}

int squares_count(const Group& g) {
    std::vector<char> sq(g.order, 0);
    for (int a = 0; a < g.order; ++a) sq[g.mul_at(a, a)] = 1;
    return static_cast<int>(std::count(sq.begin(), sq.end(), 1));
}

} // namespace

std::vector<GroupHom> automorphism_group(const Group& g, int max_order) {
    if (g.order > max_order)
        throw std::invalid_argument("automorphism_group: order " + std::to_string(g.order) +
                                    " exceeds budget " + std::to_string(max_order));
    ImageSearch s(g, g, /*all=*/true);
    std::vector<int> img = s.fresh_image();
    s.extend(img, 0);
    return std::move(s.found);
}

bool groups_isomorphic(const Group& g1, const Group& g2, int max_order) {
    if (g1.order != g2.order) return false;
    if (g1.order > max_order)
        throw std::invalid_argument("groups_isomorphic: order exceeds budget");
    if (order_profile(g1) != order_profile(g2)) return false;
    if (is_abelian(g1) != is_abelian(g2)) return false;
    if (center_size(g1) != center_size(g2)) return false;
    if (squares_count(g1) != squares_count(g2)) return false;
    ImageSearch s(g1, g2, /*all=*/false);
    std::vector<int> img = s.fresh_image();
    return s.extend(img, 0);
}

std::vector<std::vector<int>> involution_classes(const Group& a, int max_order) {
    if (!is_abelian(a)) throw std::invalid_argument("involution_classes: group must be abelian");
    std::vector<GroupHom> auts = automorphism_group(a, max_order);
    std::vector<int> invs = involutions(a);
    std::vector<char> taken(a.order, 0);
    std::vector<std::vector<int>> classes;
    for (int y : invs) {
        if (taken[y]) continue;
        std::vector<int> cls;
        for (const auto& h : auts) {
            int im = h.image[y];
            if (!taken[im]) {
                taken[im] = 1;
                cls.push_back(im);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

} // namespace mrr
