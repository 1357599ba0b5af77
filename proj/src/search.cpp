#include "mrr/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mrr/group_iso.hpp"

namespace mrr {

std::vector<std::vector<int>> inverse_classes(const Group& g) {
    std::vector<std::vector<int>> classes;
    std::vector<char> seen(g.order, 0);
    for (int e = 1; e < g.order; ++e) {
        if (seen[e]) continue;
        seen[e] = 1;
        int ie = g.inv[e];
        if (ie == e) {
            classes.push_back({e});
        } else {
            seen[ie] = 1;
            classes.push_back({e, ie});
        }
    }
    return classes;
}

namespace {

struct ClassContext {
    GroupPtr group;
    std::vector<std::vector<int>> classes;
    std::vector<int> class_sizes;
    int total_nonidentity;
    // class permutations induced by Aut(G); empty when unavailable
    std::vector<std::vector<int>> class_perms;

    explicit ClassContext(GroupPtr g, bool with_auts) : group(g) {
        classes = inverse_classes(*g);
        total_nonidentity = g->order - 1;
        for (const auto& c : classes) class_sizes.push_back(static_cast<int>(c.size()));
        if (with_auts && g->order <= 64) {
            std::vector<int> class_of(g->order, -1);
            for (size_t i = 0; i < classes.size(); ++i)
                for (int e : classes[i]) class_of[e] = static_cast<int>(i);
            for (const auto& h : automorphism_group(*g)) {
                std::vector<int> cp(classes.size());
                bool identity = true;
                for (size_t i = 0; i < classes.size(); ++i) {
                    cp[i] = class_of[h.image[classes[i][0]]];
                    if (cp[i] != static_cast<int>(i)) identity = false;
                }
                if (!identity) class_perms.push_back(std::move(cp));
            }
        }
    }

    int elem_count(std::uint64_t mask) const {
        int c = 0;
        for (size_t i = 0; i < classes.size(); ++i)
            if ((mask >> i) & 1) c += class_sizes[i];
        return c;
    }

    std::uint64_t apply_perm(const std::vector<int>& cp, std::uint64_t mask) const {
        std::uint64_t out = 0;
        while (mask) {
            int i = __builtin_ctzll(mask);
            mask &= mask - 1;
            out |= 1ull << cp[i];
        }
        return out;
    }

    bool canonical_under_auts(std::uint64_t mask) const {
        for (const auto& cp : class_perms)
            if (apply_perm(cp, mask) < mask) return false;
        return true;
    }

    ConnectionSet set_of(std::uint64_t mask) const {
        std::vector<int> elems;
        for (size_t i = 0; i < classes.size(); ++i)
            if ((mask >> i) & 1)
                for (int e : classes[i]) elems.push_back(e);
        return connection_set(group, elems);
    }
};

BigInt index_of_mask(const ClassContext& ctx, std::uint64_t mask) {
    return cayley_index_of(ctx.set_of(mask)).cayley_index;
}

SearchResult finish(const ClassContext& ctx, BigInt best, std::uint64_t best_mask, long examined,
                    bool exhaustive) {
    SearchResult r;
    r.group_label = ctx.group->label;
    r.min_index = std::move(best);
    r.witness = ctx.set_of(best_mask);
    r.candidates_examined = examined;
    r.exhaustive = exhaustive;
    return r;
}

} // namespace

SearchResult min_cayley_index(GroupPtr g, const SearchBudget& budget, const ProgressFn& progress) {
    ClassContext ctx(g, /*with_auts=*/true);
    int k = static_cast<int>(ctx.classes.size());
    if (k > budget.max_classes)
        throw std::invalid_argument("min_cayley_index: " + std::to_string(k) +
                                    " inverse classes exceed budget of " +
                                    std::to_string(budget.max_classes));
    std::uint64_t full = k == 64 ? ~0ull : (1ull << k) - 1;

    // Phase 1: deterministic candidate selection. Keep the smaller side of
    // each complement pair and only Aut(G)-lexicographically-minimal masks.
    std::vector<std::uint64_t> cands;
    bool exhaustive = true;
    for (std::uint64_t mask = 0;; ++mask) {
        std::uint64_t cmask = full & ~mask;
        int sz = ctx.elem_count(mask), csz = ctx.total_nonidentity - sz;
        bool keep = sz < csz || (sz == csz && mask <= cmask);
        if (keep && ctx.canonical_under_auts(mask)) {
            if (static_cast<long>(cands.size()) >= budget.max_candidates) {
                exhaustive = false;
                break;
            }
            cands.push_back(mask);
        }
        if (mask == full) break;
    }

    // Phase 2: evaluate, possibly in parallel; merge on (index, mask).
    int width = std::max(1, budget.parallel_width);
    std::mutex mu;
    BigInt best = -1;
    std::uint64_t best_mask = 0;
    std::atomic<long> examined{0};
    auto worker = [&](size_t lo, size_t hi) {
        BigInt local_best = -1;
        std::uint64_t local_mask = 0;
        for (size_t i = lo; i < hi; ++i) {
            BigInt idx = index_of_mask(ctx, cands[i]);
            long done = ++examined;
            if (local_best < 0 || idx < local_best ||
                (idx == local_best && cands[i] < local_mask)) {
                local_best = idx;
                local_mask = cands[i];
            }
            if (progress && done % 256 == 0) {
                std::lock_guard<std::mutex> lock(mu);
                progress(done, local_best);
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        if (local_best >= 0 &&
            (best < 0 || local_best < best || (local_best == best && local_mask < best_mask))) {
            best = local_best;
            best_mask = local_mask;
        }
    };
    if (width == 1 || cands.size() < 2 * static_cast<size_t>(width)) {
        worker(0, cands.size());
    } else {
        std::vector<std::thread> threads;
        size_t chunk = (cands.size() + width - 1) / width;
        for (int t = 0; t < width; ++t) {
            size_t lo = t * chunk, hi = std::min(cands.size(), (t + 1) * chunk);
            if (lo < hi) threads.emplace_back(worker, lo, hi);
        }
        for (auto& th : threads) th.join();
    }
    if (progress) progress(examined.load(), best);
    return finish(ctx, best, best_mask, examined.load(), exhaustive);
}

SearchResult min_cayley_index_nopruning(GroupPtr g, const SearchBudget& budget) {
    ClassContext ctx(g, /*with_auts=*/false);
    int k = static_cast<int>(ctx.classes.size());
    if (k > budget.max_classes)
        throw std::invalid_argument("min_cayley_index_nopruning: too many classes");
    std::uint64_t full = (1ull << k) - 1;
    BigInt best = -1;
    std::uint64_t best_mask = 0;
    long examined = 0;
    for (std::uint64_t mask = 0;; ++mask) {
        BigInt idx = index_of_mask(ctx, mask);
        ++examined;
        if (best < 0 || idx < best || (idx == best && mask < best_mask)) {
            best = idx;
            best_mask = mask;
        }
        if (mask == full) break;
    }
    return finish(ctx, best, best_mask, examined, true);
}

bool verify_upper_bound(const ConnectionSet& s, const BigInt& claimed) {
    return cayley_index_of(s).cayley_index == claimed;
}

} // namespace mrr
