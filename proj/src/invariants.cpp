#include "bott/invariants.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "bott/gf2.hpp"

namespace bott {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

LevelStructure level_structure(const BottMatrix& a) {
    const int n = a.size();
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::uint64_t r = a.row(i);
        while (r) {
            int j = std::countr_zero(r);
            r &= r - 1;
            ++indeg[static_cast<std::size_t>(j)];
        }
    }
    std::vector<int> level_of(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    // longest incoming path length via relaxation in topological order
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[static_cast<std::size_t>(head)];
        std::uint64_t r = a.row(u);
        while (r) {
            int j = std::countr_zero(r);
            r &= r - 1;
            level_of[static_cast<std::size_t>(j)] =
                std::max(level_of[static_cast<std::size_t>(j)], level_of[static_cast<std::size_t>(u)] + 1);
            if (--indeg[static_cast<std::size_t>(j)] == 0) queue.push_back(j);
        }
    }

    LevelStructure ls;
    ls.level_of = std::move(level_of);
    ls.type.assign(static_cast<std::size_t>(n), 0);
    int max_level = 0;
    for (int v = 0; v < n; ++v) max_level = std::max(max_level, ls.level_of[static_cast<std::size_t>(v)]);
    ls.levels.assign(static_cast<std::size_t>(max_level + 1), {});
    for (int v = 0; v < n; ++v) {
        const int k = ls.level_of[static_cast<std::size_t>(v)];
        ls.levels[static_cast<std::size_t>(k)].push_back(v);
        ++ls.type[static_cast<std::size_t>(k)];
    }
    return ls;
}

std::optional<int> odd_height(const BottMatrix& a) {
    const LevelStructure ls = level_structure(a);
    std::optional<int> h;
    for (int v = 0; v < a.size(); ++v) {
        if (std::popcount(a.row(v)) % 2 == 1) {
            const int k = ls.level_of[static_cast<std::size_t>(v)];
            if (!h || *h < k) h = k;
        }
    }
    return h;
}

std::vector<std::vector<int>> sibling_profile(const BottMatrix& a) {
    const LevelStructure ls = level_structure(a);
    const auto cols = a.columns();
    std::vector<std::vector<int>> profile(ls.levels.size());
    for (std::size_t k = 0; k < ls.levels.size(); ++k) {
        std::map<std::uint64_t, int> classes;  // siblings never cross levels
        for (int v : ls.levels[k]) ++classes[cols[static_cast<std::size_t>(v)]];
        for (auto& [col, count] : classes) profile[k].push_back(count);
        std::sort(profile[k].begin(), profile[k].end());
    }
    return profile;
}

bool orientable(const BottMatrix& a) {
    for (int i = 0; i < a.size(); ++i)
        if (std::popcount(a.row(i)) % 2 == 1) return false;
    return true;
}

bool symplectic(const BottMatrix& a) {
    for (const auto& level : sibling_profile(a))
        for (int size : level)
            if (size % 2 == 1) return false;
    return true;
}

int rank(const BottMatrix& a) {
    return rank_gf2(Gf2Matrix(a.size(), a.size(), a.rows()));
}

std::vector<std::uint64_t> betti(const BottMatrix& a, int kernel_budget_log2) {
    const int n = a.size();
    const auto basis = kernel_basis(Gf2Matrix(n, n, a.rows()));
    const int dim = static_cast<int>(basis.size());
    if (dim > kernel_budget_log2)
        throw_budget("KernelBudgetExceeded",
                     "kernel dimension " + std::to_string(dim) + " exceeds enumeration budget");
    std::vector<std::uint64_t> b(static_cast<std::size_t>(n + 1), 0);
    std::uint64_t cur = 0;
    b[0] = 1;  // empty subset
    for (std::uint64_t v = 1; v < (1ull << dim); ++v) {
        cur ^= basis[static_cast<std::size_t>(std::countr_zero(v))];  // Gray code walk
        ++b[static_cast<std::size_t>(std::popcount(cur))];
    }
    return b;
}

int submatrix_rank(const BottMatrix& a, std::uint64_t rows_mask, std::uint64_t cols_mask) {
    std::vector<std::uint64_t> packed;
    for (std::uint64_t rm = rows_mask; rm;) {
        const int i = std::countr_zero(rm);
        rm &= rm - 1;
        const std::uint64_t r = a.row(i);
        std::uint64_t out = 0;
        int b = 0;
        for (std::uint64_t cm = cols_mask; cm; ++b) {
            const int j = std::countr_zero(cm);
            cm &= cm - 1;
            out |= ((r >> j) & 1u) << b;
        }
        packed.push_back(out);
    }
    return rank_of(packed);
}

CutrankProfile cutrank_profile(const BottMatrix& a, int level_budget) {
    const LevelStructure ls = level_structure(a);
    const int t = static_cast<int>(ls.levels.size());
    if (t > level_budget)
        throw_budget("LevelBudgetExceeded",
                     "level count " + std::to_string(t) + " exceeds the cut-rank budget");

    std::vector<std::uint64_t> level_mask(static_cast<std::size_t>(t), 0);
    for (int k = 0; k < t; ++k)
        for (int v : ls.levels[static_cast<std::size_t>(k)])
            level_mask[static_cast<std::size_t>(k)] |= 1ull << v;
    const std::uint64_t all =
        (a.size() == 64) ? ~0ull : ((1ull << a.size()) - 1);

    CutrankProfile p;
    p.by_level_subset.resize(static_cast<std::size_t>(1) << t);
    for (std::uint64_t mask = 0; mask < (1ull << t); ++mask) {
        std::uint64_t x = 0;
        for (std::uint64_t m = mask; m;) {
            const int k = std::countr_zero(m);
            m &= m - 1;
            x |= level_mask[static_cast<std::size_t>(k)];
        }
        p.by_level_subset[static_cast<std::size_t>(mask)] = submatrix_rank(a, x, all & ~x);
    }
    for (int k = 0; k + 1 < t; ++k)
        p.consecutive.push_back(submatrix_rank(a, level_mask[static_cast<std::size_t>(k)],
                                               level_mask[static_cast<std::size_t>(k + 1)]));
    return p;
}

std::size_t InvariantFingerprint::hash() const {
    std::uint64_t h = mix(static_cast<std::uint64_t>(rank));
    for (int t : type) h = mix(h ^ static_cast<std::uint64_t>(t));
    h = mix(h ^ (odd_height ? static_cast<std::uint64_t>(*odd_height) + 2 : 1));
    for (const auto& level : sibling_profile) {
        h = mix(h ^ 0x5107a);
        for (int s : level) h = mix(h ^ static_cast<std::uint64_t>(s));
    }
    for (int r : cutrank.by_level_subset) h = mix(h ^ static_cast<std::uint64_t>(r));
    for (int r : cutrank.consecutive) h = mix(h ^ static_cast<std::uint64_t>(r));
    for (std::uint64_t b : betti) h = mix(h ^ b);
    h = mix(h ^ (static_cast<std::uint64_t>(orientable) << 1 | static_cast<std::uint64_t>(symplectic)));
    return static_cast<std::size_t>(h);
}

InvariantFingerprint fingerprint(const BottMatrix& a, int kernel_budget_log2, int level_budget) {
    InvariantFingerprint f;
    f.type = level_structure(a).type;
    f.rank = rank(a);
    f.odd_height = odd_height(a);
    f.sibling_profile = sibling_profile(a);
    f.cutrank = cutrank_profile(a, level_budget);
    f.betti = betti(a, kernel_budget_log2);
    f.orientable = bott::orientable(a);
    f.symplectic = bott::symplectic(a);
    return f;
}

}  // namespace bott
