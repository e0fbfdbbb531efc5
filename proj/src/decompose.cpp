#include "bott/decompose.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "bott/gf2.hpp"
#include "bott/invariants.hpp"

namespace bott {

namespace {

struct DisjointSet {
    std::vector<int> parent;

    explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void merge(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

[[noreturn]] void invalid(const std::string& what) {
    throw DomainError("DecompositionInvalid", "decomposition self-check failed: " + what);
}

BottMatrix submatrix(const BottMatrix& a, const std::vector<int>& vertices) {
    const int k = static_cast<int>(vertices.size());
    std::vector<int> new_index(static_cast<std::size_t>(a.size()), -1);
    for (int s = 0; s < k; ++s) new_index[static_cast<std::size_t>(vertices[static_cast<std::size_t>(s)])] = s;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(k), 0);
    for (int s = 0; s < k; ++s) {
        std::uint64_t r = a.row(vertices[static_cast<std::size_t>(s)]);
        while (r) {
            const int j = std::countr_zero(r);
            r &= r - 1;
            if (new_index[static_cast<std::size_t>(j)] >= 0)
                rows[static_cast<std::size_t>(s)] |= 1ull << new_index[static_cast<std::size_t>(j)];
        }
    }
    return BottMatrix::from_rows(k, std::move(rows));
}

}  // namespace

std::vector<int> roots(const BottMatrix& a) {
    std::uint64_t covered = 0;
    for (int i = 0; i < a.size(); ++i) covered |= a.row(i);
    std::vector<int> out;
    for (int v = 0; v < a.size(); ++v)
        if (!((covered >> v) & 1u)) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> connected_components(const BottMatrix& a) {
    DisjointSet uf(a.size());
    for (int i = 0; i < a.size(); ++i) {
        std::uint64_t r = a.row(i);
        while (r) {
            const int j = std::countr_zero(r);
            r &= r - 1;
            uf.merge(i, j);
        }
    }
    std::vector<std::vector<int>> by_root(static_cast<std::size_t>(a.size()));
    for (int v = 0; v < a.size(); ++v) by_root[static_cast<std::size_t>(uf.find(v))].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& group : by_root)
        if (!group.empty()) out.push_back(std::move(group));
    return out;
}

Decomposition decompose(const BottMatrix& a, std::uint64_t orbit_budget) {
    const int n = a.size();
    const std::vector<int> root_list = roots(a);

    // bring the block of root rows over non-root columns to reduced row
    // echelon form; each row addition is a slide on two roots
    std::vector<std::uint64_t> work = a.rows();
    std::vector<bool> is_pivot_row(static_cast<std::size_t>(n), false);
    std::vector<bool> is_root(static_cast<std::size_t>(n), false);
    for (int r : root_list) is_root[static_cast<std::size_t>(r)] = true;
    for (int c = 0; c < n; ++c) {
        if (is_root[static_cast<std::size_t>(c)]) continue;
        int pivot = -1;
        for (int r : root_list) {
            if (!is_pivot_row[static_cast<std::size_t>(r)] && ((work[static_cast<std::size_t>(r)] >> c) & 1u)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        is_pivot_row[static_cast<std::size_t>(pivot)] = true;
        for (int r : root_list)
            if (r != pivot && ((work[static_cast<std::size_t>(r)] >> c) & 1u))
                work[static_cast<std::size_t>(r)] ^= work[static_cast<std::size_t>(pivot)];
    }

    std::vector<int> isolated, pivot_roots;
    for (int r : root_list)
        (is_pivot_row[static_cast<std::size_t>(r)] ? pivot_roots : isolated).push_back(r);
    // left-over root rows must be zero once the basis is extracted
    for (int r : isolated)
        if (work[static_cast<std::size_t>(r)] != 0) invalid("non-pivot root row did not vanish");

    // components of the non-root part; root slides never touch those rows
    DisjointSet comp(n);
    for (int i = 0; i < n; ++i) {
        if (is_root[static_cast<std::size_t>(i)]) continue;
        std::uint64_t r = a.row(i);
        while (r) {
            const int j = std::countr_zero(r);
            r &= r - 1;
            comp.merge(i, j);  // j is never a root: root columns are zero
        }
    }

    // glue pivot roots to the components their basis row feeds
    DisjointSet block(n);
    for (int r : pivot_roots) {
        std::uint64_t row = work[static_cast<std::size_t>(r)];
        while (row) {
            const int c = std::countr_zero(row);
            row &= row - 1;
            block.merge(r, comp.find(c));
        }
    }

    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (is_root[static_cast<std::size_t>(v)] && !is_pivot_row[static_cast<std::size_t>(v)]) continue;
        int key = is_root[static_cast<std::size_t>(v)] ? block.find(v) : block.find(comp.find(v));
        blocks[static_cast<std::size_t>(key)].push_back(v);
    }

    const BottMatrix slid = BottMatrix::from_rows(n, std::move(work));

    struct Factor {
        std::vector<int> vertices;
        BottMatrix sub;
        IsoCanonForm iso;
        BottClassRep rep;
    };
    std::vector<Factor> factors;
    for (auto& vertices : blocks) {
        if (vertices.empty()) continue;
        BottMatrix sub = submatrix(slid, vertices);

        if (connected_components(sub).size() != 1) invalid("factor block is not connected");
        const auto sub_roots = roots(sub);
        std::uint64_t root_mask = 0, rest_mask = 0;
        for (int r : sub_roots) root_mask |= 1ull << r;
        rest_mask = ((sub.size() == 64) ? ~0ull : ((1ull << sub.size()) - 1)) & ~root_mask;
        if (submatrix_rank(sub, root_mask, rest_mask) != static_cast<int>(sub_roots.size()))
            invalid("factor block fails the full-rank root condition");
        if (sub.size() <= 5 && max_components_oracle(sub, orbit_budget) != 1)
            invalid("factor block splits further somewhere in its class");

        IsoCanonForm iso = iso_canon(sub);
        BottClassRep rep = bott_canon(sub, orbit_budget);
        factors.push_back(Factor{std::move(vertices), std::move(sub), std::move(iso), std::move(rep)});
    }

    std::sort(factors.begin(), factors.end(), [](const Factor& x, const Factor& y) {
        if (x.rep.canonical != y.rep.canonical) return x.rep.canonical < y.rep.canonical;
        if (x.iso.matrix != y.iso.matrix) return x.iso.matrix < y.iso.matrix;
        return x.vertices.front() < y.vertices.front();
    });

    // witness labeling: isolated vertices first, then each factor block in
    // sorted order carrying its iso-canonical internal labeling
    std::vector<int> images(static_cast<std::size_t>(n), -1);
    int base = 0;
    std::sort(isolated.begin(), isolated.end());
    for (int v : isolated) images[static_cast<std::size_t>(v)] = base++;
    for (const auto& f : factors) {
        for (std::size_t s = 0; s < f.vertices.size(); ++s)
            images[static_cast<std::size_t>(f.vertices[s])] = base + f.iso.witness(static_cast<int>(s));
        base += static_cast<int>(f.vertices.size());
    }

    Decomposition d{static_cast<int>(isolated.size()), {}, relabel(slid, Permutation(images))};
    for (auto& f : factors) d.factors.push_back(std::move(f.rep));
    return d;
}

bool is_indecomposable(const BottMatrix& a, std::uint64_t orbit_budget) {
    if (a.size() == 1) return true;
    const Decomposition d = decompose(a, orbit_budget);
    return d.isolated_count == 0 && d.factors.size() == 1;
}

int max_components_oracle(const BottMatrix& a, std::uint64_t orbit_budget) {
    if (a.size() > 5)
        throw_domain("PreconditionViolated", "the component oracle enumerates whole classes; n <= 5 only");
    int best = 0;
    for (const auto& member : bott_orbit(a, orbit_budget))
        best = std::max(best, static_cast<int>(connected_components(member).size()));
    return best;
}

}  // namespace bott
