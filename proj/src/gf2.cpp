#include "bott/gf2.hpp"

#include <algorithm>
#include <bit>

namespace bott {

Gf2Matrix::Gf2Matrix(int r, int c, std::vector<std::uint64_t> data)
    : row_count(r), col_count(c), rows(std::move(data)) {
    if (r < 0 || c < 0 || c > 64)
        throw_domain("DimensionMismatch", "Gf2Matrix: need 0 <= cols <= 64");
    if (rows.size() != static_cast<std::size_t>(r))
        throw_domain("DimensionMismatch", "Gf2Matrix: row data does not match declared row count");
    const std::uint64_t mask = (c == 64) ? ~0ull : ((1ull << c) - 1);
    for (auto w : rows)
        if (w & ~mask)
            throw_domain("DimensionMismatch", "Gf2Matrix: bits set beyond declared column count");
}

int rank_gf2(const Gf2Matrix& m) {
    std::vector<std::uint64_t> work = m.rows;
    int rank = 0;
    for (int col = 0; col < m.col_count; ++col) {
        const std::uint64_t bit = 1ull << col;
        int pivot = -1;
        for (int i = rank; i < m.row_count; ++i) {
            if (work[static_cast<std::size_t>(i)] & bit) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        std::swap(work[static_cast<std::size_t>(pivot)], work[static_cast<std::size_t>(rank)]);
        for (int i = 0; i < m.row_count; ++i) {
            if (i != rank && (work[static_cast<std::size_t>(i)] & bit))
                work[static_cast<std::size_t>(i)] ^= work[static_cast<std::size_t>(rank)];
        }
        ++rank;
    }
    return rank;
}

RrefResult rref_gf2(const Gf2Matrix& m) {
    std::vector<std::uint64_t> work = m.rows;
    std::vector<int> pivots;
    int next_row = 0;
    for (int col = 0; col < m.col_count && next_row < m.row_count; ++col) {
        const std::uint64_t bit = 1ull << col;
        int pivot = -1;
        for (int i = next_row; i < m.row_count; ++i) {
            if (work[static_cast<std::size_t>(i)] & bit) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        std::swap(work[static_cast<std::size_t>(pivot)], work[static_cast<std::size_t>(next_row)]);
        for (int i = 0; i < m.row_count; ++i) {
            if (i != next_row && (work[static_cast<std::size_t>(i)] & bit))
                work[static_cast<std::size_t>(i)] ^= work[static_cast<std::size_t>(next_row)];
        }
        pivots.push_back(col);
        ++next_row;
    }
    return RrefResult{Gf2Matrix(m.row_count, m.col_count, std::move(work)), std::move(pivots)};
}

std::vector<std::uint64_t> kernel_basis(const Gf2Matrix& m) {
    RrefResult r = rref_gf2(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.col_count), false);
    for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<std::uint64_t> basis;
    for (int free = 0; free < m.col_count; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::uint64_t v = 1ull << free;
        // each pivot row p with a 1 in the free column forces x_{pivot(p)} = x_free
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            if ((r.rref.rows[i] >> free) & 1u)
                v |= 1ull << r.pivots[i];
        }
        basis.push_back(v);
    }
    return basis;
}

std::vector<std::uint64_t> echelon_basis(std::vector<std::uint64_t> vecs) {
    std::vector<std::uint64_t> basis;  // basis[k] has leading (lowest) bit lead[k]
    std::vector<int> lead;
    for (std::uint64_t v : vecs) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if ((v >> lead[k]) & 1u) v ^= basis[k];
        }
        if (v == 0) continue;
        int l = std::countr_zero(v);
        // back-substitute into earlier rows
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if ((basis[k] >> l) & 1u) basis[k] ^= v;
        }
        basis.push_back(v);
        lead.push_back(l);
    }
    // order rows by leading bit for a canonical result
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return lead[a] < lead[b]; });
    std::vector<std::uint64_t> out;
    out.reserve(basis.size());
    for (std::size_t i : idx) out.push_back(basis[i]);
    return out;
}

int rank_of(const std::vector<std::uint64_t>& vecs) {
    std::vector<std::uint64_t> basis;
    std::vector<int> lead;
    int rank = 0;
    for (std::uint64_t v : vecs) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if ((v >> lead[k]) & 1u) v ^= basis[k];
        }
        if (v == 0) continue;
        basis.push_back(v);
        lead.push_back(std::countr_zero(v));
        ++rank;
    }
    return rank;
}

}  // namespace bott
