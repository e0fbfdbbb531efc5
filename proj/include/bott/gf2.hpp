#pragma once

#include <cstdint>
#include <vector>

#include "bott/errors.hpp"

namespace bott {

// Dense binary matrix with up to 64 columns, one machine word per row.
// Bit j of rows[i] is the entry in row i, column j.
struct Gf2Matrix {
    int row_count = 0;
    int col_count = 0;
    std::vector<std::uint64_t> rows;

    Gf2Matrix() = default;
    Gf2Matrix(int r, int c, std::vector<std::uint64_t> data);

    bool get(int i, int j) const { return (rows[static_cast<std::size_t>(i)] >> j) & 1u; }
    bool operator==(const Gf2Matrix&) const = default;
};

int rank_gf2(const Gf2Matrix& m);

struct RrefResult {
    Gf2Matrix rref;        // reduced row echelon form, zero rows last
    std::vector<int> pivots;  // pivot column per nonzero row, ascending
};

// Gauss-Jordan elimination; pivot search picks the lowest column index first.
RrefResult rref_gf2(const Gf2Matrix& m);

// Basis of { x : m x = 0 } as column-index bitmasks, one per free column.
std::vector<std::uint64_t> kernel_basis(const Gf2Matrix& m);

// In-place reduction of a set of vectors to the canonical reduced echelon
// basis of their span (zero vectors dropped). Two spans are equal iff their
// reduced bases are equal element-for-element.
std::vector<std::uint64_t> echelon_basis(std::vector<std::uint64_t> vecs);

// rank of an arbitrary list of word-packed vectors
int rank_of(const std::vector<std::uint64_t>& vecs);

}  // namespace bott
