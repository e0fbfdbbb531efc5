#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bott/errors.hpp"

namespace bott {

// Bijection on {0..n-1}.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// Binary n x n matrix that is conjugate by a permutation matrix to a strictly
// upper triangular matrix; equivalently the adjacency matrix of an acyclic
// digraph on vertices 0..n-1 with an arc (i,j) iff bit j of row i is set.
// Immutable value type: all operations return new matrices.
class BottMatrix {
public:
    static constexpr int max_size = 64;

    // Validating constructors. Rows are word-packed, bit j of rows[i] = entry (i,j).
    static BottMatrix from_rows(int n, std::vector<std::uint64_t> rows);
    static BottMatrix zero(int n);
    static BottMatrix from_arcs(int n, std::initializer_list<std::pair<int, int>> arcs);
    // Strictly upper triangular matrix from its free bits: bit t of `bits` is
    // the t-th strictly-upper position in row-major order (0,1),(0,2),...
    static BottMatrix from_upper_bits(int n, std::uint64_t bits);
    // "bin" text: n lines (or '/'-separated groups) of n characters '0'/'1'.
    static BottMatrix from_bin(std::string_view text);
    // "hex" text: "n:" followed by the n(n-1)/2 strictly-upper bits, row-major,
    // most significant bit first, left-padded to whole hex digits.
    static BottMatrix from_hex(std::string_view text);

    int size() const { return n_; }
    std::uint64_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint64_t>& rows() const { return rows_; }
    bool arc(int i, int j) const { return (rows_[static_cast<std::size_t>(i)] >> j) & 1u; }
    std::uint64_t column(int j) const;
    std::vector<std::uint64_t> columns() const;
    int arc_count() const;
    bool strictly_upper_triangular() const;

    std::string to_bin() const;
    std::string to_hex() const;  // requires strictly upper triangular

    bool operator==(const BottMatrix&) const = default;
    // Row-major bit-string lexicographic order ('0' < '1', bit (0,0) first).
    bool lex_less(const BottMatrix& other) const;

    std::size_t hash() const;
    struct Hash {
        std::size_t operator()(const BottMatrix& m) const { return m.hash(); }
    };

private:
    struct Unchecked {};
    BottMatrix(int n, std::vector<std::uint64_t> rows, Unchecked)
        : n_(n), rows_(std::move(rows)) {}

    int n_ = 0;
    std::vector<std::uint64_t> rows_;

    friend BottMatrix relabel(const BottMatrix&, const Permutation&);
    friend BottMatrix local_complement(const BottMatrix&, int);
    friend BottMatrix slide(const BottMatrix&, int, int);
};

inline bool operator<(const BottMatrix& a, const BottMatrix& b) { return a.lex_less(b); }

// Acyclicity test on a raw zero-or-not matrix; self-loops count as cycles.
bool is_bott(int n, std::span<const std::uint64_t> rows);

// Parses "bin" text into raw rows without any acyclicity requirement.
std::pair<int, std::vector<std::uint64_t>> parse_bin_raw(std::string_view text);

// Exhaustive check that every principal minor of M+I equals 1 over Z/2.
// Exponential in n; used as a cross-check oracle.
bool principal_minor_criterion(int n, std::span<const std::uint64_t> rows);

// Simultaneous row/column permutation: result[p(i)][p(j)] = a[i][j].
BottMatrix relabel(const BottMatrix& a, const Permutation& p);

// Add column k to every column j with a 1 in row k (entry (k,j)); the digraph
// view toggles all arcs from in-neighbors of k to out-neighbors of k.
// Involutive.
BottMatrix local_complement(const BottMatrix& a, int k);

// With columns l and m equal, add row l to row m. Involutive and keeps the
// columns equal. Throws PreconditionViolated otherwise.
BottMatrix slide(const BottMatrix& a, int l, int m);

bool slide_allowed(const BottMatrix& a, int l, int m);

}  // namespace bott

template <>
struct std::hash<bott::BottMatrix> {
    std::size_t operator()(const bott::BottMatrix& m) const { return m.hash(); }
};
