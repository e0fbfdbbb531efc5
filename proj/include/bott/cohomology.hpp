#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bott/canon.hpp"
#include "bott/matrix.hpp"

namespace bott {

// Element of the Z/2 cohomology ring in squarefree normal form: a set of
// squarefree monomials of one common degree, each a bitmask over the
// generators x_1..x_n (bit i stands for x_{i+1}).
struct CohomElement {
    int n = 0;
    int degree = 0;
    std::vector<std::uint64_t> monomials;  // sorted, XOR-set semantics

    bool is_zero() const { return monomials.empty(); }
    bool operator==(const CohomElement&) const = default;
};

// Z/2[x_1..x_n] modulo the relations x_j^2 = x_j * alpha_j with alpha_j the
// j-th column read as a linear form. Requires a strictly upper triangular
// matrix so every alpha_j only involves lower generators; callers holding a
// general Bott matrix canonicalize first.
class CohomRing {
public:
    explicit CohomRing(BottMatrix a);

    int generators() const { return a_.size(); }
    const BottMatrix& matrix() const { return a_; }
    std::uint64_t alpha_mask(int j) const { return alpha_[static_cast<std::size_t>(j)]; }

    CohomElement one() const { return CohomElement{a_.size(), 0, {0}}; }
    CohomElement generator(int i) const;
    // sum of the generators selected by mask, as a degree-1 element
    CohomElement linear(std::uint64_t mask) const;
    CohomElement element(int degree, std::vector<std::uint64_t> monomials) const;

private:
    BottMatrix a_;
    std::vector<std::uint64_t> alpha_;
};

// Product in squarefree normal form. Squares reduce by substituting the
// relation for the highest squared generator first, which terminates because
// alpha_j only involves lower indices.
CohomElement multiply(const CohomRing& ring, const CohomElement& u, const CohomElement& v);

struct EigenData {
    std::uint64_t alpha = 0;                      // degree-1 element as a mask
    std::vector<std::uint64_t> eigenspace_basis;  // reduced echelon basis
    int reduced_dim = 0;                          // dim modulo the span of alpha

    bool operator==(const EigenData&) const = default;
};

// The distinct column forms alpha_j with, for each, the space of degree-1
// solutions of x^2 = alpha x: spanned by alpha itself and every x_i whose
// column equals alpha. Sorted by alpha mask, so alpha = 0 comes first.
std::vector<EigenData> eigen_elements(const CohomRing& ring);

// Definition-level oracle: tries all 2^n degree-1 elements. n <= 20.
std::vector<std::uint64_t> eigen_space_bruteforce(const CohomRing& ring, std::uint64_t alpha);

// Graded ring isomorphism over Z/2 holds exactly on Bott equivalence classes,
// so this decides it through the canonical forms.
bool rings_isomorphic(const BottMatrix& a, const BottMatrix& b,
                      std::uint64_t orbit_budget = default_orbit_budget);

// Degree-1 elements print as "x1+x3" (1-indexed), the zero element as "0".
std::string linear_to_string(std::uint64_t mask);
std::uint64_t linear_from_string(std::string_view text, int n);

}  // namespace bott
