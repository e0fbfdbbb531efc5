#pragma once

#include <cstdint>
#include <vector>

#include "bott/matrix.hpp"

namespace bott {

inline constexpr std::uint64_t default_orbit_budget = 10'000'000;

struct IsoCanonForm {
    BottMatrix matrix;
    Permutation witness;  // relabel(input, witness) == matrix
};

// Deterministic canonical labeling under digraph isomorphism.
//
// Candidate permutations place each level set directly after the lower
// levels (so the result is always strictly upper triangular) and are refined
// within a level by the vertex signature (in-degree, out-degree, sibling
// class size): positions are allotted to signature cells in sorted order and
// vertices may only permute inside their cell. Among the admissible
// permutations the lexicographically smallest row-major encoding wins.
// Two matrices get the same canonical form iff their digraphs are isomorphic.
IsoCanonForm iso_canon(const BottMatrix& a);

struct BottClassRep {
    BottMatrix canonical;
    std::uint64_t orbit_size;  // distinct iso-canonical forms in the class
};

// All iso-canonical forms reachable from a by local complementations and
// slides, computed by breadth-first closure; sorted ascending. Relabelings
// are folded into the re-canonicalization step, which is sound because both
// operations commute with relabeling. Throws OrbitBudgetExceeded when the
// closure grows past the budget.
std::vector<BottMatrix> bott_orbit(const BottMatrix& a,
                                   std::uint64_t orbit_budget = default_orbit_budget);

// Minimum encoding over the closure plus its size.
BottClassRep bott_canon(const BottMatrix& a, std::uint64_t orbit_budget = default_orbit_budget);

bool bott_equivalent(const BottMatrix& a, const BottMatrix& b,
                     std::uint64_t orbit_budget = default_orbit_budget);

}  // namespace bott
