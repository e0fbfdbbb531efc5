#pragma once

#include <cstdint>
#include <vector>

#include "bott/canon.hpp"
#include "bott/matrix.hpp"

namespace bott {

// Vertices with no in-neighbor (zero columns), ascending.
std::vector<int> roots(const BottMatrix& a);

// Components of the underlying undirected graph, each ascending, ordered by
// smallest member.
std::vector<std::vector<int>> connected_components(const BottMatrix& a);

struct Decomposition {
    int isolated_count = 0;                 // single-vertex factors
    std::vector<BottClassRep> factors;      // multi-vertex factors, sorted by canonical
    BottMatrix witness;                     // equivalent matrix realizing the split
};

// Splits the digraph into indecomposable factors up to Bott equivalence.
//
// Slides on roots are exactly row additions in the block of root rows over
// non-root columns, so that block is brought to reduced row echelon form by
// applying slides; zero rows become isolated vertices. Basis rows are then
// tied to the components of the non-root part they feed, and connected groups
// of that incidence give the factor blocks. Every block is re-checked:
// connectivity and the full-rank root condition always, and for blocks of at
// most five vertices an exhaustive scan of the block's whole class.
Decomposition decompose(const BottMatrix& a,
                        std::uint64_t orbit_budget = default_orbit_budget);

// True iff the whole class consists of connected digraphs: a single vertex,
// or decompose() yields one factor and no isolated vertices.
bool is_indecomposable(const BottMatrix& a,
                       std::uint64_t orbit_budget = default_orbit_budget);

// Maximum number of undirected components over every member of the class,
// found by enumerating the closure. Verification oracle, so n is kept small.
int max_components_oracle(const BottMatrix& a,
                          std::uint64_t orbit_budget = default_orbit_budget);

}  // namespace bott
