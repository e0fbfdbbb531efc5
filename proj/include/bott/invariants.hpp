#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bott/matrix.hpp"

namespace bott {

// Level sets of the acyclic digraph: L_k holds the vertices whose longest
// incoming directed path has exactly k arcs. Arcs always go to a strictly
// higher level.
struct LevelStructure {
    std::vector<std::vector<int>> levels;  // nonempty levels, vertices ascending
    std::vector<int> type;                 // (|L_0|,...,|L_{n-1}|), zero padded
    std::vector<int> level_of;             // per vertex
};

LevelStructure level_structure(const BottMatrix& a);

// Max level containing a vertex of odd out-degree; nullopt means none exist
// (infinite odd height, equivalently an orientable manifold).
std::optional<int> odd_height(const BottMatrix& a);

// Sibling classes are maximal sets of vertices with identical columns
// (identical in-neighbor sets); they refine the level partition. Returns the
// sorted multiset of class sizes for each nonempty level.
std::vector<std::vector<int>> sibling_profile(const BottMatrix& a);

// Every row has even weight (every out-degree even).
bool orientable(const BottMatrix& a);

// Every sibling class has even cardinality.
bool symplectic(const BottMatrix& a);

inline constexpr int default_kernel_budget_log2 = 30;

// Rational Betti numbers (b_0..b_n): the weight distribution of the GF(2)
// kernel of the column map x -> Ax, enumerated from a kernel basis.
std::vector<std::uint64_t> betti(const BottMatrix& a,
                                 int kernel_budget_log2 = default_kernel_budget_log2);

inline constexpr int default_level_budget = 20;

struct CutrankProfile {
    // rank of the submatrix rows(X) x columns(V\X) for X the union of the
    // levels selected by the index bitmask (over nonempty levels)
    std::vector<int> by_level_subset;
    // rank of the block between consecutive nonempty levels
    std::vector<int> consecutive;

    bool operator==(const CutrankProfile&) const = default;
};

CutrankProfile cutrank_profile(const BottMatrix& a, int level_budget = default_level_budget);

// GF(2) rank of the submatrix with the given row/column vertex masks.
int submatrix_rank(const BottMatrix& a, std::uint64_t rows_mask, std::uint64_t cols_mask);

struct InvariantFingerprint {
    std::vector<int> type;
    int rank = 0;
    std::optional<int> odd_height;  // nullopt = infinity
    std::vector<std::vector<int>> sibling_profile;
    CutrankProfile cutrank;
    std::vector<std::uint64_t> betti;
    bool orientable = false;
    bool symplectic = false;

    bool operator==(const InvariantFingerprint&) const = default;
    std::size_t hash() const;
    struct Hash {
        std::size_t operator()(const InvariantFingerprint& f) const { return f.hash(); }
    };
};

InvariantFingerprint fingerprint(const BottMatrix& a,
                                 int kernel_budget_log2 = default_kernel_budget_log2,
                                 int level_budget = default_level_budget);

int rank(const BottMatrix& a);

}  // namespace bott
