#pragma once

#include <cstdint>
#include <vector>

#include "bott/canon.hpp"
#include "bott/matrix.hpp"

namespace bott {

struct ClassRecord {
    BottMatrix canonical;
    std::uint64_t member_count = 0;
    bool orientable = false;
    bool symplectic = false;
};

struct ClassificationSummary {
    int n = 0;
    std::vector<ClassRecord> records;  // sorted by canonical encoding

    std::size_t class_count() const { return records.size(); }
    std::size_t orientable_count() const;
    std::size_t symplectic_count() const;
    std::uint64_t member_total() const;
};

struct ClassifyOptions {
    int workers = 1;
    bool long_run = false;  // gates n >= 7
    std::uint64_t orbit_budget = default_orbit_budget;
    std::size_t memo_cap = std::size_t{1} << 21;  // iso form -> class canonical entries
};

// Exhaustive classification of all 2^{n(n-1)/2} strictly upper triangular
// matrices of size n into Bott equivalence classes. The bit patterns are
// split into contiguous ranges per worker; workers keep local maps that are
// merged at the end, so results do not depend on the worker count.
ClassificationSummary classify_all(int n, const ClassifyOptions& options = {});

// Same classification over an externally supplied list (for example the
// decoded lines of a digraph6 file of non-isomorphic acyclic digraphs);
// member counts then count list entries.
ClassificationSummary classify_stream(const std::vector<BottMatrix>& source,
                                      const ClassifyOptions& options = {});

// All strictly upper triangular matrices with every superdiagonal entry 1.
std::vector<BottMatrix> delta_family(int n);

}  // namespace bott
