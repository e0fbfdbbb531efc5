#include "bott/canon.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "bott/invariants.hpp"

namespace bott {

namespace {

struct Cell {
    int first_position = 0;
    std::vector<int> twin_ids;                       // sorted; the arrangement being permuted
    std::map<int, std::vector<int>> twin_vertices;   // twin id -> member vertices, ascending
};

// Enumerates the admissible position assignments cell by cell and keeps the
// lexicographically smallest relabeled matrix. Twin vertices (equal rows and
// equal columns) give identical candidates under swaps, so arrangements are
// walked as multiset permutations of twin ids, one per distinct candidate.
class CanonSearch {
public:
    CanonSearch(const BottMatrix& a, std::vector<Cell> cells)
        : input_(a), n_(a.size()), cells_(std::move(cells)),
          position_(static_cast<std::size_t>(n_), 0),
          best_rows_(static_cast<std::size_t>(n_), ~0ull),
          best_position_(static_cast<std::size_t>(n_), 0),
          scratch_(static_cast<std::size_t>(n_), 0) {}

    IsoCanonForm run() {
        descend(0);
        Permutation witness(best_position_);
        return IsoCanonForm{relabel(input_, witness), std::move(witness)};
    }

private:
    void descend(std::size_t cell_index) {
        if (cell_index == cells_.size()) {
            evaluate();
            return;
        }
        Cell& cell = cells_[cell_index];
        // next_permutation visits every distinct arrangement of the sorted
        // id sequence and leaves it sorted again for the next outer round
        do {
            assign(cell);
            descend(cell_index + 1);
        } while (std::next_permutation(cell.twin_ids.begin(), cell.twin_ids.end()));
    }

    void assign(const Cell& cell) {
        handed_out_.clear();
        for (std::size_t k = 0; k < cell.twin_ids.size(); ++k) {
            const int id = cell.twin_ids[k];
            const std::size_t offset = handed_out_[id]++;
            const int vertex = cell.twin_vertices.at(id)[offset];
            position_[static_cast<std::size_t>(vertex)] = cell.first_position + static_cast<int>(k);
        }
    }

    void evaluate() {
        for (auto& r : scratch_) r = 0;
        for (int v = 0; v < n_; ++v) {
            std::uint64_t r = input_.row(v), out = 0;
            while (r) {
                const int w = std::countr_zero(r);
                r &= r - 1;
                out |= 1ull << position_[static_cast<std::size_t>(w)];
            }
            scratch_[static_cast<std::size_t>(position_[static_cast<std::size_t>(v)])] = out;
        }
        for (int i = 0; i < n_; ++i) {
            const std::uint64_t a = scratch_[static_cast<std::size_t>(i)];
            const std::uint64_t b = best_rows_[static_cast<std::size_t>(i)];
            const std::uint64_t d = a ^ b;
            if (!d) continue;
            if ((a >> std::countr_zero(d)) & 1u) return;  // candidate is larger
            break;
        }
        best_rows_ = scratch_;
        best_position_ = position_;
    }

    const BottMatrix& input_;
    int n_;
    std::vector<Cell> cells_;
    std::vector<int> position_;
    std::vector<std::uint64_t> best_rows_;
    std::vector<int> best_position_;
    std::vector<std::uint64_t> scratch_;
    std::unordered_map<int, std::size_t> handed_out_;
};

}  // namespace

IsoCanonForm iso_canon(const BottMatrix& a) {
    const int n = a.size();
    const LevelStructure ls = level_structure(a);
    const auto cols = a.columns();

    std::map<std::uint64_t, int> sibling_size;
    for (int v = 0; v < n; ++v) ++sibling_size[cols[static_cast<std::size_t>(v)]];

    // twins: identical rows and identical columns make swaps automorphisms
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> twin_key;
    std::vector<int> twin_of(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        auto key = std::make_pair(a.row(v), cols[static_cast<std::size_t>(v)]);
        auto [it, fresh] = twin_key.try_emplace(key, static_cast<int>(twin_key.size()));
        twin_of[static_cast<std::size_t>(v)] = it->second;
    }

    // (level, in-degree, out-degree, sibling size) -> cell members; position
    // blocks are handed out in sorted key order, so levels come first
    std::map<std::tuple<int, int, int, int>, std::vector<int>> grouped;
    for (int v = 0; v < n; ++v) {
        grouped[{ls.level_of[static_cast<std::size_t>(v)],
                 std::popcount(cols[static_cast<std::size_t>(v)]),
                 std::popcount(a.row(v)),
                 sibling_size[cols[static_cast<std::size_t>(v)]]}]
            .push_back(v);
    }

    std::vector<Cell> cells;
    int next_position = 0;
    for (auto& [key, vertices] : grouped) {
        Cell cell;
        cell.first_position = next_position;
        next_position += static_cast<int>(vertices.size());
        for (int v : vertices) {
            cell.twin_ids.push_back(twin_of[static_cast<std::size_t>(v)]);
            cell.twin_vertices[twin_of[static_cast<std::size_t>(v)]].push_back(v);
        }
        std::sort(cell.twin_ids.begin(), cell.twin_ids.end());
        cells.push_back(std::move(cell));
    }

    return CanonSearch(a, std::move(cells)).run();
}

std::vector<BottMatrix> bott_orbit(const BottMatrix& a, std::uint64_t orbit_budget) {
    const int n = a.size();
    if (n > 16)
        throw_domain("PreconditionViolated", "class closures are limited to n <= 16");
    const BottMatrix start = iso_canon(a).matrix;
    std::unordered_set<BottMatrix, BottMatrix::Hash> visited{start};
    std::deque<BottMatrix> frontier{start};

    auto push = [&](const BottMatrix& raw) {
        BottMatrix form = iso_canon(raw).matrix;
        if (visited.insert(form).second) {
            if (visited.size() > orbit_budget)
                throw_budget("OrbitBudgetExceeded",
                             "class closure exceeds the orbit budget of " +
                                 std::to_string(orbit_budget));
            frontier.push_back(std::move(form));
        }
    };

    while (!frontier.empty()) {
        const BottMatrix m = std::move(frontier.front());
        frontier.pop_front();
        for (int k = 0; k < n; ++k) push(local_complement(m, k));
        // slides run over ordered pairs inside each sibling class, roots included
        std::map<std::uint64_t, std::vector<int>> by_column;
        const auto cols = m.columns();
        for (int v = 0; v < n; ++v) by_column[cols[static_cast<std::size_t>(v)]].push_back(v);
        for (const auto& [col, group] : by_column) {
            for (int l : group)
                for (int mm : group)
                    if (l != mm) push(slide(m, l, mm));
        }
    }

    std::vector<BottMatrix> orbit(visited.begin(), visited.end());
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

BottClassRep bott_canon(const BottMatrix& a, std::uint64_t orbit_budget) {
    auto orbit = bott_orbit(a, orbit_budget);
    return BottClassRep{orbit.front(), orbit.size()};
}

bool bott_equivalent(const BottMatrix& a, const BottMatrix& b, std::uint64_t orbit_budget) {
    if (a.size() != b.size())
        throw_domain("SizeMismatch", "matrices must have the same size");
    return bott_canon(a, orbit_budget).canonical == bott_canon(b, orbit_budget).canonical;
}

}  // namespace bott
