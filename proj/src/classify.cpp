#include "bott/classify.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "bott/invariants.hpp"

namespace bott {

namespace {

// Per-worker state. The memo maps every iso-canonical form seen so far to its
// class canonical, so the closure search runs once per iso class instead of
// once per member.
struct Accumulator {
    std::uint64_t orbit_budget;
    std::size_t memo_cap;
    std::unordered_map<BottMatrix, std::uint64_t, BottMatrix::Hash> counts;
    std::unordered_map<BottMatrix, BottMatrix, BottMatrix::Hash> memo;

    void add(const BottMatrix& a) {
        const BottMatrix form = iso_canon(a).matrix;
        if (auto it = memo.find(form); it != memo.end()) {
            ++counts[it->second];
            return;
        }
        const auto orbit = bott_orbit(form, orbit_budget);
        const BottMatrix& canonical = orbit.front();
        if (memo.size() + orbit.size() <= memo_cap)
            for (const auto& member : orbit) memo.emplace(member, canonical);
        ++counts[canonical];
    }
};

ClassificationSummary summarize(int n,
                                std::unordered_map<BottMatrix, std::uint64_t, BottMatrix::Hash> counts) {
    ClassificationSummary summary;
    summary.n = n;
    summary.records.reserve(counts.size());
    for (auto& [canonical, count] : counts) {
        ClassRecord rec{canonical, count, orientable(canonical), symplectic(canonical)};
        summary.records.push_back(std::move(rec));
    }
    std::sort(summary.records.begin(), summary.records.end(),
              [](const ClassRecord& a, const ClassRecord& b) { return a.canonical < b.canonical; });
    return summary;
}

}  // namespace

std::size_t ClassificationSummary::orientable_count() const {
    std::size_t c = 0;
    for (const auto& r : records) c += r.orientable;
    return c;
}

std::size_t ClassificationSummary::symplectic_count() const {
    std::size_t c = 0;
    for (const auto& r : records) c += r.symplectic;
    return c;
}

std::uint64_t ClassificationSummary::member_total() const {
    std::uint64_t c = 0;
    for (const auto& r : records) c += r.member_count;
    return c;
}

ClassificationSummary classify_all(int n, const ClassifyOptions& options) {
    if (n < 1 || n > 8)
        throw_domain("PreconditionViolated", "full classification supports 1 <= n <= 8");
    if (n >= 7 && !options.long_run)
        throw_domain("PreconditionViolated",
                     "n >= 7 enumerates millions of matrices; pass the long-run flag to confirm");
    if (options.workers < 1)
        throw_domain("PreconditionViolated", "worker count must be at least 1");

    const int m = n * (n - 1) / 2;
    const std::uint64_t total = 1ull << m;
    const int workers = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(options.workers), total));

    std::vector<Accumulator> acc(static_cast<std::size_t>(workers));
    for (auto& a : acc) {
        a.orbit_budget = options.orbit_budget;
        a.memo_cap = options.memo_cap;
    }

    auto scan = [&](int w) {
        const std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
        const std::uint64_t len = total / workers + (static_cast<std::uint64_t>(w) < total % workers);
        for (std::uint64_t v = lo; v < lo + len; ++v)
            acc[static_cast<std::size_t>(w)].add(BottMatrix::from_upper_bits(n, v));
    };

    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
        for (auto& t : pool) t.join();
    }

    std::unordered_map<BottMatrix, std::uint64_t, BottMatrix::Hash> merged;
    for (auto& a : acc)
        for (auto& [canonical, count] : a.counts) merged[canonical] += count;
    return summarize(n, std::move(merged));
}

ClassificationSummary classify_stream(const std::vector<BottMatrix>& source,
                                      const ClassifyOptions& options) {
    if (source.empty()) throw_domain("EmptyInput", "matrix stream is empty");
    const int n = source.front().size();
    for (const auto& a : source)
        if (a.size() != n)
            throw_domain("SizeMismatch", "all matrices in a stream must have the same size");

    Accumulator acc{options.orbit_budget, options.memo_cap, {}, {}};
    for (const auto& a : source) acc.add(a);
    return summarize(n, std::move(acc.counts));
}

std::vector<BottMatrix> delta_family(int n) {
    if (n < 2) throw_domain("PreconditionViolated", "the superdiagonal family needs n >= 2");
    const int free_bits = (n - 1) * (n - 2) / 2;
    if (free_bits > 24)
        throw_budget("EnumerationBudgetExceeded",
                     "family enumeration limited to (n-1)(n-2)/2 <= 24 free bits");

    // free positions: strictly upper, skipping the superdiagonal
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) free_pos.emplace_back(i, j);

    std::vector<BottMatrix> family;
    family.reserve(std::size_t{1} << free_bits);
    for (std::uint64_t v = 0; v < (1ull << free_bits); ++v) {
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
        for (int i = 0; i + 1 < n; ++i) rows[static_cast<std::size_t>(i)] |= 1ull << (i + 1);
        for (int t = 0; t < free_bits; ++t)
            if ((v >> t) & 1u)
                rows[static_cast<std::size_t>(free_pos[static_cast<std::size_t>(t)].first)] |=
                    1ull << free_pos[static_cast<std::size_t>(t)].second;
        family.push_back(BottMatrix::from_rows(n, std::move(rows)));
    }
    return family;
}

}  // namespace bott
