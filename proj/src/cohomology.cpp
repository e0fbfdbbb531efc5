#include "bott/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "bott/gf2.hpp"

namespace bott {

CohomRing::CohomRing(BottMatrix a) : a_(std::move(a)) {
    if (!a_.strictly_upper_triangular())
        throw_domain("NotUpperTriangular",
                     "cohomology rings are built over strictly upper triangular matrices");
    alpha_ = a_.columns();
}

CohomElement CohomRing::generator(int i) const {
    if (i < 0 || i >= a_.size()) throw_domain("PreconditionViolated", "generator index out of range");
    return CohomElement{a_.size(), 1, {1ull << i}};
}

CohomElement CohomRing::linear(std::uint64_t mask) const {
    const std::uint64_t all = (a_.size() == 64) ? ~0ull : ((1ull << a_.size()) - 1);
    if (mask & ~all) throw_domain("DimensionMismatch", "linear form uses generators beyond n");
    CohomElement e{a_.size(), 1, {}};
    for (std::uint64_t m = mask; m;) {
        const int i = std::countr_zero(m);
        m &= m - 1;
        e.monomials.push_back(1ull << i);
    }
    return e;
}

CohomElement CohomRing::element(int degree, std::vector<std::uint64_t> monomials) const {
    for (auto m : monomials)
        if (std::popcount(m) != degree)
            throw_domain("PreconditionViolated", "monomial degree does not match element degree");
    std::sort(monomials.begin(), monomials.end());
    for (std::size_t i = 1; i < monomials.size(); ++i)
        if (monomials[i] == monomials[i - 1])
            throw_domain("PreconditionViolated", "repeated monomial in element");
    return CohomElement{a_.size(), degree, std::move(monomials)};
}

namespace {

// Reduces x_S * x_T to squarefree normal form and XORs the resulting
// monomials into `parity`. Exponents stay tiny, so a plain vector worklist
// of exponent vectors is enough.
void reduce_pair(const CohomRing& ring, std::uint64_t s, std::uint64_t t,
                 std::unordered_set<std::uint64_t>& parity) {
    const int n = ring.generators();
    std::vector<std::vector<std::uint8_t>> work;
    {
        std::vector<std::uint8_t> e(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j)
            e[static_cast<std::size_t>(j)] =
                static_cast<std::uint8_t>(((s >> j) & 1u) + ((t >> j) & 1u));
        work.push_back(std::move(e));
    }
    while (!work.empty()) {
        std::vector<std::uint8_t> e = std::move(work.back());
        work.pop_back();
        int squared = -1;
        for (int j = n - 1; j >= 0; --j) {
            if (e[static_cast<std::size_t>(j)] >= 2) {
                squared = j;
                break;
            }
        }
        if (squared < 0) {
            std::uint64_t mono = 0;
            for (int j = 0; j < n; ++j)
                if (e[static_cast<std::size_t>(j)]) mono |= 1ull << j;
            if (!parity.erase(mono)) parity.insert(mono);
            continue;
        }
        std::uint64_t alpha = ring.alpha_mask(squared);
        if (alpha == 0) continue;  // x_j^2 = 0 kills the term
        --e[static_cast<std::size_t>(squared)];
        while (alpha) {
            const int i = std::countr_zero(alpha);
            alpha &= alpha - 1;
            std::vector<std::uint8_t> next = e;
            ++next[static_cast<std::size_t>(i)];
            work.push_back(std::move(next));
        }
    }
}

}  // namespace

CohomElement multiply(const CohomRing& ring, const CohomElement& u, const CohomElement& v) {
    if (u.n != ring.generators() || v.n != ring.generators())
        throw_domain("SizeMismatch", "elements belong to a ring with a different generator count");
    std::unordered_set<std::uint64_t> parity;
    for (auto s : u.monomials)
        for (auto t : v.monomials) reduce_pair(ring, s, t, parity);
    CohomElement out{ring.generators(), u.degree + v.degree,
                     std::vector<std::uint64_t>(parity.begin(), parity.end())};
    std::sort(out.monomials.begin(), out.monomials.end());
    return out;
}

std::vector<EigenData> eigen_elements(const CohomRing& ring) {
    const int n = ring.generators();
    std::vector<std::uint64_t> distinct;
    for (int j = 0; j < n; ++j) distinct.push_back(ring.alpha_mask(j));
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<EigenData> out;
    for (std::uint64_t alpha : distinct) {
        std::vector<std::uint64_t> gens;
        if (alpha != 0) gens.push_back(alpha);
        for (int i = 0; i < n; ++i)
            if (ring.alpha_mask(i) == alpha) gens.push_back(1ull << i);
        auto basis = echelon_basis(std::move(gens));
        const int dim = static_cast<int>(basis.size());
        out.push_back(EigenData{alpha, std::move(basis), dim - (alpha != 0 ? 1 : 0)});
    }
    return out;
}

std::vector<std::uint64_t> eigen_space_bruteforce(const CohomRing& ring, std::uint64_t alpha) {
    const int n = ring.generators();
    if (n > 20)
        throw_domain("PreconditionViolated", "brute-force eigen-space scan limited to n <= 20");
    const CohomElement alpha_elem = ring.linear(alpha);
    std::vector<std::uint64_t> solutions;
    for (std::uint64_t x = 1; x < (1ull << n); ++x) {
        const CohomElement xe = ring.linear(x);
        if (multiply(ring, xe, xe) == multiply(ring, alpha_elem, xe)) solutions.push_back(x);
    }
    return echelon_basis(std::move(solutions));
}

bool rings_isomorphic(const BottMatrix& a, const BottMatrix& b, std::uint64_t orbit_budget) {
    if (a.size() != b.size()) throw_domain("SizeMismatch", "matrices must have the same size");
    return bott_equivalent(a, b, orbit_budget);
}

std::string linear_to_string(std::uint64_t mask) {
    if (mask == 0) return "0";
    std::string out;
    for (std::uint64_t m = mask; m;) {
        const int i = std::countr_zero(m);
        m &= m - 1;
        if (!out.empty()) out.push_back('+');
        out += "x" + std::to_string(i + 1);
    }
    return out;
}

std::uint64_t linear_from_string(std::string_view text, int n) {
    std::string compact;
    for (char c : text)
        if (c != ' ' && c != '\t') compact.push_back(c);
    if (compact == "0") return 0;
    std::uint64_t mask = 0;
    std::size_t pos = 0;
    while (pos < compact.size()) {
        if (compact[pos] != 'x')
            throw_domain("MalformedElement", "expected a term like x3");
        ++pos;
        int idx = 0;
        bool any = false;
        while (pos < compact.size() && compact[pos] >= '0' && compact[pos] <= '9') {
            idx = idx * 10 + (compact[pos] - '0');
            ++pos;
            any = true;
            if (idx > n) break;
        }
        if (!any || idx < 1 || idx > n)
            throw_domain("MalformedElement", "generator index out of range");
        mask |= 1ull << (idx - 1);
        if (pos < compact.size()) {
            if (compact[pos] != '+') throw_domain("MalformedElement", "expected '+' between terms");
            ++pos;
            if (pos == compact.size()) throw_domain("MalformedElement", "trailing '+'");
        }
    }
    return mask;
}

}  // namespace bott
