#include "bott/matrix.hpp"

#include <algorithm>
#include <bit>

#include "bott/gf2.hpp"

namespace bott {

namespace {

std::uint64_t col_mask(int n) { return (n == 64) ? ~0ull : ((1ull << n) - 1); }

// splitmix64 finalizer, good enough for hashing packed rows
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

void check_size(int n) {
    if (n < 1 || n > BottMatrix::max_size)
        throw_domain("DimensionMismatch", "matrix size must be between 1 and 64");
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n == 0) throw_domain("DimensionMismatch", "empty permutation");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw_domain("PreconditionViolated", "permutation images must be a bijection on 0..n-1");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(im));
}

bool is_bott(int n, std::span<const std::uint64_t> rows) {
    check_size(n);
    if (static_cast<int>(rows.size()) != n)
        throw_domain("DimensionMismatch", "row count does not match declared size");
    const std::uint64_t mask = col_mask(n);
    for (auto r : rows)
        if (r & ~mask)
            throw_domain("DimensionMismatch", "bits set beyond declared size");

    // Kahn peeling on packed rows: repeatedly delete vertices of in-degree 0.
    std::uint64_t alive = mask;
    bool acyclic = true;
    while (alive) {
        std::uint64_t targets = 0;
        std::uint64_t v = alive;
        while (v) {
            int i = std::countr_zero(v);
            v &= v - 1;
            targets |= rows[static_cast<std::size_t>(i)] & alive;
        }
        std::uint64_t sources = alive & ~targets;
        if (sources == 0) {  // every remaining vertex has an in-arc
            acyclic = false;
            break;
        }
        alive &= ~sources;
    }
#if !defined(NDEBUG)
    if (n <= 10 && principal_minor_criterion(n, rows) != acyclic)
        throw std::logic_error("acyclicity test disagrees with the principal minor criterion");
#endif
    return acyclic;
}

bool principal_minor_criterion(int n, std::span<const std::uint64_t> rows) {
    check_size(n);
    if (n > 24) throw_budget("SubsetBudgetExceeded", "principal minor scan limited to n <= 24");
    // det over Z/2 of (M+I)[S,S] for every nonempty S
    for (std::uint64_t subset = 1; subset < (1ull << n); ++subset) {
        std::vector<int> idx;
        for (std::uint64_t s = subset; s;) {
            int i = std::countr_zero(s);
            s &= s - 1;
            idx.push_back(i);
        }
        const int k = static_cast<int>(idx.size());
        std::vector<std::uint64_t> sub(static_cast<std::size_t>(k), 0);
        for (int a = 0; a < k; ++a) {
            std::uint64_t r = rows[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])];
            r ^= 1ull << idx[static_cast<std::size_t>(a)];  // +I
            for (int b = 0; b < k; ++b)
                if ((r >> idx[static_cast<std::size_t>(b)]) & 1u)
                    sub[static_cast<std::size_t>(a)] |= 1ull << b;
        }
        if (rank_gf2(Gf2Matrix(k, k, std::move(sub))) != k) return false;
    }
    return true;
}

BottMatrix BottMatrix::from_rows(int n, std::vector<std::uint64_t> rows) {
    if (!is_bott(n, rows))
        throw_domain("NotBottMatrix", "matrix is not conjugate to a strictly upper triangular matrix");
    return BottMatrix(n, std::move(rows), Unchecked{});
}

BottMatrix BottMatrix::zero(int n) {
    check_size(n);
    return BottMatrix(n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0), Unchecked{});
}

BottMatrix BottMatrix::from_arcs(int n, std::initializer_list<std::pair<int, int>> arcs) {
    check_size(n);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (auto [i, j] : arcs) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw_domain("DimensionMismatch", "arc endpoint out of range");
        rows[static_cast<std::size_t>(i)] |= 1ull << j;
    }
    return from_rows(n, std::move(rows));
}

BottMatrix BottMatrix::from_upper_bits(int n, std::uint64_t bits) {
    check_size(n);
    const int m = n * (n - 1) / 2;
    if (m < 64 && (bits >> m))
        throw_domain("DimensionMismatch", "bits set beyond the strictly upper triangle");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++t)
            if ((bits >> t) & 1u) rows[static_cast<std::size_t>(i)] |= 1ull << j;
    return BottMatrix(n, std::move(rows), Unchecked{});
}

std::pair<int, std::vector<std::uint64_t>> parse_bin_raw(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n' || c == '/') {
            if (!cur.empty()) lines.push_back(std::move(cur));
            cur.clear();
        } else if (c == '0' || c == '1') {
            cur.push_back(c);
        } else if (c == ' ' || c == '\t' || c == '\r') {
            continue;
        } else {
            throw_domain("MalformedBin", std::string("unexpected character '") + c + "' in bin matrix");
        }
    }
    if (!cur.empty()) lines.push_back(std::move(cur));
    const int n = static_cast<int>(lines.size());
    check_size(n);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(lines[static_cast<std::size_t>(i)].size()) != n)
            throw_domain("MalformedBin", "bin matrix rows must all have length n");
        for (int j = 0; j < n; ++j)
            if (lines[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == '1')
                rows[static_cast<std::size_t>(i)] |= 1ull << j;
    }
    return {n, std::move(rows)};
}

BottMatrix BottMatrix::from_bin(std::string_view text) {
    auto [n, rows] = parse_bin_raw(text);
    return from_rows(n, std::move(rows));
}

BottMatrix BottMatrix::from_hex(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw_domain("MalformedHex", "hex matrix must look like \"n:HEXDIGITS\"");
    int n = 0;
    for (char c : text.substr(0, colon)) {
        if (c < '0' || c > '9') throw_domain("MalformedHex", "bad size prefix in hex matrix");
        n = n * 10 + (c - '0');
        if (n > max_size) throw_domain("DimensionMismatch", "hex matrix size too large");
    }
    check_size(n);
    std::string_view digits = text.substr(colon + 1);
    const int bits = n * (n - 1) / 2;
    const int expect = (bits + 3) / 4;
    if (static_cast<int>(digits.size()) != expect)
        throw_domain("MalformedHex", "hex matrix has wrong digit count for its size");

    std::vector<bool> bit(static_cast<std::size_t>(expect * 4), false);
    for (int d = 0; d < expect; ++d) {
        char c = digits[static_cast<std::size_t>(d)];
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw_domain("MalformedHex", "bad hex digit");
        for (int b = 0; b < 4; ++b) bit[static_cast<std::size_t>(4 * d + b)] = (v >> (3 - b)) & 1;
    }
    const int pad = expect * 4 - bits;
    for (int b = 0; b < pad; ++b)
        if (bit[static_cast<std::size_t>(b)]) throw_domain("MalformedHex", "nonzero padding bits");

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    int t = pad;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++t)
            if (bit[static_cast<std::size_t>(t)]) rows[static_cast<std::size_t>(i)] |= 1ull << j;
    return BottMatrix(n, std::move(rows), Unchecked{});  // strictly upper is always valid
}

std::uint64_t BottMatrix::column(int j) const {
    std::uint64_t c = 0;
    for (int i = 0; i < n_; ++i) c |= ((rows_[static_cast<std::size_t>(i)] >> j) & 1u) << i;
    return c;
}

std::vector<std::uint64_t> BottMatrix::columns() const {
    std::vector<std::uint64_t> cols(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        std::uint64_t r = rows_[static_cast<std::size_t>(i)];
        while (r) {
            int j = std::countr_zero(r);
            r &= r - 1;
            cols[static_cast<std::size_t>(j)] |= 1ull << i;
        }
    }
    return cols;
}

int BottMatrix::arc_count() const {
    int total = 0;
    for (auto r : rows_) total += std::popcount(r);
    return total;
}

bool BottMatrix::strictly_upper_triangular() const {
    for (int i = 0; i < n_; ++i) {
        const std::uint64_t below = (i == 63) ? ~0ull : ((1ull << (i + 1)) - 1);
        if (rows_[static_cast<std::size_t>(i)] & below) return false;
    }
    return true;
}

std::string BottMatrix::to_bin() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(n_ * (n_ + 1)));
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) out.push_back(arc(i, j) ? '1' : '0');
        if (i + 1 < n_) out.push_back('\n');
    }
    return out;
}

std::string BottMatrix::to_hex() const {
    if (!strictly_upper_triangular())
        throw_domain("NotUpperTriangular", "hex format is defined for strictly upper triangular matrices only");
    const int bits = n_ * (n_ - 1) / 2;
    const int expect = (bits + 3) / 4;
    const int pad = expect * 4 - bits;
    std::string out = std::to_string(n_);
    out.push_back(':');
    int acc = 0, filled = pad;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            acc = (acc << 1) | (arc(i, j) ? 1 : 0);
            if (++filled == 4) {
                out.push_back("0123456789abcdef"[acc]);
                acc = 0;
                filled = 0;
            }
        }
    return out;
}

bool BottMatrix::lex_less(const BottMatrix& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    for (int i = 0; i < n_; ++i) {
        const std::uint64_t a = rows_[static_cast<std::size_t>(i)];
        const std::uint64_t b = other.rows_[static_cast<std::size_t>(i)];
        const std::uint64_t d = a ^ b;
        if (d) return !((a >> std::countr_zero(d)) & 1u);  // first differing column: 0 wins
    }
    return false;
}

std::size_t BottMatrix::hash() const {
    std::uint64_t h = mix(static_cast<std::uint64_t>(n_));
    for (auto r : rows_) h = mix(h ^ r);
    return static_cast<std::size_t>(h);
}

BottMatrix relabel(const BottMatrix& a, const Permutation& p) {
    if (p.size() != a.size())
        throw_domain("SizeMismatch", "permutation size does not match matrix size");
    const int n = a.size();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::uint64_t r = a.row(i), out = 0;
        while (r) {
            int j = std::countr_zero(r);
            r &= r - 1;
            out |= 1ull << p(j);
        }
        rows[static_cast<std::size_t>(p(i))] = out;
    }
    return BottMatrix(n, std::move(rows), BottMatrix::Unchecked{});
}

BottMatrix local_complement(const BottMatrix& a, int k) {
    if (k < 0 || k >= a.size())
        throw_domain("PreconditionViolated", "local complement vertex out of range");
    const std::uint64_t row_k = a.row(k);
    std::vector<std::uint64_t> rows = a.rows();
    for (int i = 0; i < a.size(); ++i)
        if ((rows[static_cast<std::size_t>(i)] >> k) & 1u)  // i is an in-neighbor of k
            rows[static_cast<std::size_t>(i)] ^= row_k;
    return BottMatrix(a.size(), std::move(rows), BottMatrix::Unchecked{});
}

bool slide_allowed(const BottMatrix& a, int l, int m) {
    if (l == m || l < 0 || m < 0 || l >= a.size() || m >= a.size()) return false;
    for (int i = 0; i < a.size(); ++i) {
        const std::uint64_t r = a.row(i);
        if (((r >> l) ^ (r >> m)) & 1u) return false;
    }
    return true;
}

BottMatrix slide(const BottMatrix& a, int l, int m) {
    if (!slide_allowed(a, l, m))
        throw_domain("PreconditionViolated", "slide requires distinct vertices with equal columns");
    std::vector<std::uint64_t> rows = a.rows();
    rows[static_cast<std::size_t>(m)] ^= rows[static_cast<std::size_t>(l)];
    return BottMatrix(a.size(), std::move(rows), BottMatrix::Unchecked{});
}

}  // namespace bott
