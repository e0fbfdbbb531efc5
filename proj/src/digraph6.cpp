#include "bott/digraph6.hpp"

namespace bott {

namespace {

int take_size(std::string_view& s) {
    if (s.empty()) throw_domain("MalformedD6", "missing size field");
    if (s.front() != '~') {
        const int n = static_cast<int>(s.front()) - 63;
        if (n < 0 || n > 62) throw_domain("MalformedD6", "bad size character");
        s.remove_prefix(1);
        return n;
    }
    s.remove_prefix(1);
    if (s.size() >= 1 && s.front() == '~')
        throw_domain("MalformedD6", "8-byte size fields are not supported");
    if (s.size() < 3) throw_domain("MalformedD6", "truncated size field");
    int n = 0;
    for (int k = 0; k < 3; ++k) {
        const int v = static_cast<int>(s[static_cast<std::size_t>(k)]) - 63;
        if (v < 0 || v > 63) throw_domain("MalformedD6", "bad size character");
        n = (n << 6) | v;
    }
    s.remove_prefix(3);
    return n;
}

void put_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
        return;
    }
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
}

}  // namespace

std::pair<int, std::vector<std::uint64_t>> decode_digraph6_raw(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty() || line.front() != '&')
        throw_domain("MalformedD6", "digraph6 lines start with '&'");
    line.remove_prefix(1);
    const int n = take_size(line);
    if (n < 1 || n > BottMatrix::max_size)
        throw_domain("DimensionMismatch", "digraph6 size outside the supported 1..64 range");

    const int bits = n * n;
    const int groups = (bits + 5) / 6;
    if (static_cast<int>(line.size()) != groups)
        throw_domain("MalformedD6", "digraph6 payload has the wrong length");

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    int t = 0;
    for (int g = 0; g < groups; ++g) {
        const int v = static_cast<int>(line[static_cast<std::size_t>(g)]) - 63;
        if (v < 0 || v > 63) throw_domain("MalformedD6", "byte outside the printable range");
        for (int b = 5; b >= 0; --b, ++t) {
            const bool bit = (v >> b) & 1;
            if (t >= bits) {
                if (bit) throw_domain("MalformedD6", "nonzero padding bits");
                continue;
            }
            if (bit) rows[static_cast<std::size_t>(t / n)] |= 1ull << (t % n);
        }
    }
    return {n, std::move(rows)};
}

BottMatrix parse_digraph6(std::string_view line) {
    auto [n, rows] = decode_digraph6_raw(line);
    if (!is_bott(n, rows))
        throw_domain("NotAcyclic", "digraph6 record encodes a digraph with a directed cycle");
    return BottMatrix::from_rows(n, std::move(rows));
}

std::string encode_digraph6(const BottMatrix& a) {
    const int n = a.size();
    std::string out = "&";
    put_size(out, n);
    const int bits = n * n;
    int acc = 0, filled = 0;
    for (int t = 0; t < bits; ++t) {
        acc = (acc << 1) | (a.arc(t / n, t % n) ? 1 : 0);
        if (++filled == 6) {
            out.push_back(static_cast<char>(acc + 63));
            acc = 0;
            filled = 0;
        }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

}  // namespace bott
