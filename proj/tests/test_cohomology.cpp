#include <doctest.h>

#include <random>

#include "bott/cohomology.hpp"
#include "test_util.hpp"

using bott::BottMatrix;
using bott::CohomElement;
using bott::CohomRing;
using namespace bott_test;

TEST_CASE("squares reduce through the column relations") {
    const CohomRing path(BottMatrix::from_bin("010/001/000"));
    // x2^2 = x1 x2
    CHECK(multiply(path, path.generator(1), path.generator(1)) ==
          path.element(2, {0b011}));
    // x1^2 = 0 in any ring over a strictly upper triangular matrix
    CHECK(multiply(path, path.generator(0), path.generator(0)).is_zero());

    const CohomRing fork(BottMatrix::from_bin("011/001/000"));
    // x3^2 = x1 x3 + x2 x3
    CHECK(multiply(fork, fork.generator(2), fork.generator(2)) ==
          fork.element(2, {0b101, 0b110}));
}

TEST_CASE("ring laws on random elements") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int m = n * (n - 1) / 2;
        const CohomRing ring(BottMatrix::from_upper_bits(n, rng() & ((1ull << m) - 1)));
        const auto u = ring.linear(rng() & ((1ull << n) - 1));
        const auto v = ring.linear(rng() & ((1ull << n) - 1));
        const auto w = ring.linear(rng() & ((1ull << n) - 1));
        CHECK(multiply(ring, u, v) == multiply(ring, v, u));
        CHECK(multiply(ring, multiply(ring, u, v), w) ==
              multiply(ring, u, multiply(ring, v, w)));
        const auto uv = multiply(ring, u, v);
        CHECK(uv.degree == 2);
        CHECK(multiply(ring, ring.one(), u) == u);
    }
}

TEST_CASE("ring construction requires a strictly upper triangular matrix") {
    CHECK_THROWS_AS(CohomRing(BottMatrix::from_bin("000/100/000")), bott::DomainError);
    CHECK_THROWS_AS(CohomRing(BottMatrix::from_bin("000/001/010")), bott::DomainError);
}

TEST_CASE("eigen elements of the worked examples") {
    const CohomRing zero2(BottMatrix::zero(2));
    const auto e0 = bott::eigen_elements(zero2);
    REQUIRE(e0.size() == 1);
    CHECK(e0.front().alpha == 0);
    CHECK(e0.front().eigenspace_basis == std::vector<std::uint64_t>{0b01, 0b10});
    CHECK(e0.front().reduced_dim == 2);

    const CohomRing fork(BottMatrix::from_bin("011/001/000"));
    const auto ef = bott::eigen_elements(fork);
    REQUIRE(ef.size() == 3);
    CHECK(ef[0].alpha == 0);                 // eigen-space span{x1}
    CHECK(ef[0].eigenspace_basis == std::vector<std::uint64_t>{0b001});
    CHECK(ef[0].reduced_dim == 1);
    CHECK(ef[1].alpha == 0b001);             // alpha = x1, eigen-space span{x1,x2}
    CHECK(ef[1].eigenspace_basis == std::vector<std::uint64_t>{0b001, 0b010});
    CHECK(ef[1].reduced_dim == 1);
    CHECK(ef[2].alpha == 0b011);             // alpha = x1+x2
    CHECK(ef[2].reduced_dim == 1);

    const CohomRing path(BottMatrix::from_bin("010/001/000"));
    const auto ep = bott::eigen_elements(path);
    REQUIRE(ep.size() == 3);
    CHECK(ep[0].alpha == 0);
    CHECK(ep[1].alpha == 0b001);
    CHECK(ep[2].alpha == 0b010);
}

TEST_CASE("eigen spaces match the brute-force scan, exhaustive n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& a : all_upper_matrices(n)) {
            const CohomRing ring(a);
            const auto listed = bott::eigen_elements(ring);
            for (std::uint64_t alpha = 0; alpha < (1ull << n); ++alpha) {
                const auto brute = bott::eigen_space_bruteforce(ring, alpha);
                const bott::EigenData* hit = nullptr;
                for (const auto& e : listed)
                    if (e.alpha == alpha) hit = &e;
                if (hit) {
                    CHECK(brute == hit->eigenspace_basis);
                } else {
                    // only 0 and alpha itself solve x^2 = alpha x
                    CHECK(brute == bott::echelon_basis({alpha}));
                }
            }
        }
    }
}

TEST_CASE("ring isomorphism agrees with the substitution search for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        const auto matrices = all_upper_matrices(n);
        for (const auto& a : matrices)
            for (const auto& b : matrices)
                CHECK(bott::rings_isomorphic(a, b) == graded_iso_bruteforce(a, b));
    }
}

TEST_CASE("reduced eigen dimension multiset is a class invariant") {
    std::mt19937 rng(67);
    auto reduced_dims = [](const BottMatrix& m) {
        const CohomRing ring(bott::iso_canon(m).matrix);
        std::vector<int> dims;
        for (const auto& e : bott::eigen_elements(ring)) dims.push_back(e.reduced_dim);
        std::sort(dims.begin(), dims.end());
        return dims;
    };
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto a = random_bott(n, rng);
        auto b = a;
        for (int step = 0; step < 4; ++step) b = random_operation(b, rng);
        CHECK(reduced_dims(a) == reduced_dims(b));
    }
}

TEST_CASE("degree-1 element text round trip") {
    CHECK(bott::linear_to_string(0) == "0");
    CHECK(bott::linear_to_string(0b101) == "x1+x3");
    CHECK(bott::linear_from_string("x1+x3", 3) == 0b101);
    CHECK(bott::linear_from_string(" x2 ", 3) == 0b010);
    CHECK(bott::linear_from_string("0", 3) == 0);
    CHECK_THROWS_AS(bott::linear_from_string("x4", 3), bott::DomainError);
    CHECK_THROWS_AS(bott::linear_from_string("x1+", 3), bott::DomainError);
    CHECK_THROWS_AS(bott::linear_from_string("y1", 3), bott::DomainError);
    std::mt19937 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t mask = rng() & 0xff;
        CHECK(bott::linear_from_string(bott::linear_to_string(mask), 8) == mask);
    }
}
