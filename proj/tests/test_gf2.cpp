#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "bott/gf2.hpp"

using bott::Gf2Matrix;

TEST_CASE("rank of simple matrices") {
    CHECK(bott::rank_gf2(Gf2Matrix(3, 3, {0, 0, 0})) == 0);
    CHECK(bott::rank_gf2(Gf2Matrix(4, 4, {1, 2, 4, 8})) == 4);
    // rows 010/001/000
    CHECK(bott::rank_gf2(Gf2Matrix(3, 3, {0b010, 0b100, 0})) == 2);
    // dependent rows
    CHECK(bott::rank_gf2(Gf2Matrix(3, 2, {0b11, 0b01, 0b10})) == 2);
}

TEST_CASE("rref of simple matrices") {
    auto zero = bott::rref_gf2(Gf2Matrix(2, 3, {0, 0}));
    CHECK(zero.pivots.empty());
    CHECK(zero.rref.rows == std::vector<std::uint64_t>{0, 0});

    // two equal rows over one column
    auto ones = bott::rref_gf2(Gf2Matrix(2, 1, {1, 1}));
    CHECK(ones.pivots == std::vector<int>{0});
    CHECK(ones.rref.rows == std::vector<std::uint64_t>{1, 0});

    // rows 11/01 -> 10/01 (bit j of the word is column j)
    auto tri = bott::rref_gf2(Gf2Matrix(2, 2, {0b11, 0b10}));
    CHECK(tri.pivots == std::vector<int>{0, 1});
    CHECK(tri.rref.rows == std::vector<std::uint64_t>{0b01, 0b10});
}

TEST_CASE("kernel basis solves the system") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint64_t> word;
    for (int trial = 0; trial < 200; ++trial) {
        const int r = 1 + static_cast<int>(word(rng) % 6);
        const int c = 1 + static_cast<int>(word(rng) % 8);
        std::vector<std::uint64_t> rows;
        for (int i = 0; i < r; ++i) rows.push_back(word(rng) & ((1ull << c) - 1));
        Gf2Matrix m(r, c, rows);
        const auto basis = bott::kernel_basis(m);
        CHECK(static_cast<int>(basis.size()) == c - bott::rank_gf2(m));
        for (auto v : basis)
            for (auto row : rows) CHECK(std::popcount(row & v) % 2 == 0);
    }
}

TEST_CASE("echelon basis is canonical for the span") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::uint64_t> word;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint64_t> vecs;
        const int k = 1 + static_cast<int>(word(rng) % 5);
        for (int i = 0; i < k; ++i) vecs.push_back(word(rng) & 0xff);
        auto base = bott::echelon_basis(vecs);
        // shuffling and mixing rows must not change the reduced basis
        std::shuffle(vecs.begin(), vecs.end(), rng);
        if (vecs.size() > 1) vecs[0] ^= vecs[1];
        CHECK(bott::echelon_basis(vecs) == base);
        CHECK(static_cast<int>(base.size()) == bott::rank_of(vecs));
    }
}

TEST_CASE("gf2 matrix rejects inconsistent dimensions") {
    CHECK_THROWS_AS(Gf2Matrix(2, 2, {0, 0, 0}), bott::DomainError);
    CHECK_THROWS_AS(Gf2Matrix(1, 2, {0b100}), bott::DomainError);
}
