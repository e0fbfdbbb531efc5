#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "bott/canon.hpp"
#include "bott/classify.hpp"
#include "test_util.hpp"

using bott::BottMatrix;
using bott::Permutation;
using namespace bott_test;

TEST_CASE("iso_canon basics") {
    CHECK(bott::iso_canon(BottMatrix::zero(3)).matrix == BottMatrix::zero(3));
    // reversed path relabels back to the ascending path
    CHECK(bott::iso_canon(BottMatrix::from_bin("000/100/010")).matrix ==
          BottMatrix::from_bin("010/001/000"));
    // non-isomorphic digraphs in one class keep distinct forms
    const auto path = BottMatrix::from_bin("010/001/000");
    const auto tourn = BottMatrix::from_bin("011/001/000");
    CHECK(bott::iso_canon(path).matrix != bott::iso_canon(tourn).matrix);
}

TEST_CASE("iso_canon is invariant under relabeling and its witness is faithful") {
    auto check_one = [](const BottMatrix& a, const Permutation& p) {
        const auto canon = bott::iso_canon(a);
        CHECK(relabel(a, canon.witness) == canon.matrix);
        CHECK(canon.matrix.strictly_upper_triangular());
        CHECK(bott::iso_canon(relabel(a, p)).matrix == canon.matrix);
    };

    for (int n = 2; n <= 4; ++n) {
        std::vector<int> images(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
        const auto matrices = all_bott_matrices(n);
        do {
            const Permutation p(images);
            for (const auto& a : matrices) check_one(a, p);
        } while (std::next_permutation(images.begin(), images.end()));
    }

    std::mt19937 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 3);
        check_one(random_bott(n, rng), random_perm(n, rng));
    }
}

TEST_CASE("iso_canon separates exactly the isomorphism classes") {
    // two matrices get one form iff some relabeling maps one to the other
    const auto matrices = all_bott_matrices(3);
    std::vector<int> images{0, 1, 2};
    for (const auto& a : matrices)
        for (const auto& b : matrices) {
            bool isomorphic = false;
            std::vector<int> im = images;
            do {
                if (relabel(a, Permutation(im)) == b) isomorphic = true;
            } while (!isomorphic && std::next_permutation(im.begin(), im.end()));
            CHECK((bott::iso_canon(a).matrix == bott::iso_canon(b).matrix) == isomorphic);
        }
}

TEST_CASE("bott_canon on the three-vertex classes") {
    const auto zero = BottMatrix::zero(3);
    const auto rep_zero = bott::bott_canon(zero);
    CHECK(rep_zero.canonical == zero);
    CHECK(rep_zero.orbit_size == 1);

    // the four single-sink matrices land in one class
    const auto c2 = bott::bott_canon(BottMatrix::from_bin("010/000/000")).canonical;
    CHECK(bott::bott_canon(BottMatrix::from_bin("001/000/000")).canonical == c2);
    CHECK(bott::bott_canon(BottMatrix::from_bin("000/001/000")).canonical == c2);
    CHECK(bott::bott_canon(BottMatrix::from_bin("001/001/000")).canonical == c2);

    const auto c4 = bott::bott_canon(BottMatrix::from_bin("010/001/000")).canonical;
    CHECK(bott::bott_canon(BottMatrix::from_bin("011/001/000")).canonical == c4);
    CHECK(c4 != c2);
    CHECK(bott::bott_canon(BottMatrix::from_bin("011/000/000")).canonical != c4);
}

TEST_CASE("bott_equivalent is an equivalence relation") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto a = random_bott(n, rng);
        CHECK(bott::bott_equivalent(a, a));
        CHECK(bott::bott_equivalent(a, relabel(a, random_perm(n, rng))));
        const auto b = random_bott(n, rng);
        const auto c = random_bott(n, rng);
        CHECK(bott::bott_equivalent(a, b) == bott::bott_equivalent(b, a));
        if (bott::bott_equivalent(a, b) && bott::bott_equivalent(b, c))
            CHECK(bott::bott_equivalent(a, c));
    }
    CHECK_FALSE(bott::bott_equivalent(BottMatrix::from_bin("011/000/000"),
                                      BottMatrix::from_bin("010/001/000")));
    CHECK_THROWS_AS(bott::bott_equivalent(BottMatrix::zero(2), BottMatrix::zero(3)),
                    bott::DomainError);
}

TEST_CASE("bott_canon is constant along operations") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto a = random_bott(n, rng);
        const auto canon = bott::bott_canon(a).canonical;
        auto b = a;
        for (int step = 0; step < 4; ++step) b = random_operation(b, rng);
        CHECK(bott::bott_canon(b).canonical == canon);
    }
}

TEST_CASE("orbit listing is sorted and starts at the canonical form") {
    const auto orbit = bott::bott_orbit(BottMatrix::from_bin("011/001/000"));
    CHECK(orbit.size() == 2);
    CHECK(std::is_sorted(orbit.begin(), orbit.end()));
    CHECK(orbit.front() == bott::bott_canon(BottMatrix::from_bin("011/001/000")).canonical);
}

TEST_CASE("orbit budget is enforced") {
    CHECK_THROWS_AS(bott::bott_canon(BottMatrix::from_bin("010/000/000"), 1), bott::BudgetError);
    // closures stop at the documented size cap, rows still go to 64
    CHECK_THROWS_AS(bott::bott_canon(BottMatrix::zero(17)), bott::DomainError);
    CHECK(bott::bott_canon(BottMatrix::zero(16)).orbit_size == 1);
}

TEST_CASE("superdiagonal family splits by its short-diagonal normal form") {
    // clearing each (i, i+2) entry with a local complement at i+1 keeps the
    // family shape and lands on a normal form that determines the class
    auto normalize = [](BottMatrix a) {
        const int n = a.size();
        for (int i = 0; i + 2 < n; ++i)
            if (a.arc(i, i + 2)) a = local_complement(a, i + 1);
        for (int i = 0; i + 1 < n; ++i) CHECK(a.arc(i, i + 1));
        for (int i = 0; i + 2 < n; ++i) CHECK_FALSE(a.arc(i, i + 2));
        return a;
    };
    for (int n = 4; n <= 5; ++n) {
        std::map<BottMatrix, BottMatrix> normal_of_class;
        std::set<BottMatrix> normals;
        for (const auto& a : bott::delta_family(n)) {
            const auto canonical = bott::bott_canon(a).canonical;
            const auto normal = normalize(a);
            CHECK(bott::bott_equivalent(a, normal));
            auto [it, fresh] = normal_of_class.try_emplace(canonical, normal);
            if (!fresh) CHECK(it->second == normal);
            normals.insert(normal);
        }
        const auto want = std::size_t{1} << ((n - 2) * (n - 3) / 2);
        CHECK(normal_of_class.size() == want);
        CHECK(normals.size() == want);
    }
}
