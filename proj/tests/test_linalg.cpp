// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "sparsekit/atlas.hpp"
#include "sparsekit/linalg.hpp"

using namespace sparsekit;

namespace {

BitMatrix c_matrix() { return BitMatrix::from_rows({"110", "011", "101"}); }

BitMatrix random_matrix(std::mt19937_64& rng, int n, double density = 0.5) {
    BitMatrix m(n);
    std::bernoulli_distribution bit(density);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (bit(rng)) m.set(i, j, true);
    return m;
}

BitMatrix random_matrix_with_ones(std::mt19937_64& rng, int n, int ones) {
    BitMatrix m(n);
    int placed = 0;
    while (placed < ones) {
        int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
        if (!m.get(i, j)) {
            m.set(i, j, true);
            ++placed;
        }
    }
    return m;
}

// independent determinant oracle: Laplace expansion along the first row
BigInt det_cofactor(const BitMatrix& m) {
    int n = m.n();
    if (n == 0) return 1;
    BigInt total = 0;
    for (int j = 0; j < n; ++j) {
        if (!m.get(0, j)) continue;
        BigInt sub = det_cofactor(m.minor_at(0, j));
        total += (j % 2 == 0) ? sub : -sub;
    }
    return total;
}

BitMatrix block_diag(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix m(a.n() + b.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            if (a.get(i, j)) m.set(i, j, true);
    for (int i = 0; i < b.n(); ++i)
        for (int j = 0; j < b.n(); ++j)
            if (b.get(i, j)) m.set(a.n() + i, a.n() + j, true);
    return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("determinant basics") {
    for (int n : {0, 1, 3, 6}) CHECK(determinant(BitMatrix::identity(n)) == 1);
    CHECK(determinant(c_matrix()) == 2);
    BigInt fano = determinant(atlas_make("fano").graph.to_biadjacency());
    CHECK((fano == 24 || fano == -24));
}

TEST_CASE("determinant equals the cofactor oracle up to n = 7") {
    std::mt19937_64 rng(101);
    for (int n = 1; n <= 7; ++n)
        for (int t = 0; t < 40; ++t) {
            BitMatrix m = random_matrix(rng, n);
            CHECK(determinant(m) == det_cofactor(m));
        }
}

TEST_CASE("naive permanent examples") {
    CHECK(permanent_naive(BitMatrix::identity(4)) == 1);
    CHECK(permanent_naive(BitMatrix::from_rows({"111", "111", "111"})) == 6);
    CHECK(permanent_naive(atlas_make("j").graph.to_biadjacency()) == 3);
    CHECK_THROWS(permanent_naive(BitMatrix::identity(11)));
}

TEST_CASE("ryser permanent examples") {
    CHECK(permanent_ryser(c_matrix()) == permanent_naive(c_matrix()));
    CHECK(permanent_ryser(c_matrix()) == 2);
    CHECK(permanent_ryser(atlas_make("fano").graph.to_biadjacency()) == 24);
    CHECK(permanent_ryser(BitMatrix(0)) == 1);
}

TEST_CASE("expansion permanent examples") {
    BitMatrix zero_row = BitMatrix::from_rows({"101", "000", "011"});
    CHECK(permanent_expand(zero_row) == 0);
    BitMatrix cc = block_diag(c_matrix(), c_matrix());
    CHECK(permanent_expand(cc) == 4);
    CHECK(permanent_expand(cc) == permanent_naive(c_matrix()) * permanent_naive(c_matrix()));
    std::mt19937_64 rng(55);
    for (int t = 0; t < 25; ++t) {
        BitMatrix m = random_matrix_with_ones(rng, 8, 20);
        CHECK(permanent_expand(m) == permanent_naive(m));
    }
}

TEST_CASE("three permanent engines agree on 1000+ random matrices") {
    std::mt19937_64 rng(2024);
    int count = 0;
    for (int t = 0; t < 1100; ++t) {
        int n = 1 + static_cast<int>(rng() % 8);
        BitMatrix m = random_matrix(rng, n, 0.2 + 0.6 * (rng() % 100) / 100.0);
        BigInt a = permanent_naive(m), b = permanent_ryser(m), c = permanent_expand(m);
        CHECK(a == b);
        CHECK(b == c);
        ++count;
    }
    CHECK(count >= 1000);
}

TEST_CASE("|det| never exceeds the permanent") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 400; ++t) {
        int n = 1 + static_cast<int>(rng() % 7);
        BitMatrix m = random_matrix(rng, n);
        BigInt d = determinant(m);
        if (d < 0) d = -d;
        CHECK(d <= permanent_ryser(m));
    }
}

TEST_CASE("block-diagonal multiplicativity") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; ++t) {
        BitMatrix a = random_matrix(rng, 1 + static_cast<int>(rng() % 4));
        BitMatrix b = random_matrix(rng, 1 + static_cast<int>(rng() % 4));
        BitMatrix m = block_diag(a, b);
        CHECK(determinant(m) == determinant(a) * determinant(b));
        CHECK(permanent_ryser(m) == permanent_ryser(a) * permanent_ryser(b));
    }
}

TEST_CASE("line permutation invariance") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + static_cast<int>(rng() % 6);
        BitMatrix m = random_matrix(rng, n);
        std::vector<int> rp(n), cp(n);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        BitMatrix p = m.permuted(rp, cp);
        CHECK(permanent_ryser(p) == permanent_ryser(m));
        BigInt d1 = determinant(m), d2 = determinant(p);
        CHECK((d1 == d2 || d1 == -d2));
    }
}

TEST_CASE("empty and zero-line conventions") {
    CHECK(determinant(BitMatrix(0)) == 1);
    CHECK(permanent_naive(BitMatrix(0)) == 1);
    BitMatrix z = BitMatrix::from_rows({"110", "000", "011"});
    CHECK(determinant(z) == 0);
    CHECK(permanent_ryser(z) == 0);
}

TEST_CASE("line split identity") {
    // Laplace special case: a single chosen position
    BitMatrix m = BitMatrix::from_rows({"1110", "0111", "1011", "1101"});
    auto [b, c] = line_split(m, {true, 0}, {0});
    CHECK(permanent_ryser(b) + permanent_ryser(c) == permanent_ryser(m));
    CHECK(determinant(b) + determinant(c) == determinant(m));

    // a line with 6 ones split 3/3
    BitMatrix six(7);
    for (int j = 0; j < 6; ++j) six.set(2, j, true);
    std::mt19937_64 rng(99);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (i != 2 && (rng() % 3) == 0) six.set(i, j, true);
    auto [b6, c6] = line_split(six, {true, 2}, {0, 1, 2});
    CHECK(permanent_ryser(b6) + permanent_ryser(c6) == permanent_ryser(six));

    // 100 random 9x9 instances, random legal splits, both line kinds
    for (int t = 0; t < 100; ++t) {
        BitMatrix r = random_matrix(rng, 9, 0.4);
        bool row = rng() & 1;
        const BitMatrix view = row ? r : r.transpose();
        int line = -1;
        for (int i = 0; i < 9; ++i)
            if (view.row_popcount(i) >= 2) line = i;
        if (line < 0) continue;
        auto support = view.row_support(line);
        std::vector<int> chosen(support.begin(), support.begin() + 1 + (rng() % (support.size() - 1)));
        if (chosen.size() == support.size()) chosen.pop_back();
        auto [bb, cc] = line_split(r, {row, line}, chosen);
        CHECK(permanent_ryser(bb) + permanent_ryser(cc) == permanent_ryser(r));
    }

    CHECK_THROWS(line_split(m, {true, 0}, {}));
    CHECK_THROWS(line_split(m, {true, 0}, {0, 1, 2}));  // full support
}

}  // TEST_SUITE
