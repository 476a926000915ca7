// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <random>

#include "doctest.h"
#include "sparsekit/alpha.hpp"

using namespace sparsekit;

namespace {

AlphaExpr ap(long long e) { return AlphaExpr::alpha_pow(e); }

double eval(const AlphaExpr& x) { return x.to_double(); }

}  // namespace

TEST_SUITE("alpha") {

TEST_CASE("defining relation and normal form") {
    CHECK(ap(3) == AlphaExpr::from_int(2));
    CHECK(ap(0) == alpha_one());
    CHECK((ap(1) * ap(1) * ap(1)) == AlphaExpr::from_int(2));
    CHECK((ap(-3) + ap(-3)) == alpha_one());  // 2 * alpha^-3 = 1
    // unique primitive form: not all coefficients even
    AlphaExpr x(BigInt(4), BigInt(8), BigInt(12), -1);
    CHECK(x.coeff_1() == 1);
    CHECK(x.coeff_alpha() == 2);
    CHECK(x.coeff_alpha2() == 3);
    CHECK(x.scale() == 1);
}

TEST_CASE("constants c1 and c2") {
    AlphaExpr c1 = alpha_c1();
    CHECK(c1 == AlphaExpr(BigInt(0), BigInt(4), BigInt(1), -3));
    AlphaExpr c2 = alpha_c2();
    CHECK(c2 == AlphaExpr(BigInt(2), BigInt(0), BigInt(1), -2));
    CHECK(c1.decimal4() == "0.8284");
    CHECK(c2.decimal4() == "0.8969");
}

TEST_CASE("stated constant inequalities, exact") {
    AlphaExpr c1 = alpha_c1(), c2 = alpha_c2();
    // c1 <= (3 alpha^-4)^-1  <=>  3 c1 <= alpha^4
    CHECK(alpha_compare(c1.scaled_by(3), ap(4)) == Order::LT);
    // c2 <= (alpha^-1 + alpha^-5)^-1  <=>  c2 (alpha^-1 + alpha^-5) <= 1
    AlphaExpr prod = c2 * (ap(-1) + ap(-5));
    CHECK(alpha_compare(prod, alpha_one()) == Order::LT);
    CHECK(prod.decimal4() == "0.9943");  // the text rounds this to < 0.9944
    // alpha^-3 + alpha^-5 < c1
    CHECK(alpha_compare(ap(-3) + ap(-5), c1) == Order::LT);
    // alpha^-4 + 2 alpha^-6 < 1
    AlphaExpr disc = ap(-4) + ap(-6).scaled_by(2);
    CHECK(alpha_compare(disc, alpha_one()) == Order::LT);
    CHECK(disc.decimal4() == "0.8969");
    // 2 alpha^-5 + alpha^-7 equals c1 exactly
    CHECK((ap(-5).scaled_by(2) + ap(-7)) == c1);
    // alpha^-5 + alpha^-6 + alpha^-7 <= c1
    CHECK(alpha_compare(ap(-5) + ap(-6) + ap(-7), c1) != Order::GT);
    // alpha^-5 + 3 alpha^-7 and alpha^-6 + 4 alpha^-8 stay below 1
    CHECK((ap(-5) + ap(-7).scaled_by(3)).decimal4() == "0.9103");
    CHECK(alpha_compare(ap(-6) + ap(-8).scaled_by(4), alpha_one()) == Order::LT);
}

TEST_CASE("f-normal comparisons") {
    FNormal fj{3, 5};  // 3 alpha^-5
    CHECK(compare_f(fj, alpha_one()) == Order::LT);
    CHECK(compare_f(fj, alpha_c1()) == Order::GT);
    CHECK(fj.to_alpha().decimal4() == "0.9449");
    FNormal fc6{2, 3};
    CHECK(compare_f(fc6, alpha_one()) == Order::EQ);
    FNormal fc8{2, 4};  // 2 alpha^-4 = alpha^-1 exactly
    CHECK(compare_f(fc8, ap(-1)) == Order::EQ);
    FNormal prod = fc6.product(fj);
    CHECK(prod.value == 6);
    CHECK(prod.k == 8);
}

TEST_CASE("sign agrees with floating point on random small expressions") {
    std::mt19937_64 rng(20260809);
    std::uniform_int_distribution<int> coeff(-40, 40), scale(-6, 6);
    int checked = 0;
    for (int t = 0; t < 10000; ++t) {
        AlphaExpr x(BigInt(coeff(rng)), BigInt(coeff(rng)), BigInt(coeff(rng)), scale(rng));
        AlphaExpr y(BigInt(coeff(rng)), BigInt(coeff(rng)), BigInt(coeff(rng)), scale(rng));
        double dx = eval(x), dy = eval(y);
        if (std::abs(dx - dy) < 1e-6) continue;  // too close for float to decide
        ++checked;
        Order o = alpha_compare(x, y);
        CHECK(o == (dx < dy ? Order::LT : Order::GT));
    }
    CHECK(checked > 9000);
}

TEST_CASE("arithmetic laws") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> e(-12, 12);
    for (int t = 0; t < 200; ++t) {
        long long a = e(rng), b = e(rng);
        CHECK((ap(a) * ap(b)) == ap(a + b));
    }
    // distributivity spot check with mixed terms
    AlphaExpr u = ap(-2) + ap(5).scaled_by(3);
    AlphaExpr v = ap(1) - ap(-7);
    AlphaExpr w = ap(2).scaled_by(2) + ap(-1);
    CHECK((u * (v + w)) == (u * v + u * w));
}

}  // TEST_SUITE
