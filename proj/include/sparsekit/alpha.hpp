// SPDX-License-Identifier: Apache-2.0
//
// Exact arithmetic in the ring Z[alpha, 1/2] where alpha = 2^(1/3).
// Every value is kept as (a + b*alpha + c*alpha^2) * 2^m with integer
// a, b, c and integer m; this form is unique once gcd-of-2 factors are
// stripped, so equality and ordering are decidable without rounding.
#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "sparsekit/bigint.hpp"

namespace sparsekit {

enum class Order { LT = -1, EQ = 0, GT = 1 };

class AlphaExpr {
public:
    AlphaExpr() = default;
    AlphaExpr(BigInt a, BigInt b, BigInt c, long long m);

    static AlphaExpr from_int(const BigInt& v);
    // alpha^e for any integer exponent (negative exponents give 2^m scaling).
    static AlphaExpr alpha_pow(long long e);

    const BigInt& coeff_1() const { return a_; }
    const BigInt& coeff_alpha() const { return b_; }
    const BigInt& coeff_alpha2() const { return c_; }
    long long scale() const { return m_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0; }

    AlphaExpr operator+(const AlphaExpr& o) const;
    AlphaExpr operator-(const AlphaExpr& o) const;
    AlphaExpr operator-() const;
    AlphaExpr operator*(const AlphaExpr& o) const;
    AlphaExpr scaled_by(const BigInt& k) const;

    bool operator==(const AlphaExpr& o) const;

    // Exact sign of the real number this expression denotes.
    // For s = a + b*alpha + c*alpha^2 the field norm factors as
    // N(s) = s * |sigma(s)|^2 with sigma a complex embedding, hence
    // sign(s) = sign(N(s)) = sign(a^3 + 2 b^3 + 4 c^3 - 6 a b c).
    int sign() const;

    double to_double() const;
    // fixed 4-decimal rendering used in reports
    std::string decimal4() const;
    // "(a,b,c,m)" tuple form used in JSON reports
    std::string tuple_string() const;

private:
    BigInt a_ = 0, b_ = 0, c_ = 0;
    long long m_ = 0;
    void normalize();
};

Order alpha_compare(const AlphaExpr& x, const AlphaExpr& y);

// Constants from the bound statements: c1 = alpha^-2 + alpha^-7,
// c2 = alpha^-3 + alpha^-4.
AlphaExpr alpha_c1();
AlphaExpr alpha_c2();
AlphaExpr alpha_one();

// Normalized matching count f(G) = perm(G) * alpha^(-k), stored exactly
// as the pair (value, k). Multiplicative over disjoint unions.
struct FNormal {
    BigInt value = 0;   // permanent (or |det| in det mode), >= 0
    long long k = 0;    // e(G) - n

    AlphaExpr to_alpha() const;
    FNormal product(const FNormal& o) const { return {value * o.value, k + o.k}; }
    bool operator==(const FNormal& o) const = default;
};

Order compare_f(const FNormal& fv, const AlphaExpr& bound);

}  // namespace sparsekit
