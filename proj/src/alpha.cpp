// SPDX-License-Identifier: Apache-2.0
#include "sparsekit/alpha.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sparsekit {

AlphaExpr::AlphaExpr(BigInt a, BigInt b, BigInt c, long long m)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), m_(m) {
    normalize();
}

void AlphaExpr::normalize() {
    if (a_ == 0 && b_ == 0 && c_ == 0) {
        m_ = 0;
        return;
    }
    while ((a_ & 1) == 0 && (b_ & 1) == 0 && (c_ & 1) == 0) {
        a_ >>= 1;
        b_ >>= 1;
        c_ >>= 1;
        ++m_;
    }
}

AlphaExpr AlphaExpr::from_int(const BigInt& v) { return AlphaExpr(v, 0, 0, 0); }

AlphaExpr AlphaExpr::alpha_pow(long long e) {
    // alpha^e = 2^q * alpha^r with e = 3q + r, 0 <= r < 3
    long long q = e >= 0 ? e / 3 : -((-e + 2) / 3);
    long long r = e - 3 * q;
    BigInt coeff[3] = {0, 0, 0};
    coeff[r] = 1;
    return AlphaExpr(coeff[0], coeff[1], coeff[2], q);
}

AlphaExpr AlphaExpr::operator+(const AlphaExpr& o) const {
    long long m = std::min(m_, o.m_);
    long long s1 = m_ - m, s2 = o.m_ - m;
    return AlphaExpr((a_ << s1) + (o.a_ << s2), (b_ << s1) + (o.b_ << s2),
                     (c_ << s1) + (o.c_ << s2), m);
}

AlphaExpr AlphaExpr::operator-() const { return AlphaExpr(-a_, -b_, -c_, m_); }

AlphaExpr AlphaExpr::operator-(const AlphaExpr& o) const { return *this + (-o); }

AlphaExpr AlphaExpr::operator*(const AlphaExpr& o) const {
    // (a1 + b1 A + c1 A^2)(a2 + b2 A + c2 A^2) with A^3 = 2
    const BigInt &a1 = a_, &b1 = b_, &c1 = c_;
    const BigInt &a2 = o.a_, &b2 = o.b_, &c2 = o.c_;
    BigInt a = a1 * a2 + 2 * (b1 * c2 + c1 * b2);
    BigInt b = a1 * b2 + b1 * a2 + 2 * c1 * c2;
    BigInt c = a1 * c2 + b1 * b2 + c1 * a2;
    return AlphaExpr(std::move(a), std::move(b), std::move(c), m_ + o.m_);
}

AlphaExpr AlphaExpr::scaled_by(const BigInt& k) const {
    return AlphaExpr(a_ * k, b_ * k, c_ * k, m_);
}

bool AlphaExpr::operator==(const AlphaExpr& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && (is_zero() || m_ == o.m_);
}

int AlphaExpr::sign() const {
    if (is_zero()) return 0;
    BigInt norm = a_ * a_ * a_ + 2 * b_ * b_ * b_ + 4 * c_ * c_ * c_ - 6 * a_ * b_ * c_;
    return big_sign(norm);
}

double AlphaExpr::to_double() const {
    static const double kAlpha = std::cbrt(2.0);
    double v = a_.convert_to<double>() + b_.convert_to<double>() * kAlpha +
               c_.convert_to<double>() * kAlpha * kAlpha;
    return std::ldexp(v, static_cast<int>(m_));
}

std::string AlphaExpr::decimal4() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", to_double());
    return buf;
}

std::string AlphaExpr::tuple_string() const {
    return "(" + a_.str() + "," + b_.str() + "," + c_.str() + "," + std::to_string(m_) + ")";
}

Order alpha_compare(const AlphaExpr& x, const AlphaExpr& y) {
    int s = (x - y).sign();
    return s < 0 ? Order::LT : s > 0 ? Order::GT : Order::EQ;
}

AlphaExpr alpha_c1() { return AlphaExpr::alpha_pow(-2) + AlphaExpr::alpha_pow(-7); }
AlphaExpr alpha_c2() { return AlphaExpr::alpha_pow(-3) + AlphaExpr::alpha_pow(-4); }
AlphaExpr alpha_one() { return AlphaExpr::from_int(1); }

AlphaExpr FNormal::to_alpha() const { return AlphaExpr::alpha_pow(-k).scaled_by(value); }

Order compare_f(const FNormal& fv, const AlphaExpr& bound) {
    return alpha_compare(fv.to_alpha(), bound);
}

}  // namespace sparsekit
