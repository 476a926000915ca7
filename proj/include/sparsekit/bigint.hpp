// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sparsekit {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow2(long long e) {
    BigInt r = 1;
    return r << e;
}

inline BigInt big_pow(BigInt base, unsigned long long e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline int big_sign(const BigInt& x) { return x.sign(); }

}  // namespace sparsekit
