// SPDX-License-Identifier: Apache-2.0
#include "sparsekit/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "sparsekit/linalg.hpp"

namespace sparsekit {

FNormal f_value(const BipartiteGraph& g) {
    return {permanent_ryser(g.to_biadjacency()), g.excess_k()};
}

FNormal f_det_value(const BipartiteGraph& g) {
    BigInt d = determinant(g.to_biadjacency());
    if (d < 0) d = -d;
    return {d, g.excess_k()};
}

TheoremReport verify_theorem(const BipartiteGraph& g, TheoremMode mode) {
    if (mode == TheoremMode::Perm && !g.is_c4_free())
        throw std::invalid_argument("verify_theorem: precondition-violated (mode=perm needs a C4-free graph)");
    TheoremReport rep;
    rep.mode = mode == TheoremMode::Perm ? "perm" : "det";
    FNormal f = mode == TheoremMode::Perm ? f_value(g) : f_det_value(g);
    rep.value = f.value;
    rep.k = f.k;
    if (f.k >= 0) {
        rep.ok = f.value * f.value * f.value <= big_pow2(f.k);
    } else {
        rep.ok = f.value == 0;
    }
    rep.slack = AlphaExpr::alpha_pow(f.k) - AlphaExpr::from_int(f.value);
    return rep;
}

ClassicalBounds classical_bounds(long long n, long long k, std::optional<int> degree) {
    ClassicalBounds out;
    out.n = n;
    out.excess_k = k;
    out.degree = degree;
    const double dn = static_cast<double>(n);
    const double dk = static_cast<double>(k);

    // Hadamard under the at-most-2n-ones AM-GM: 2^(n/2); meaningful for k <= n.
    out.hadamard.applicable = n >= 1 && k <= n;
    out.hadamard.value = std::exp2(dn / 2.0);

    // Bruhn-Rautenbach 2^(n/6) 3^(n/6), same regime.
    out.bruhn_rautenbach.applicable = n >= 1 && k <= n;
    out.bruhn_rautenbach.value = std::exp2(dn / 6.0) * std::pow(3.0, dn / 6.0);

    // Ryser with its own per-row count (labelled ryser_k = d, dn ones total);
    // valid for 1 <= d <= (n+1)/2.
    if (degree && n >= 2) {
        double d = *degree;
        if (d >= 1.0 && d <= (dn + 1.0) / 2.0) {
            out.ryser.applicable = true;
            out.ryser.value = d * std::pow(d - d * (d - 1.0) / (dn - 1.0), (dn - 1.0) / 2.0);
        }
    }

    out.shitov.applicable = true;
    out.shitov.value = std::pow(3.0, dk / 4.0);

    out.paper.applicable = true;
    out.paper.exact = true;
    out.paper.exact_value = AlphaExpr::alpha_pow(k);
    out.paper.value = out.paper.exact_value->to_double();

    if (degree && *degree >= 1) {
        out.bregman.applicable = true;
        double d = *degree;
        double logfact = std::lgamma(d + 1.0);
        out.bregman.value = std::exp(logfact * dn / d);
    }
    return out;
}

bool paper_bound_le_shitov(long long k) {
    if (k < 0) throw std::invalid_argument("paper_bound_le_shitov: k must be nonnegative");
    return big_pow2(4 * k) <= big_pow(3, static_cast<unsigned long long>(3 * k));
}

bool paper_growth_lt_bregman(int d) {
    if (d < 1) throw std::invalid_argument("paper_growth_lt_bregman: d must be positive");
    BigInt fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    return big_pow2(static_cast<long long>(d) * (d - 1)) < big_pow(fact, 3);
}

}  // namespace sparsekit
