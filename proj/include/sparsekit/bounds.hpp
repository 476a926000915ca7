// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "sparsekit/alpha.hpp"
#include "sparsekit/graph.hpp"

namespace sparsekit {

enum class TheoremMode { Det, Perm };

// f(G) = perm(G) * alpha^(-k) as the exact pair (perm, k).
FNormal f_value(const BipartiteGraph& g);
// same normalization for |det|
FNormal f_det_value(const BipartiteGraph& g);

struct TheoremReport {
    bool ok = false;
    BigInt value;         // perm or |det|
    long long k = 0;
    AlphaExpr slack;      // alpha^k - value (exact)
    std::string mode;
};

// Exact check value^3 <= 2^k (equivalently value <= alpha^k).
// mode == Perm requires a C4-free graph.
TheoremReport verify_theorem(const BipartiteGraph& g, TheoremMode mode);

struct BoundEntry {
    double value = 0.0;
    bool applicable = false;
    bool exact = false;           // representable in the alpha ring
    std::optional<AlphaExpr> exact_value;
};

struct ClassicalBounds {
    long long n = 0;
    long long excess_k = 0;       // k = ones - n
    std::optional<int> degree;    // d for the regular-graph formulas
    BoundEntry hadamard;          // 2^(n/2), for ones <= 2n
    BoundEntry ryser;             // d (d - d(d-1)/(n-1))^((n-1)/2), ryser_k = d
    BoundEntry bruhn_rautenbach;  // 2^(n/6) 3^(n/6), for ones <= 2n
    BoundEntry shitov;            // 3^(k/4)
    BoundEntry paper;             // alpha^k = 2^(k/3), exact
    BoundEntry bregman;           // (d!)^(n/d)
};

// Display-only classical bound table. The paper bound alpha^k is the only
// entry flagged exact; nothing here feeds a pass/fail decision.
ClassicalBounds classical_bounds(long long n, long long k, std::optional<int> degree);

// Exact cross-powered comparisons used by the acceptance suite:
// 2^(k/3) <= 3^(k/4)  <=>  2^(4k) <= 3^(3k)
bool paper_bound_le_shitov(long long k);
// 2^((d-1)/3) < (d!)^(1/d)  <=>  2^(d(d-1)) < (d!)^3
bool paper_growth_lt_bregman(int d);

}  // namespace sparsekit
