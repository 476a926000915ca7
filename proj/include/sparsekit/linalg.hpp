// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "sparsekit/bigint.hpp"
#include "sparsekit/bitmatrix.hpp"

namespace sparsekit {

// Exact determinant by fraction-free (Bareiss) elimination with full
// pivoting. n = 0 returns 1.
BigInt determinant(const BitMatrix& m);

// Reference oracle: sum over all permutations. Throws for n > 10.
BigInt permanent_naive(const BitMatrix& m);

// Inclusion-exclusion permanent, (n-1)-subset Gray-code variant.
// Runs in machine words (int128 accumulator) when a safe bound holds,
// otherwise in big integers. n <= 64.
BigInt permanent_ryser(const BitMatrix& m);

// Recursive cofactor expansion pivoting on a minimum-popcount line,
// memoized on a normalized key (rows and columns sorted). Exact; meant
// to win on sparse inputs.
BigInt permanent_expand(const BitMatrix& m);

struct LineRef {
    bool is_row = true;
    int index = 0;
};

// Split one line's support into two disjoint parts: B keeps the chosen
// positions on that line (everything else on the line zeroed is kept in
// C), all other lines intact in both. perm(m) = perm(B) + perm(C) and
// det(m) = det(B) + det(C) by multilinearity.
std::pair<BitMatrix, BitMatrix> line_split(const BitMatrix& m, LineRef line,
                                           const std::vector<int>& chosen);

}  // namespace sparsekit
