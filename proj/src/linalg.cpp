// SPDX-License-Identifier: Apache-2.0
#include "sparsekit/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace sparsekit {

BigInt determinant(const BitMatrix& m) {
    int n = m.n();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.get(i, j) ? 1 : 0;

    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        // full pivoting: any nonzero entry of the trailing submatrix
        int pi = -1, pj = -1;
        for (int i = k; i < n && pi < 0; ++i)
            for (int j = k; j < n; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) return 0;
        if (pi != k) {
            std::swap(a[pi], a[k]);
            sign = -sign;
        }
        if (pj != k) {
            for (int i = 0; i < n; ++i) std::swap(a[i][pj], a[i][k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

BigInt permanent_naive(const BitMatrix& m) {
    int n = m.n();
    if (n > 10) throw std::invalid_argument("permanent_naive: order-too-large (n > 10)");
    if (n == 0) return 1;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    BigInt total = 0;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = m.get(i, perm[i]);
        if (ok) ++total;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

namespace {

// Nijenhuis-Wilf subset sum with doubled weights to stay integral:
// perm = (-1)^(n-1) / 2^(n-1) * sum over S in [n-1] of (-1)^|S| prod_i W_i(S),
// W_i = 2 a_{i,n-1} - r_i + 2 * sum_{j in S} a_{ij}.
template <typename Int>
BigInt ryser_gray(const BitMatrix& m, Int /*tag*/) {
    const int n = m.n();
    std::vector<Int> w(n);
    for (int i = 0; i < n; ++i) {
        int r = m.row_popcount(i);
        w[i] = Int(2 * int(m.get(i, n - 1)) - r);
    }
    Int prod = 1;
    for (int i = 0; i < n; ++i) prod *= w[i];
    Int total = prod;  // S = empty
    const uint64_t count = n >= 1 ? (1ull << (n - 1)) : 1;
    uint64_t gray = 0;
    int parity = 0;
    for (uint64_t it = 1; it < count; ++it) {
        uint64_t next_gray = it ^ (it >> 1);
        uint64_t diff = gray ^ next_gray;
        int j = std::countr_zero(diff);
        bool added = next_gray & diff;
        gray = next_gray;
        parity ^= 1;
        for (int i = 0; i < n; ++i) {
            if (m.get(i, j)) w[i] += added ? Int(2) : Int(-2);
        }
        prod = 1;
        for (int i = 0; i < n; ++i) prod *= w[i];
        if (parity)
            total -= prod;
        else
            total += prod;
    }
    BigInt result;
    if constexpr (std::is_same_v<Int, BigInt>)
        result = total;
    else {
        // move an __int128 into a BigInt
        bool neg = total < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-total)
                                  : static_cast<unsigned __int128>(total);
        result = BigInt(static_cast<uint64_t>(u >> 64));
        result <<= 64;
        result += BigInt(static_cast<uint64_t>(u));
        if (neg) result = -result;
    }
    if ((n - 1) & 1) result = -result;
    // exact division by 2^(n-1)
    result >>= (n - 1);
    return result;
}

}  // namespace

BigInt permanent_ryser(const BitMatrix& m) {
    const int n = m.n();
    if (n > 64) throw std::invalid_argument("permanent_ryser: order-too-large (n > 64)");
    if (n == 0) return 1;
    for (int i = 0; i < n; ++i)
        if (m.row_is_zero(i)) return 0;
    // |W_i| <= 2 r_i + 2, and 2^(n-1) terms; stay in int128 when the
    // product bound leaves headroom.
    double bits = n - 1;
    for (int i = 0; i < n; ++i) bits += std::log2(2.0 * m.row_popcount(i) + 2.0);
    if (bits < 120.0) return ryser_gray(m, __int128{});
    return ryser_gray(m, BigInt{});
}

namespace {

struct KeyHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        size_t h = 0xcbf29ce484222325ull;
        for (uint64_t w : v) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

using Memo = std::unordered_map<std::vector<uint64_t>, BigInt, KeyHash>;

// Matrix state for the expansion: list of row bitmasks over live columns.
// Normalization (sort rows desc, columns desc, rows desc) preserves the
// permanent and collapses permuted duplicates in the memo.
struct ExpandState {
    int n;
    std::vector<uint64_t> rows;
};

std::vector<uint64_t> normalized_key(std::vector<uint64_t> rows, int n) {
    for (int pass = 0; pass < 2; ++pass) {
        std::sort(rows.begin(), rows.end(), std::greater<>());
        // sort columns by their bit-vector over rows, descending
        std::vector<uint64_t> colval(n, 0);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < n; ++j)
                if ((rows[i] >> j) & 1) colval[j] |= 1ull << i;
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) { return colval[x] > colval[y]; });
        std::vector<uint64_t> remapped(rows.size(), 0);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < n; ++j)
                if ((rows[i] >> order[j]) & 1) remapped[i] |= 1ull << j;
        rows = std::move(remapped);
    }
    std::sort(rows.begin(), rows.end(), std::greater<>());
    return rows;
}

BigInt expand_rec(std::vector<uint64_t> rows, int ncols, Memo& memo) {
    const int nrows = static_cast<int>(rows.size());
    if (nrows == 0) return 1;
    // zero row kills the permanent; degree-1 rows are forced
    uint64_t colmask = 0;
    for (uint64_t r : rows) colmask |= r;
    if (std::popcount(colmask) < nrows) return 0;

    int best = -1, best_pop = 1 << 30;
    for (int i = 0; i < nrows; ++i) {
        int p = std::popcount(rows[i]);
        if (p == 0) return 0;
        if (p < best_pop) {
            best_pop = p;
            best = i;
        }
    }
    // also consider a minimum-popcount column
    int best_col = -1, best_col_pop = 1 << 30;
    for (int j = 0; j < ncols; ++j) {
        if (!((colmask >> j) & 1)) continue;
        int p = 0;
        for (uint64_t r : rows) p += (r >> j) & 1;
        if (p == 0) continue;
        if (p < best_col_pop) {
            best_col_pop = p;
            best_col = j;
        }
    }

    auto key = normalized_key(rows, ncols);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    BigInt total = 0;
    if (best_pop <= best_col_pop) {
        uint64_t r = rows[best];
        std::vector<uint64_t> rest;
        rest.reserve(nrows - 1);
        for (int i = 0; i < nrows; ++i)
            if (i != best) rest.push_back(rows[i]);
        for (int j = 0; j < ncols; ++j) {
            if (!((r >> j) & 1)) continue;
            std::vector<uint64_t> child;
            child.reserve(rest.size());
            uint64_t low = (1ull << j) - 1;
            for (uint64_t x : rest) child.push_back((x & low) | ((x >> 1) & ~low));
            total += expand_rec(std::move(child), ncols - 1, memo);
        }
    } else {
        int j = best_col;
        uint64_t low = (1ull << j) - 1;
        for (int i = 0; i < nrows; ++i) {
            if (!((rows[i] >> j) & 1)) continue;
            std::vector<uint64_t> child;
            child.reserve(nrows - 1);
            for (int t = 0; t < nrows; ++t) {
                if (t == i) continue;
                uint64_t x = rows[t];
                child.push_back((x & low) | ((x >> 1) & ~low));
            }
            total += expand_rec(std::move(child), ncols - 1, memo);
        }
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

BigInt permanent_expand(const BitMatrix& m) {
    const int n = m.n();
    if (n > 64) throw std::invalid_argument("permanent_expand: order-too-large (n > 64)");
    if (n == 0) return 1;
    std::vector<uint64_t> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = m.row_word(i, 0);
    Memo memo;
    return expand_rec(std::move(rows), n, memo);
}

std::pair<BitMatrix, BitMatrix> line_split(const BitMatrix& m, LineRef line,
                                           const std::vector<int>& chosen) {
    const BitMatrix work = line.is_row ? m : m.transpose();
    const int i = line.index;
    if (i < 0 || i >= m.n()) throw std::invalid_argument("line_split: line index out of range");
    std::vector<int> support = work.row_support(i);
    std::vector<bool> in_support(m.n(), false);
    for (int j : support) in_support[j] = true;
    std::vector<bool> pick(m.n(), false);
    for (int j : chosen) {
        if (j < 0 || j >= m.n() || !in_support[j] || pick[j])
            throw std::invalid_argument("line_split: invalid-split (positions must be distinct support positions)");
        pick[j] = true;
    }
    if (chosen.empty() || chosen.size() >= support.size())
        throw std::invalid_argument("line_split: invalid-split (need a nonempty proper subset of the support)");

    BitMatrix b = work, c = work;
    for (int j : support) {
        if (pick[j])
            c.set(i, j, false);
        else
            b.set(i, j, false);
    }
    if (!line.is_row) {
        b = b.transpose();
        c = c.transpose();
    }
    return {b, c};
}

}  // namespace sparsekit
