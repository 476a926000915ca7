// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sparsekit {

// Square 0/1 matrix with bit-packed rows. Immutable value semantics in
// practice: algorithms copy, mutate their copy, and return.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n);

    static BitMatrix identity(int n);
    static BitMatrix from_rows(const std::vector<std::string>& rows);

    // Text format: first line "n", then n lines of n characters in {0,1}.
    static BitMatrix parse_text(const std::string& text);
    std::string to_text() const;

    int n() const { return n_; }
    int words_per_row() const { return words_; }

    bool get(int i, int j) const {
        return (bits_[static_cast<size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(int i, int j, bool v);

    const uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i) * words_; }
    uint64_t row_word(int i, int w) const { return bits_[static_cast<size_t>(i) * words_ + w]; }

    int row_popcount(int i) const;
    int col_popcount(int j) const;
    long long ones_count() const;
    bool row_is_zero(int i) const;
    bool col_is_zero(int j) const;
    std::vector<int> row_support(int i) const;

    BitMatrix transpose() const;
    // Delete the given rows and columns (sorted or not); keeps the rest in order.
    BitMatrix without(const std::vector<int>& rows, const std::vector<int>& cols) const;
    BitMatrix minor_at(int i, int j) const;
    BitMatrix permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const;

    bool operator==(const BitMatrix& o) const = default;

    // Row-major packed bit key (low bit first); usable as a hash/memo key.
    std::vector<uint64_t> packed_key() const { return bits_; }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace sparsekit
