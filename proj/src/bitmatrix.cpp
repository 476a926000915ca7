// SPDX-License-Identifier: Apache-2.0
#include "sparsekit/bitmatrix.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace sparsekit {

BitMatrix::BitMatrix(int n) : n_(n), words_(n == 0 ? 1 : (n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("BitMatrix: negative order");
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    BitMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n_; ++i) {
        if (static_cast<int>(rows[i].size()) != m.n_)
            throw std::invalid_argument("BitMatrix: ragged row");
        for (int j = 0; j < m.n_; ++j) {
            char ch = rows[i][j];
            if (ch != '0' && ch != '1') throw std::invalid_argument("BitMatrix: entry not 0/1");
            if (ch == '1') m.set(i, j, true);
        }
    }
    return m;
}

BitMatrix BitMatrix::parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) throw std::invalid_argument("biadjacency: empty input (line 1)");
    ++lineno;
    int n = 0;
    try {
        size_t pos;
        n = std::stoi(line, &pos);
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos != line.size()) throw std::invalid_argument("trailing");
    } catch (...) {
        throw std::invalid_argument("biadjacency: line 1 must be the order n");
    }
    if (n < 0) throw std::invalid_argument("biadjacency: negative order (line 1)");
    std::vector<std::string> rows;
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw std::invalid_argument("biadjacency: missing row at line " + std::to_string(lineno + 1));
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (static_cast<int>(line.size()) != n)
            throw std::invalid_argument("biadjacency: line " + std::to_string(lineno) + " has wrong length");
        for (int j = 0; j < n; ++j)
            if (line[j] != '0' && line[j] != '1')
                throw std::invalid_argument("biadjacency: bad character at line " +
                                            std::to_string(lineno) + ", column " + std::to_string(j + 1));
        rows.push_back(line);
    }
    return from_rows(rows);
}

std::string BitMatrix::to_text() const {
    std::string out = std::to_string(n_) + "\n";
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) out += get(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

void BitMatrix::set(int i, int j, bool v) {
    uint64_t& w = bits_[static_cast<size_t>(i) * words_ + (j >> 6)];
    uint64_t mask = 1ull << (j & 63);
    if (v)
        w |= mask;
    else
        w &= ~mask;
}

int BitMatrix::row_popcount(int i) const {
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(row_word(i, w));
    return c;
}

int BitMatrix::col_popcount(int j) const {
    int c = 0;
    for (int i = 0; i < n_; ++i) c += get(i, j);
    return c;
}

long long BitMatrix::ones_count() const {
    long long c = 0;
    for (int i = 0; i < n_; ++i) c += row_popcount(i);
    return c;
}

bool BitMatrix::row_is_zero(int i) const { return row_popcount(i) == 0; }
bool BitMatrix::col_is_zero(int j) const { return col_popcount(j) == 0; }

std::vector<int> BitMatrix::row_support(int i) const {
    std::vector<int> s;
    for (int j = 0; j < n_; ++j)
        if (get(i, j)) s.push_back(j);
    return s;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

BitMatrix BitMatrix::without(const std::vector<int>& rows, const std::vector<int>& cols) const {
    std::vector<bool> drop_row(n_, false), drop_col(n_, false);
    for (int r : rows) drop_row.at(r) = true;
    for (int c : cols) drop_col.at(c) = true;
    std::vector<int> keep_rows, keep_cols;
    for (int i = 0; i < n_; ++i)
        if (!drop_row[i]) keep_rows.push_back(i);
    for (int j = 0; j < n_; ++j)
        if (!drop_col[j]) keep_cols.push_back(j);
    if (keep_rows.size() != keep_cols.size())
        throw std::invalid_argument("BitMatrix::without: result not square");
    BitMatrix out(static_cast<int>(keep_rows.size()));
    for (size_t i = 0; i < keep_rows.size(); ++i)
        for (size_t j = 0; j < keep_cols.size(); ++j)
            if (get(keep_rows[i], keep_cols[j])) out.set(static_cast<int>(i), static_cast<int>(j), true);
    return out;
}

BitMatrix BitMatrix::minor_at(int i, int j) const { return without({i}, {j}); }

BitMatrix BitMatrix::permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const {
    // entry (i, j) of the result is entry (row_perm[i], col_perm[j]) of *this
    BitMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (get(row_perm[i], col_perm[j])) out.set(i, j, true);
    return out;
}

}  // namespace sparsekit
