// Copyright 2026 The zxrw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zxrw/errors.hpp"

namespace zxrw {

/// Fixed-size bit set packed into 64-bit words. Bits past `size()` in the
/// last word are kept zero.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    [[nodiscard]] std::size_t size() const { return n_; }

    void resize(std::size_t n) {
        n_ = n;
        w_.resize((n + 63) / 64, 0);
        mask_tail();
    }

    [[nodiscard]] bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }
    void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    [[nodiscard]] std::size_t count() const {
        std::size_t c = 0;
        for (uint64_t x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }

    [[nodiscard]] bool any() const {
        for (uint64_t x : w_)
            if (x != 0) return true;
        return false;
    }
    [[nodiscard]] bool none() const { return !any(); }

    Bitset& operator^=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    [[nodiscard]] Bitset operator&(const Bitset& o) const {
        Bitset r = *this;
        r &= o;
        return r;
    }
    [[nodiscard]] Bitset operator|(const Bitset& o) const {
        Bitset r = *this;
        r |= o;
        return r;
    }
    [[nodiscard]] Bitset operator^(const Bitset& o) const {
        Bitset r = *this;
        r ^= o;
        return r;
    }
    /// Set difference: bits of *this not in `o`.
    [[nodiscard]] Bitset minus(const Bitset& o) const {
        Bitset r = *this;
        for (std::size_t i = 0; i < r.w_.size(); ++i) r.w_[i] &= ~o.w_[i];
        return r;
    }

    [[nodiscard]] std::size_t count_and(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
        return c;
    }
    [[nodiscard]] bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool operator==(const Bitset& o) const = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t x = w_[wi];
            while (x) {
                f(wi * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    [[nodiscard]] std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

private:
    void mask_tail() {
        if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

/// Dense matrix over the two-element field, one contiguous run of 64-bit
/// words per row. 0xN and Nx0 matrices are valid values with rank 0.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), w_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    /// Build from rows of 0/1 ints, e.g. {{1,1,0},{1,1,1}}. Rows must have
    /// equal lengths.
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r == 0 ? 0 : rows.begin()->size();
        BitMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw ZxError(Err::DimensionMismatch, "ragged row list");
            std::size_t j = 0;
            for (int v : row) m.set(i, j++, v != 0);
            ++i;
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t words_per_row() const { return stride_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const {
        return (w_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        uint64_t& word = w_[r * stride_ + (c >> 6)];
        if (v)
            word |= uint64_t{1} << (c & 63);
        else
            word &= ~(uint64_t{1} << (c & 63));
    }
    void flip(std::size_t r, std::size_t c) { w_[r * stride_ + (c >> 6)] ^= uint64_t{1} << (c & 63); }

    void row_xor(std::size_t dst, std::size_t src) {
        uint64_t* d = &w_[dst * stride_];
        const uint64_t* s = &w_[src * stride_];
        for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        uint64_t* pa = &w_[a * stride_];
        uint64_t* pb = &w_[b * stride_];
        for (std::size_t i = 0; i < stride_; ++i) std::swap(pa[i], pb[i]);
    }

    [[nodiscard]] bool row_is_zero(std::size_t r) const {
        const uint64_t* p = &w_[r * stride_];
        for (std::size_t i = 0; i < stride_; ++i)
            if (p[i] != 0) return false;
        return true;
    }

    [[nodiscard]] bool is_zero() const {
        for (uint64_t x : w_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }

    [[nodiscard]] BitMatrix transpose() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t wi = 0; wi < stride_; ++wi) {
                uint64_t x = w_[r * stride_ + wi];
                while (x) {
                    std::size_t c = wi * 64 + static_cast<std::size_t>(std::countr_zero(x));
                    t.set(c, r, true);
                    x &= x - 1;
                }
            }
        return t;
    }

    [[nodiscard]] BitMatrix operator*(const BitMatrix& o) const {
        if (cols_ != o.rows_) throw ZxError(Err::DimensionMismatch, "multiply");
        BitMatrix out(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            uint64_t* dst = &out.w_[r * out.stride_];
            for (std::size_t wi = 0; wi < stride_; ++wi) {
                uint64_t x = w_[r * stride_ + wi];
                while (x) {
                    std::size_t k = wi * 64 + static_cast<std::size_t>(std::countr_zero(x));
                    const uint64_t* src = &o.w_[k * o.stride_];
                    for (std::size_t j = 0; j < o.stride_; ++j) dst[j] ^= src[j];
                    x &= x - 1;
                }
            }
        }
        return out;
    }

    [[nodiscard]] BitMatrix operator+(const BitMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw ZxError(Err::DimensionMismatch, "add");
        BitMatrix out = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) out.w_[i] ^= o.w_[i];
        return out;
    }

    [[nodiscard]] BitMatrix select_rows(const std::vector<std::size_t>& idx) const {
        BitMatrix out(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            std::copy_n(&w_[idx[i] * stride_], stride_, &out.w_[i * stride_]);
        return out;
    }

    [[nodiscard]] BitMatrix select_cols(const std::vector<std::size_t>& idx) const {
        BitMatrix out(rows_, idx.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < idx.size(); ++j)
                if (get(r, idx[j])) out.set(r, j, true);
        return out;
    }

    [[nodiscard]] static BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
        if (a.cols_ != b.cols_) throw ZxError(Err::DimensionMismatch, "vstack");
        BitMatrix out(a.rows_ + b.rows_, a.cols_);
        std::copy(a.w_.begin(), a.w_.end(), out.w_.begin());
        std::copy(b.w_.begin(), b.w_.end(), out.w_.begin() + static_cast<std::ptrdiff_t>(a.rows_ * a.stride_));
        return out;
    }

    [[nodiscard]] static BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
        if (a.rows_ != b.rows_) throw ZxError(Err::DimensionMismatch, "hstack");
        BitMatrix out(a.rows_, a.cols_ + b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t c = 0; c < a.cols_; ++c)
                if (a.get(r, c)) out.set(r, c, true);
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (b.get(r, c)) out.set(r, a.cols_ + c, true);
        }
        return out;
    }

    /// In-place reduced row-echelon form. Pivoting is deterministic: leftmost
    /// column first, lowest row index first. Returns the pivot columns in
    /// increasing order.
    std::vector<std::size_t> rref_in_place() {
        std::vector<std::size_t> pivots;
        std::size_t cur = 0;
        for (std::size_t col = 0; col < cols_ && cur < rows_; ++col) {
            std::size_t pr = rows_;
            for (std::size_t r = cur; r < rows_; ++r)
                if (get(r, col)) {
                    pr = r;
                    break;
                }
            if (pr == rows_) continue;
            swap_rows(cur, pr);
            for (std::size_t r = 0; r < rows_; ++r)
                if (r != cur && get(r, col)) row_xor(r, cur);
            pivots.push_back(col);
            ++cur;
        }
        return pivots;
    }

    [[nodiscard]] std::pair<BitMatrix, std::vector<std::size_t>> rref() const {
        BitMatrix r = *this;
        auto pivots = r.rref_in_place();
        return {std::move(r), std::move(pivots)};
    }

    [[nodiscard]] std::size_t rank() const {
        BitMatrix r = *this;
        std::size_t rk = 0;
        std::size_t cur = 0;
        for (std::size_t col = 0; col < cols_ && cur < rows_; ++col) {
            std::size_t pr = rows_;
            for (std::size_t i = cur; i < rows_; ++i)
                if (r.get(i, col)) {
                    pr = i;
                    break;
                }
            if (pr == rows_) continue;
            r.swap_rows(cur, pr);
            for (std::size_t i = pr + 1; i < rows_; ++i)
                if (r.get(i, col)) r.row_xor(i, cur);
            ++cur;
            ++rk;
        }
        return rk;
    }

    [[nodiscard]] std::vector<std::size_t> pivot_cols() const { return rref().second; }

    /// Rank factorization M = U * W with U of shape rows x r (the pivot
    /// columns of M) and W of shape r x cols (the nonzero rows of the RREF).
    [[nodiscard]] std::pair<BitMatrix, BitMatrix> rank_factorize() const {
        auto [r, pivots] = rref();
        std::size_t rk = pivots.size();
        BitMatrix u = select_cols(pivots);
        BitMatrix w(rk, cols_);
        for (std::size_t i = 0; i < rk; ++i)
            for (std::size_t c = 0; c < cols_; ++c)
                if (r.get(i, c)) w.set(i, c, true);
        return {std::move(u), std::move(w)};
    }

    /// For U with full column rank r, returns V (r x rows) with V*U = I_r.
    [[nodiscard]] BitMatrix left_inverse() const {
        // Row-reduce [U | I] and read the transform off the right half.
        BitMatrix aug = hstack(*this, identity(rows_));
        std::vector<std::size_t> pivots;
        std::size_t cur = 0;
        for (std::size_t col = 0; col < cols_ && cur < rows_; ++col) {
            std::size_t pr = rows_;
            for (std::size_t r = cur; r < rows_; ++r)
                if (aug.get(r, col)) {
                    pr = r;
                    break;
                }
            if (pr == rows_) continue;
            aug.swap_rows(cur, pr);
            for (std::size_t r = 0; r < rows_; ++r)
                if (r != cur && aug.get(r, col)) aug.row_xor(r, cur);
            pivots.push_back(col);
            ++cur;
        }
        if (pivots.size() != cols_)
            throw ZxError(Err::FullColumnRankRequired, "left_inverse of rank-deficient matrix");
        BitMatrix v(cols_, rows_);
        for (std::size_t i = 0; i < cols_; ++i)
            for (std::size_t c = 0; c < rows_; ++c)
                if (aug.get(i, cols_ + c)) v.set(i, c, true);
        return v;
    }

    /// Multiply by a column vector: returns M * x.
    [[nodiscard]] Bitset mul_vec(const Bitset& x) const {
        if (x.size() != cols_) throw ZxError(Err::DimensionMismatch, "mul_vec");
        Bitset out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            std::size_t par = 0;
            x.for_each([&](std::size_t c) { par ^= static_cast<std::size_t>(get(r, c)); });
            if (par) out.set(r);
        }
        return out;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) s += get(r, c) ? '1' : '0';
            s += '\n';
        }
        return s;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<uint64_t> w_;
};

/// Row-reduced linear system over the two-element field, kept together with
/// the row transform so that many right-hand sides can be solved against one
/// elimination. T * A = R with R in reduced row-echelon form.
struct ReducedSystem {
    BitMatrix r;                       // RREF of A
    BitMatrix t;                       // row transform, rows x rows
    std::vector<std::size_t> pivots;   // pivot columns of A

    static ReducedSystem from(const BitMatrix& a) {
        BitMatrix aug = BitMatrix::hstack(a, BitMatrix::identity(a.rows()));
        std::size_t rows = a.rows(), cols = a.cols();
        std::vector<std::size_t> pivots;
        std::size_t cur = 0;
        for (std::size_t col = 0; col < cols && cur < rows; ++col) {
            std::size_t pr = rows;
            for (std::size_t r2 = cur; r2 < rows; ++r2)
                if (aug.get(r2, col)) {
                    pr = r2;
                    break;
                }
            if (pr == rows) continue;
            aug.swap_rows(cur, pr);
            for (std::size_t r2 = 0; r2 < rows; ++r2)
                if (r2 != cur && aug.get(r2, col)) aug.row_xor(r2, cur);
            pivots.push_back(col);
            ++cur;
        }
        ReducedSystem sys;
        sys.pivots = std::move(pivots);
        sys.r = BitMatrix(rows, cols);
        sys.t = BitMatrix(rows, rows);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t c = 0; c < cols; ++c)
                if (aug.get(i, c)) sys.r.set(i, c, true);
            for (std::size_t c = 0; c < rows; ++c)
                if (aug.get(i, cols + c)) sys.t.set(i, c, true);
        }
        return sys;
    }

    /// Solves A x = b; returns one solution (free variables zero) or nullopt.
    [[nodiscard]] std::optional<Bitset> solve(const Bitset& b) const {
        Bitset y = t.mul_vec(b);
        for (std::size_t i = pivots.size(); i < r.rows(); ++i)
            if (y.test(i)) return std::nullopt;
        Bitset x(r.cols());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (y.test(i)) x.set(pivots[i]);
        return x;
    }
};

}  // namespace zxrw
