// Copyright 2026 The ppo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ppo/zn_matrix.h"

#include <sstream>
#include <utility>

#include "ppo/error.h"
#include "ppo/finite_field.h"

namespace ppo {

ZnMatrix::ZnMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus)
    : rows_(rows), cols_(cols), n_(modulus), data_(rows * cols, 0) {
}

ZnMatrix ZnMatrix::identity(std::size_t size, std::uint32_t modulus) {
    ZnMatrix m(size, size, modulus);
    for (std::size_t k = 0; k < size; k++) {
        m.data_[k * size + k] = 1;
    }
    return m;
}

ZnMatrix ZnMatrix::from_rows(const std::vector<std::vector<std::int64_t>> &rows, std::uint32_t modulus) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    ZnMatrix m(rows.size(), nc, modulus);
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != nc) {
            throw PpoError(ErrorCode::DimensionMismatch, "ragged rows");
        }
        for (std::size_t c = 0; c < nc; c++) {
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

void ZnMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
    data_[r * cols_ + c] = mod_reduce(value, n_);
}

namespace {

void require(bool ok, const char *what) {
    if (!ok) {
        throw PpoError(ErrorCode::DimensionMismatch, what);
    }
}

}  // namespace

ZnMatrix ZnMatrix::operator*(const ZnMatrix &other) const {
    require(cols_ == other.rows_ && n_ == other.n_, "matrix product shape mismatch");
    ZnMatrix out(rows_, other.cols_, n_);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t k = 0; k < cols_; k++) {
            std::uint64_t a = data_[i * cols_ + k];
            if (a == 0) {
                continue;
            }
            for (std::size_t j = 0; j < other.cols_; j++) {
                std::uint32_t &dst = out.data_[i * other.cols_ + j];
                dst = static_cast<std::uint32_t>((dst + a * other.data_[k * other.cols_ + j]) % n_);
            }
        }
    }
    return out;
}

ZnVector ZnMatrix::operator*(std::span<const std::uint32_t> v) const {
    require(cols_ == v.size(), "matrix-vector shape mismatch");
    ZnVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; i++) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < cols_; k++) {
            acc += static_cast<std::uint64_t>(data_[i * cols_ + k]) * v[k];
        }
        out[i] = static_cast<std::uint32_t>(acc % n_);
    }
    return out;
}

ZnMatrix ZnMatrix::operator+(const ZnMatrix &other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_ && n_ == other.n_, "matrix sum shape mismatch");
    ZnMatrix out(*this);
    for (std::size_t k = 0; k < data_.size(); k++) {
        out.data_[k] = (data_[k] + other.data_[k]) % n_;
    }
    return out;
}

ZnMatrix ZnMatrix::operator-(const ZnMatrix &other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_ && n_ == other.n_, "matrix difference shape mismatch");
    ZnMatrix out(*this);
    for (std::size_t k = 0; k < data_.size(); k++) {
        out.data_[k] = (data_[k] + n_ - other.data_[k]) % n_;
    }
    return out;
}

ZnMatrix ZnMatrix::scaled(std::uint32_t factor) const {
    ZnMatrix out(*this);
    for (auto &x : out.data_) {
        x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * factor % n_);
    }
    return out;
}

ZnMatrix ZnMatrix::transpose() const {
    ZnMatrix out(cols_, rows_, n_);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t j = 0; j < cols_; j++) {
            out.data_[j * rows_ + i] = data_[i * cols_ + j];
        }
    }
    return out;
}

ZnMatrix ZnMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
    ZnMatrix out(nr, nc, n_);
    for (std::size_t i = 0; i < nr; i++) {
        for (std::size_t j = 0; j < nc; j++) {
            out.data_[i * nc + j] = data_[(r0 + i) * cols_ + c0 + j];
        }
    }
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::uint32_t> &a, std::size_t rows, std::size_t cols,
                                    std::uint32_t n, std::size_t pivot_cols_limit, int *swap_sign = nullptr,
                                    std::uint64_t *pivot_product = nullptr) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < pivot_cols_limit && rank < rows; c++) {
        std::size_t p = rank;
        while (p < rows && a[p * cols + c] == 0) {
            p++;
        }
        if (p == rows) {
            continue;
        }
        if (p != rank) {
            for (std::size_t j = 0; j < cols; j++) {
                std::swap(a[p * cols + j], a[rank * cols + j]);
            }
            if (swap_sign) {
                *swap_sign = -*swap_sign;
            }
        }
        std::uint32_t piv = a[rank * cols + c];
        if (pivot_product) {
            *pivot_product = *pivot_product * piv % n;
        }
        std::uint64_t inv = mod_inverse(piv, n);
        for (std::size_t j = 0; j < cols; j++) {
            a[rank * cols + j] = static_cast<std::uint32_t>(a[rank * cols + j] * inv % n);
        }
        for (std::size_t r = 0; r < rows; r++) {
            if (r == rank || a[r * cols + c] == 0) {
                continue;
            }
            std::uint64_t f = a[r * cols + c];
            for (std::size_t j = 0; j < cols; j++) {
                a[r * cols + j] = static_cast<std::uint32_t>((a[r * cols + j] + (n - f) * a[rank * cols + j]) % n);
            }
        }
        pivots.push_back(c);
        rank++;
    }
    return pivots;
}

}  // namespace

ZnMatrix ZnMatrix::inverse() const {
    require(rows_ == cols_, "inverse of non-square matrix");
    const std::size_t k = rows_;
    std::vector<std::uint32_t> aug(k * 2 * k, 0);
    for (std::size_t i = 0; i < k; i++) {
        for (std::size_t j = 0; j < k; j++) {
            aug[i * 2 * k + j] = data_[i * k + j];
        }
        aug[i * 2 * k + k + i] = 1;
    }
    auto pivots = row_reduce(aug, k, 2 * k, n_, k);
    if (pivots.size() != k) {
        throw PpoError(ErrorCode::ZeroInverse, "matrix is singular");
    }
    ZnMatrix out(k, k, n_);
    for (std::size_t i = 0; i < k; i++) {
        for (std::size_t j = 0; j < k; j++) {
            out.data_[i * k + j] = aug[i * 2 * k + k + j];
        }
    }
    return out;
}

std::uint32_t ZnMatrix::determinant() const {
    require(rows_ == cols_, "determinant of non-square matrix");
    std::vector<std::uint32_t> a = data_;
    int sign = 1;
    std::uint64_t prod = 1 % n_;
    auto pivots = row_reduce(a, rows_, cols_, n_, cols_, &sign, &prod);
    if (pivots.size() != rows_) {
        return 0;
    }
    return sign == 1 ? static_cast<std::uint32_t>(prod) : static_cast<std::uint32_t>((n_ - prod) % n_);
}

std::size_t ZnMatrix::rank() const {
    std::vector<std::uint32_t> a = data_;
    return row_reduce(a, rows_, cols_, n_, cols_).size();
}

std::vector<ZnVector> ZnMatrix::nullspace() const {
    std::vector<std::uint32_t> a = data_;
    auto pivots = row_reduce(a, rows_, cols_, n_, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<ZnVector> basis;
    for (std::size_t free = 0; free < cols_; free++) {
        if (is_pivot[free]) {
            continue;
        }
        ZnVector v(cols_, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); r++) {
            v[pivots[r]] = (n_ - a[r * cols_ + free]) % n_;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool ZnMatrix::is_monomial() const {
    if (rows_ != cols_) {
        return false;
    }
    std::vector<int> col_count(cols_, 0);
    for (std::size_t i = 0; i < rows_; i++) {
        int row_count = 0;
        for (std::size_t j = 0; j < cols_; j++) {
            if (data_[i * cols_ + j] != 0) {
                row_count++;
                col_count[j]++;
            }
        }
        if (row_count != 1) {
            return false;
        }
    }
    for (int c : col_count) {
        if (c != 1) {
            return false;
        }
    }
    return true;
}

std::string ZnMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; i++) {
        out << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; j++) {
            out << (j ? " " : "") << data_[i * cols_ + j];
        }
        out << (i + 1 == rows_ ? "]" : "\n");
    }
    return out.str();
}

std::uint64_t int_pow(std::uint64_t base, std::size_t exponent) {
    std::uint64_t r = 1;
    for (std::size_t k = 0; k < exponent; k++) {
        r *= base;
    }
    return r;
}

std::size_t fixed_dimension(const ZnMatrix &m) {
    return (m - ZnMatrix::identity(m.rows(), m.modulus())).nullity();
}

std::uint64_t fixed_count_linear(const ZnMatrix &m) {
    return int_pow(m.modulus(), fixed_dimension(m));
}

}  // namespace ppo
