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

#ifndef PPO_ZN_MATRIX_H
#define PPO_ZN_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ppo {

using ZnVector = std::vector<std::uint32_t>;

/// Dense row-major matrix over Z_N (N prime). Entries are kept reduced.
class ZnMatrix {
   public:
    ZnMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus);

    static ZnMatrix identity(std::size_t size, std::uint32_t modulus);
    /// Builds from nested rows; entries are reduced mod `modulus`.
    static ZnMatrix from_rows(const std::vector<std::vector<std::int64_t>> &rows, std::uint32_t modulus);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    std::uint32_t modulus() const noexcept {
        return n_;
    }

    std::uint32_t operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, std::int64_t value);

    ZnMatrix operator*(const ZnMatrix &other) const;
    ZnVector operator*(std::span<const std::uint32_t> v) const;
    ZnMatrix operator+(const ZnMatrix &other) const;
    ZnMatrix operator-(const ZnMatrix &other) const;
    ZnMatrix scaled(std::uint32_t factor) const;
    ZnMatrix transpose() const;
    /// Copy of rows [r0, r0 + nr) x cols [c0, c0 + nc).
    ZnMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    /// Throws ZeroInverse if singular.
    ZnMatrix inverse() const;
    std::uint32_t determinant() const;
    std::size_t rank() const;
    std::size_t nullity() const {
        return cols_ - rank();
    }
    /// Basis of {v : M v = 0}, one vector per free column.
    std::vector<ZnVector> nullspace() const;

    bool is_monomial() const;

    bool operator==(const ZnMatrix &other) const = default;

    std::string to_string() const;

   private:
    std::size_t rows_, cols_;
    std::uint32_t n_;
    std::vector<std::uint32_t> data_;
};

/// N^d with d the nullity of (M - I): the number of vectors M fixes.
std::uint64_t fixed_count_linear(const ZnMatrix &m);

/// Same as fixed_count_linear but returns the exponent d.
std::size_t fixed_dimension(const ZnMatrix &m);

std::uint64_t int_pow(std::uint64_t base, std::size_t exponent);

}  // namespace ppo

#endif
