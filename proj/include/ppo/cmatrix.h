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

#ifndef PPO_CMATRIX_H
#define PPO_CMATRIX_H

#include <complex>
#include <cstddef>
#include <vector>

namespace ppo {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense square complex matrix, row-major.
class CMatrix {
   public:
    CMatrix() : n_(0) {
    }
    explicit CMatrix(std::size_t n) : n_(n), data_(n * n) {
    }

    static CMatrix identity(std::size_t n);
    /// |a><b|.
    static CMatrix outer(const CVector &a, const CVector &b);

    std::size_t size() const noexcept {
        return n_;
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * n_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * n_ + c];
    }
    const std::vector<Complex> &data() const noexcept {
        return data_;
    }

    CMatrix operator*(const CMatrix &other) const;
    CVector operator*(const CVector &v) const;
    CMatrix operator+(const CMatrix &other) const;
    CMatrix operator-(const CMatrix &other) const;
    CMatrix operator*(Complex factor) const;
    CMatrix &operator+=(const CMatrix &other);
    CMatrix &operator-=(const CMatrix &other);

    CMatrix adjoint() const;
    /// Entrywise complex conjugate.
    CMatrix conj() const;
    Complex trace() const;

   private:
    std::size_t n_;
    std::vector<Complex> data_;
};

/// Largest |a_ij - b_ij|.
double max_abs_diff(const CMatrix &a, const CMatrix &b);
/// Largest |a_ij - conj(a_ji)|.
double hermitian_defect(const CMatrix &a);
/// Largest entry of |U^dagger U - I|.
double unitarity_defect(const CMatrix &u);

Complex inner(const CVector &a, const CVector &b);

}  // namespace ppo

#endif
