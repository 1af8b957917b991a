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

#include "ppo/cmatrix.h"

#include <algorithm>
#include <cmath>

#include "ppo/error.h"

namespace ppo {

namespace {

void require_same(std::size_t a, std::size_t b) {
    if (a != b) {
        throw PpoError(ErrorCode::DimensionMismatch, "matrix sizes differ");
    }
}

}  // namespace

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n);
    for (std::size_t k = 0; k < n; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

CMatrix CMatrix::outer(const CVector &a, const CVector &b) {
    require_same(a.size(), b.size());
    CMatrix m(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < b.size(); j++) {
            m(i, j) = a[i] * std::conj(b[j]);
        }
    }
    return m;
}

CMatrix CMatrix::operator*(const CMatrix &other) const {
    require_same(n_, other.n_);
    CMatrix out(n_);
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t k = 0; k < n_; k++) {
            Complex a = data_[i * n_ + k];
            for (std::size_t j = 0; j < n_; j++) {
                out.data_[i * n_ + j] += a * other.data_[k * n_ + j];
            }
        }
    }
    return out;
}

CVector CMatrix::operator*(const CVector &v) const {
    require_same(n_, v.size());
    CVector out(n_);
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t k = 0; k < n_; k++) {
            out[i] += data_[i * n_ + k] * v[k];
        }
    }
    return out;
}

CMatrix CMatrix::operator+(const CMatrix &other) const {
    CMatrix out(*this);
    out += other;
    return out;
}

CMatrix CMatrix::operator-(const CMatrix &other) const {
    CMatrix out(*this);
    out -= other;
    return out;
}

CMatrix CMatrix::operator*(Complex factor) const {
    CMatrix out(*this);
    for (auto &x : out.data_) {
        x *= factor;
    }
    return out;
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
    require_same(n_, other.n_);
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
    require_same(n_, other.n_);
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(n_);
    for (std::size_t i = 0; i < n_; i++) {
        for (std::size_t j = 0; j < n_; j++) {
            out.data_[j * n_ + i] = std::conj(data_[i * n_ + j]);
        }
    }
    return out;
}

CMatrix CMatrix::conj() const {
    CMatrix out(*this);
    for (auto &x : out.data_) {
        x = std::conj(x);
    }
    return out;
}

Complex CMatrix::trace() const {
    Complex t = 0;
    for (std::size_t k = 0; k < n_; k++) {
        t += data_[k * n_ + k];
    }
    return t;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    require_same(a.size(), b.size());
    double m = 0;
    for (std::size_t k = 0; k < a.data().size(); k++) {
        m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    }
    return m;
}

double hermitian_defect(const CMatrix &a) {
    return max_abs_diff(a, a.adjoint());
}

double unitarity_defect(const CMatrix &u) {
    return max_abs_diff(u.adjoint() * u, CMatrix::identity(u.size()));
}

Complex inner(const CVector &a, const CVector &b) {
    require_same(a.size(), b.size());
    Complex s = 0;
    for (std::size_t k = 0; k < a.size(); k++) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

}  // namespace ppo
