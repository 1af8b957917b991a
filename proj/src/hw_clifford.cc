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

#include "ppo/hw_clifford.h"

#include <cmath>
#include <numbers>
#include <string>

#include "ppo/error.h"

namespace ppo {

std::vector<PhaseSpacePoint> Line::points(std::uint32_t n) const {
    std::vector<PhaseSpacePoint> out;
    out.reserve(n);
    for (std::uint32_t s = 0; s < n; s++) {
        if (m == n) {
            out.push_back({s, offset % n});
        } else {
            out.push_back({static_cast<std::uint32_t>((static_cast<std::uint64_t>(m) * s + offset) % n), s});
        }
    }
    return out;
}

HilbertSpace::HilbertSpace(const Field &field) : n_(field.modulus()) {
    const double pi = std::numbers::pi;
    for (std::uint32_t k = 0; k < n_; k++) {
        omega_.push_back(std::polar(1.0, 2 * pi * k / n_));
    }
    // tau^k = exp(i pi k (N + 1) / N), periodic in k with period N.
    for (std::uint32_t k = 0; k < n_; k++) {
        tau_.push_back(std::polar(1.0, pi * static_cast<double>(k * (n_ + 1) % (2 * n_)) / n_));
    }
    projectors_.reserve(static_cast<std::size_t>(n_ + 1) * n_);
    const double inv_n = 1.0 / n_;
    for (std::uint32_t m = 0; m <= n_; m++) {
        for (std::uint32_t r = 0; r < n_; r++) {
            CMatrix p(n_);
            for (std::uint32_t j = 0; j < n_; j++) {
                CMatrix d = m == n_ ? displacement(j, 0) : displacement(static_cast<std::int64_t>(m) * j, j);
                p += d * (omega_pow(-static_cast<std::int64_t>(r) * j) * inv_n);
            }
            projectors_.push_back(std::move(p));
        }
    }
}

Complex HilbertSpace::omega_pow(std::int64_t k) const {
    return omega_[mod_reduce(k, n_)];
}

Complex HilbertSpace::tau_pow(std::int64_t k) const {
    return tau_[mod_reduce(k, n_)];
}

CMatrix HilbertSpace::displacement(std::int64_t q, std::int64_t p) const {
    const std::uint32_t qq = mod_reduce(q, n_), pp = mod_reduce(p, n_);
    const Complex prefactor = tau_pow(static_cast<std::int64_t>(qq) * pp);
    CMatrix d(n_);
    for (std::uint32_t k = 0; k < n_; k++) {
        d((k + qq) % n_, k) = prefactor * omega_pow(static_cast<std::int64_t>(k) * pp);
    }
    return d;
}

Complex HilbertSpace::weyl_product_phase(std::int64_t q, std::int64_t p, std::int64_t q2, std::int64_t p2) const {
    return tau_pow(q2 * p - q * p2);
}

CMatrix HilbertSpace::clifford_unitary(const GroupElem &f) const {
    if (f.det_sign() != 1 || f.modulus() != n_) {
        throw PpoError(ErrorCode::BadDeterminant, "U(F) needs det F = 1, got " + f.to_string());
    }
    const std::int64_t a = f.alpha(), b = f.beta(), c = f.gamma(), d = f.delta();
    CMatrix u(n_);
    if (b != 0) {
        const std::int64_t b_inv = mod_inverse(static_cast<std::uint32_t>(b), n_);
        const double norm = 1.0 / std::sqrt(static_cast<double>(n_));
        for (std::int64_t j = 0; j < n_; j++) {
            for (std::int64_t k = 0; k < n_; k++) {
                std::int64_t e = mod_reduce(a * k * k - 2 * j * k + d * j * j, n_);
                u(j, k) = tau_pow(b_inv * e) * norm;
            }
        }
    } else {
        for (std::int64_t j = 0; j < n_; j++) {
            u(mod_reduce(a * j, n_), j) = tau_pow(mod_reduce(a * c, n_) * j * j);
        }
    }
    return u;
}

CMatrix HilbertSpace::extended_clifford_image(const GroupElem &g, const CMatrix &a) const {
    if (g.det_sign() == 1) {
        CMatrix u = clifford_unitary(g);
        return u * a * u.adjoint();
    }
    CMatrix u = clifford_unitary(g * GroupElem::reflection(n_));
    return u * a.conj() * u.adjoint();
}

CVector HilbertSpace::mub_vector(const MubLabel &label) const {
    CVector v(n_);
    v[label.r % n_] = 1.0;
    if (label.m == n_) {
        return clifford_unitary(GroupElem::quarter_turn(n_)) * v;
    }
    const CMatrix shear = clifford_unitary(GroupElem::shear(n_));
    for (std::uint32_t k = 0; k < label.m; k++) {
        v = shear * v;
    }
    return v;
}

const CMatrix &HilbertSpace::mub_projector(const MubLabel &label) const {
    if (label.m > n_) {
        throw PpoError(ErrorCode::DimensionMismatch, "basis index " + std::to_string(label.m) + " out of range");
    }
    return projectors_[static_cast<std::size_t>(label.m) * n_ + label.r % n_];
}

CMatrix HilbertSpace::phase_point_operator(std::span<const std::uint32_t> rvec) const {
    if (rvec.size() != n_ + 1) {
        throw PpoError(ErrorCode::DimensionMismatch, "r-vector needs N + 1 entries");
    }
    CMatrix a = CMatrix::identity(n_) * Complex(-1.0);
    for (std::uint32_t m = 0; m <= n_; m++) {
        a += mub_projector({m, rvec[m]});
    }
    return a;
}

AffinePlane HilbertSpace::affine_plane_operators(std::span<const std::uint32_t> rvec) const {
    const CMatrix a = phase_point_operator(rvec);
    AffinePlane plane;
    for (std::uint32_t q = 0; q < n_; q++) {
        for (std::uint32_t p = 0; p < n_; p++) {
            CMatrix d = displacement(q, p);
            plane.emplace(PhaseSpacePoint{q, p}, d * a * d.adjoint());
        }
    }
    return plane;
}

const CMatrix &HilbertSpace::net_projector(std::span<const std::uint32_t> rvec, const Line &line) const {
    if (line.m == n_) {
        return mub_projector({n_, mod_reduce(static_cast<std::int64_t>(rvec[n_]) - line.offset, n_)});
    }
    return mub_projector({line.m, (rvec[line.m] + line.offset) % n_});
}

CMatrix line_projector(const Line &line, const AffinePlane &plane, std::uint32_t n) {
    CMatrix sum(n);
    for (const auto &pt : line.points(n)) {
        auto it = plane.find(pt);
        if (it == plane.end()) {
            throw PpoError(ErrorCode::IncompletePlane,
                           "missing point (" + std::to_string(pt.q) + "," + std::to_string(pt.p) + ")");
        }
        sum += it->second;
    }
    return sum * Complex(1.0 / n);
}

std::map<PhaseSpacePoint, double> wigner_distribution(const CMatrix &rho, const AffinePlane &plane) {
    const std::size_t n = rho.size();
    if (hermitian_defect(rho) > 1e-10 || std::abs(rho.trace() - 1.0) > 1e-10) {
        throw PpoError(ErrorCode::NotAState, "rho must be Hermitian with unit trace");
    }
    if (plane.size() != n * n) {
        throw PpoError(ErrorCode::IncompletePlane, "plane has " + std::to_string(plane.size()) + " points");
    }
    std::map<PhaseSpacePoint, double> w;
    for (const auto &[pt, a] : plane) {
        w[pt] = (rho * a).trace().real();
    }
    return w;
}

}  // namespace ppo
