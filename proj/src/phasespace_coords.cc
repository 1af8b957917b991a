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

#include "ppo/phasespace_coords.h"

#include "ppo/error.h"

namespace ppo {

CoordinateSystem::CoordinateSystem(const Field &field)
    : field_(field),
      n_(field.modulus()),
      s_(n_ + 1, n_ + 1, n_),
      s_inv_(n_ + 1, n_ + 1, n_),
      conj_(n_ + 1, n_ + 1, n_),
      omega_(n_ + 1, n_ + 1, n_),
      plane_count_(int_pow(n_, n_ - 1)) {
    const std::uint32_t n = n_;
    for (std::uint32_t k = 0; k <= n; k++) {
        RVector e(n + 1, 0);
        if (k == 0) {
            for (std::uint32_t m = 0; m < n; m++) {
                e[m] = 1;
            }
        } else if (k == 1) {
            for (std::uint32_t m = 0; m < n; m++) {
                e[m] = m;
            }
            e[n] = 1;
        } else if (k < n) {
            for (std::uint32_t m = 1; m < n; m++) {
                e[m] = field.pow(m, k);
            }
        } else {
            e[n] = 1;
        }
        for (std::uint32_t row = 0; row <= n; row++) {
            s_.set(row, k, e[row]);
        }
        e_basis_.push_back(std::move(e));
    }
    s_inv_ = s_.inverse();

    for (std::uint32_t m = 0; m < n; m++) {
        conj_.set((n - m) % n, m, 1);
    }
    conj_.set(n, n, -1);

    for (std::uint32_t i = 0; i < n; i++) {
        for (std::uint32_t j = 0; j < n; j++) {
            if (i != j) {
                omega_.set(i, j, field.inv(field.sub(j, i)));
            }
        }
        omega_.set(i, n, 1);
        omega_.set(n, i, -1);
    }
}

AlphaVector CoordinateSystem::r_to_alpha(std::span<const std::uint32_t> r) const {
    return s_inv_ * r;
}

RVector CoordinateSystem::alpha_to_r(std::span<const std::uint32_t> alpha) const {
    return s_ * alpha;
}

RVector CoordinateSystem::translate(std::span<const std::uint32_t> r, std::int64_t q0, std::int64_t p0) const {
    if (r.size() != n_ + 1) {
        throw PpoError(ErrorCode::DimensionMismatch, "r-vector needs N + 1 entries");
    }
    const std::uint32_t q = field_.reduce(q0), p = field_.reduce(p0);
    RVector out(r.begin(), r.end());
    for (std::uint32_t m = 0; m <= n_; m++) {
        std::uint32_t shift = field_.sub(field_.mul(q, e_basis_[0][m]), field_.mul(p, e_basis_[1][m]));
        out[m] = field_.add(out[m], shift);
    }
    return out;
}

ZnMatrix CoordinateSystem::sl_action(const GroupElem &f) const {
    if (f.det_sign() != 1 || f.modulus() != n_) {
        throw PpoError(ErrorCode::BadDeterminant, "sl_action needs det F = 1, got " + f.to_string());
    }
    const Field &fd = field_;
    const std::uint32_t a = f.alpha(), b = f.beta(), c = f.gamma(), d = f.delta();
    ZnMatrix out(n_ + 1, n_ + 1, n_);
    // Basis m goes to basis image, with r scaled by `scale`.
    for (std::uint32_t m = 0; m <= n_; m++) {
        std::uint32_t image, scale;
        if (m < n_) {
            std::uint32_t den = fd.add(fd.mul(c, m), d);
            if (den != 0) {
                image = fd.div(fd.add(fd.mul(a, m), b), den);
                scale = fd.inv(den);
            } else {
                image = n_;
                scale = fd.neg(c);
            }
        } else if (c != 0) {
            image = fd.div(a, c);
            scale = fd.inv(c);
        } else {
            image = n_;
            scale = d;
        }
        out.set(image, m, scale);
    }
    return out;
}

ZnMatrix CoordinateSystem::esl_action(const GroupElem &g) const {
    if (g.det_sign() == 1) {
        return sl_action(g);
    }
    return sl_action(g * GroupElem::reflection(n_)) * conj_;
}

ZnMatrix CoordinateSystem::plane_action_of(const ZnMatrix &r_action) const {
    return (s_inv_ * r_action * s_).block(2, 2, n_ - 1, n_ - 1);
}

ZnMatrix CoordinateSystem::symplectic_form_e() const {
    return s_.transpose() * omega_ * s_;
}

ZnMatrix CoordinateSystem::plane_symplectic_form() const {
    return symplectic_form_e().block(2, 2, n_ - 1, n_ - 1);
}

std::vector<PlaneLabel> CoordinateSystem::canonical_symplectic_basis() const {
    const ZnMatrix form = symplectic_form_e();
    const std::uint32_t n = n_;
    auto unit = [&](std::uint32_t k, std::uint32_t coeff) {
        PlaneLabel v(n - 1, 0);
        v[k - 2] = coeff;
        return v;
    };
    std::vector<PlaneLabel> qs, ps;
    for (std::uint32_t k = 2; k < n; k += 2) {
        std::uint32_t partner = k + 1 == n ? n : n - k;
        qs.push_back(unit(k, 1));
        ps.push_back(unit(partner, field_.inv(form(k, partner))));
    }
    qs.insert(qs.end(), ps.begin(), ps.end());
    return qs;
}

PlaneLabel CoordinateSystem::plane_label(std::span<const std::uint32_t> r) const {
    AlphaVector alpha = r_to_alpha(r);
    return PlaneLabel(alpha.begin() + 2, alpha.end());
}

RVector CoordinateSystem::plane_representative(std::span<const std::uint32_t> label) const {
    if (label.size() != n_ - 1) {
        throw PpoError(ErrorCode::DimensionMismatch, "plane label needs N - 1 entries");
    }
    AlphaVector alpha(n_ + 1, 0);
    std::copy(label.begin(), label.end(), alpha.begin() + 2);
    return alpha_to_r(alpha);
}

std::uint64_t CoordinateSystem::encode_plane(std::span<const std::uint32_t> label) const {
    std::uint64_t code = 0;
    for (auto x : label) {
        code = code * n_ + x;
    }
    return code;
}

PlaneLabel CoordinateSystem::decode_plane(std::uint64_t code) const {
    PlaneLabel label(n_ - 1);
    for (std::size_t k = n_ - 1; k-- > 0;) {
        label[k] = static_cast<std::uint32_t>(code % n_);
        code /= n_;
    }
    return label;
}

}  // namespace ppo
