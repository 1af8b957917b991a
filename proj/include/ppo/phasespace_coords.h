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

#ifndef PPO_PHASESPACE_COORDS_H
#define PPO_PHASESPACE_COORDS_H

#include <cstdint>
#include <span>
#include <vector>

#include "ppo/finite_field.h"
#include "ppo/mat_group.h"
#include "ppo/zn_matrix.h"

namespace ppo {

/// r-vector (r_0, ..., r_N): slot m holds the label of the chosen projector in basis m.
using RVector = ZnVector;
/// Coordinates of an r-vector in the e-basis: r = S alpha.
using AlphaVector = ZnVector;
/// (alpha_2, ..., alpha_N): the N - 1 coordinates of an affine plane.
using PlaneLabel = ZnVector;

/// Exact coordinate machinery over Z_N for phase point operators and affine planes.
class CoordinateSystem {
   public:
    explicit CoordinateSystem(const Field &field);

    std::uint32_t modulus() const noexcept {
        return n_;
    }
    const Field &field() const noexcept {
        return field_;
    }

    /// e_0 = (1,...,1,0), e_1 = (0,1,...,N-1,1), e_k = (0,1^k,...,(N-1)^k,0), e_N = (0,...,0,1).
    const std::vector<RVector> &e_basis() const noexcept {
        return e_basis_;
    }
    /// Columns are the e_k.
    const ZnMatrix &s() const noexcept {
        return s_;
    }
    const ZnMatrix &s_inverse() const noexcept {
        return s_inv_;
    }

    AlphaVector r_to_alpha(std::span<const std::uint32_t> r) const;
    RVector alpha_to_r(std::span<const std::uint32_t> alpha) const;

    /// r + q0 e_0 - p0 e_1: the label of D(q0,p0) A D(q0,p0)^dagger.
    RVector translate(std::span<const std::uint32_t> r, std::int64_t q0, std::int64_t p0) const;

    /// Monomial M(F) with U(F) A(r) U(F)^dagger = A(M(F) r). Throws BadDeterminant unless det F = 1.
    ZnMatrix sl_action(const GroupElem &f) const;
    /// Complex conjugation: r_m -> r_{-m} for m < N, r_N -> -r_N.
    const ZnMatrix &conjugation_action() const noexcept {
        return conj_;
    }
    /// Action of any det +-1 element; det -1 elements act as M(g J) C with J = diag(1,-1).
    ZnMatrix esl_action(const GroupElem &g) const;

    /// Lower-right (N-1)x(N-1) block of S^-1 A S.
    ZnMatrix plane_action_of(const ZnMatrix &r_action) const;
    ZnMatrix plane_action(const GroupElem &g) const {
        return plane_action_of(esl_action(g));
    }

    /// Omega in the r-basis: (q, 1; -1^T, 0) with q_ij = 1/(j - i) for i != j < N.
    const ZnMatrix &symplectic_form() const noexcept {
        return omega_;
    }
    /// S^T Omega S, entries Omega(e_i, e_j).
    ZnMatrix symplectic_form_e() const;
    /// Restriction to the plane coordinates alpha_2..alpha_N.
    ZnMatrix plane_symplectic_form() const;

    /// Vectors in plane coordinates (index 0 is e_2) in which the plane form
    /// becomes (0, 1; -1, 0).
    std::vector<PlaneLabel> canonical_symplectic_basis() const;

    PlaneLabel plane_label(std::span<const std::uint32_t> r) const;
    /// The r-vector with alpha_0 = alpha_1 = 0 and the given plane coordinates.
    RVector plane_representative(std::span<const std::uint32_t> label) const;

    /// Base-N code with label[0] most significant.
    std::uint64_t encode_plane(std::span<const std::uint32_t> label) const;
    PlaneLabel decode_plane(std::uint64_t code) const;
    std::uint64_t plane_count() const noexcept {
        return plane_count_;
    }

   private:
    Field field_;
    std::uint32_t n_;
    std::vector<RVector> e_basis_;
    ZnMatrix s_, s_inv_, conj_, omega_;
    std::uint64_t plane_count_;
};

}  // namespace ppo

#endif
