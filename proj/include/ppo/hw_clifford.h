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

#ifndef PPO_HW_CLIFFORD_H
#define PPO_HW_CLIFFORD_H

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ppo/cmatrix.h"
#include "ppo/finite_field.h"
#include "ppo/mat_group.h"

namespace ppo {

/// A basis vector label |m, r>. m = N stands for the basis at infinity.
struct MubLabel {
    std::uint32_t m = 0;
    std::uint32_t r = 0;
};

struct PhaseSpacePoint {
    std::uint32_t q = 0;
    std::uint32_t p = 0;

    auto operator<=>(const PhaseSpacePoint &other) const = default;
};

/// A line of the phase space, indexed by the basis it belongs to.
/// For m < N the line is {(m p + offset, p)}; m = 0 is the vertical striation.
/// For m = N the line is {(q, offset)}, the horizontal striation.
struct Line {
    std::uint32_t m = 0;
    std::uint32_t offset = 0;

    std::vector<PhaseSpacePoint> points(std::uint32_t n) const;
};

/// Operators of one affine plane, keyed by phase-space point.
using AffinePlane = std::map<PhaseSpacePoint, CMatrix>;

/// Weyl-Heisenberg and Clifford operators for one odd prime dimension N.
/// Basis projectors are tabulated at construction; the object is immutable
/// afterwards.
class HilbertSpace {
   public:
    explicit HilbertSpace(const Field &field);

    std::uint32_t dimension() const noexcept {
        return n_;
    }

    /// omega^k with omega = exp(2 pi i / N).
    Complex omega_pow(std::int64_t k) const;
    /// tau^k with tau = -exp(i pi / N); tau has order N for odd N.
    Complex tau_pow(std::int64_t k) const;

    /// [D(q,p)]_{lk} = tau^{qp} omega^{kp} delta_{l,k+q}.
    CMatrix displacement(std::int64_t q, std::int64_t p) const;

    /// The phase c in D(q,p) D(q',p') = c D(q+q', p+p').
    Complex weyl_product_phase(std::int64_t q, std::int64_t p, std::int64_t q2, std::int64_t p2) const;

    /// U(F) with U D(q,p) U^dagger = D(alpha q + beta p, gamma q + delta p).
    /// Throws BadDeterminant unless det F = 1.
    CMatrix clifford_unitary(const GroupElem &f) const;
    /// U(g) A U(g)^dagger, or U(g J) conj(A) U(g J)^dagger for det g = -1 with
    /// J = diag(1, -1).
    CMatrix extended_clifford_image(const GroupElem &g, const CMatrix &a) const;

    /// V^m |r> for m < N, W |r> for m = N, with V = U(shear), W = U(quarter turn).
    CVector mub_vector(const MubLabel &label) const;

    /// (1/N) sum_j omega^{-rj} D(mj, j), or (1/N) sum_j omega^{-rj} D(j, 0) for m = N.
    const CMatrix &mub_projector(const MubLabel &label) const;

    /// sum_m P_{m, r_m} - I. `rvec` has N + 1 entries.
    CMatrix phase_point_operator(std::span<const std::uint32_t> rvec) const;

    /// D(q,p) A D(q,p)^dagger for all N^2 points, A the operator of `rvec`.
    AffinePlane affine_plane_operators(std::span<const std::uint32_t> rvec) const;

    /// The projector a net assigns to `line`: P_{m, r_m + offset} for m < N and
    /// P_{N, r_N - offset} for the horizontal striation.
    const CMatrix &net_projector(std::span<const std::uint32_t> rvec, const Line &line) const;

   private:
    std::uint32_t n_;
    std::vector<Complex> omega_;
    std::vector<Complex> tau_;
    std::vector<CMatrix> projectors_;  // index m * N + r
};

/// (1/N) sum over the line of the plane operators. Throws IncompletePlane
/// when a point of the line is missing.
CMatrix line_projector(const Line &line, const AffinePlane &plane, std::uint32_t n);

/// W(q,p) = Tr[rho A(q,p)]. Throws NotAState unless rho is Hermitian with unit
/// trace; IncompletePlane unless all N^2 points are present.
std::map<PhaseSpacePoint, double> wigner_distribution(const CMatrix &rho, const AffinePlane &plane);

}  // namespace ppo

#endif
