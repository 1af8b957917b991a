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

#ifndef PPO_FINITE_FIELD_H
#define PPO_FINITE_FIELD_H

#include <cstdint>
#include <optional>
#include <vector>

namespace ppo {

/// Reduces any signed integer into [0, n).
inline std::uint32_t mod_reduce(std::int64_t value, std::uint32_t n) {
    std::int64_t r = value % static_cast<std::int64_t>(n);
    return static_cast<std::uint32_t>(r < 0 ? r + n : r);
}

/// Inverse of x modulo the prime n by extended Euclid. Throws ZeroInverse for x = 0.
std::uint32_t mod_inverse(std::uint32_t x, std::uint32_t n);

/// An element of Z_N. Arithmetic between elements of different moduli is
/// rejected with DimensionMismatch.
class FieldElem {
   public:
    FieldElem(std::int64_t value, std::uint32_t modulus) : value_(mod_reduce(value, modulus)), modulus_(modulus) {
    }

    std::uint32_t value() const noexcept {
        return value_;
    }
    std::uint32_t modulus() const noexcept {
        return modulus_;
    }
    bool is_zero() const noexcept {
        return value_ == 0;
    }

    FieldElem operator+(const FieldElem &other) const;
    FieldElem operator-(const FieldElem &other) const;
    FieldElem operator*(const FieldElem &other) const;
    FieldElem operator/(const FieldElem &other) const;
    FieldElem operator-() const;
    FieldElem pow(std::uint64_t exponent) const;
    FieldElem inverse() const;

    bool operator==(const FieldElem &other) const = default;

   private:
    std::uint32_t value_;
    std::uint32_t modulus_;
};

/// Ambient context for Z_N with N an odd prime, checked at construction.
class Field {
   public:
    explicit Field(std::uint32_t modulus);

    std::uint32_t modulus() const noexcept {
        return n_;
    }
    FieldElem elem(std::int64_t value) const {
        return FieldElem(value, n_);
    }
    std::uint32_t reduce(std::int64_t value) const {
        return mod_reduce(value, n_);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        return (a + b) % n_;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return (a + n_ - b) % n_;
    }
    std::uint32_t neg(std::uint32_t a) const {
        return (n_ - a) % n_;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % n_);
    }
    std::uint32_t inv(std::uint32_t a) const {
        return mod_inverse(a, n_);
    }
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const {
        return mul(a, inv(b));
    }
    std::uint32_t pow(std::uint32_t base, std::uint64_t exponent) const;

    /// N = 1 (mod 4), equivalently -1 is a quadratic residue.
    bool is_one_mod_four() const noexcept {
        return n_ % 4 == 1;
    }

   private:
    std::uint32_t n_;
};

bool is_odd_prime(std::uint64_t n);

/// Quadratic residue structure of Z_N^*.
struct ResidueSets {
    std::uint32_t modulus = 0;
    std::vector<std::uint32_t> residues;      ///< Q, ascending.
    std::vector<std::uint32_t> nonresidues;   ///< Qbar, ascending.
    std::uint32_t primitive_element = 0;      ///< Smallest generator of Z_N^*.
    std::uint32_t nu = 0;                     ///< Smallest element of Qbar.
    std::optional<std::uint32_t> sqrt_minus_one;  ///< Smaller root of x^2 = -1, when N = 1 (mod 4).
    /// Indexed by value: 0 for zero, +1 for Q, -1 for Qbar.
    std::vector<std::int8_t> legendre;

    bool in_q(std::uint32_t x) const {
        return legendre[x] == 1;
    }
    bool in_qbar(std::uint32_t x) const {
        return legendre[x] == -1;
    }
    /// Q union {0}.
    bool in_q0(std::uint32_t x) const {
        return legendre[x] >= 0;
    }
    /// Some y with y^2 = x, for x in Q union {0}. Picks the smaller root.
    std::uint32_t sqrt(std::uint32_t x) const;
};

ResidueSets residue_sets(const Field &field);

FieldElem field_inv(const FieldElem &x);

/// |Qbar intersect (Qbar - x)| by direct set intersection.
std::uint64_t residue_intersection_count(const FieldElem &x, const ResidueSets &sets);

/// Closed form for the same count: (N-1)/4, (N-5)/4 or (N-3)/4 depending on
/// N mod 4 and the residue class of x.
std::uint64_t residue_intersection_closed_form(const FieldElem &x, const ResidueSets &sets);

/// Some q in Q union {0} with mu*q + nu in Q union {0}; scans Q union {0} in
/// ascending order. Such a q always exists for mu != 0.
FieldElem residue_shift_witness(const FieldElem &mu, const FieldElem &nu, const ResidueSets &sets);

}  // namespace ppo

#endif
