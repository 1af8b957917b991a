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

#include "ppo/finite_field.h"

#include <algorithm>
#include <string>

#include "ppo/error.h"

namespace ppo {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidModulus:
            return "InvalidModulus";
        case ErrorCode::ZeroInverse:
            return "ZeroInverse";
        case ErrorCode::ZeroArgument:
            return "ZeroArgument";
        case ErrorCode::NoWitness:
            return "NoWitness";
        case ErrorCode::BadDeterminant:
            return "BadDeterminant";
        case ErrorCode::NotConjugable:
            return "NotConjugable";
        case ErrorCode::IncompletePlane:
            return "IncompletePlane";
        case ErrorCode::NotAState:
            return "NotAState";
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::ToleranceCollision:
            return "ToleranceCollision";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

PpoError::PpoError(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

std::uint32_t mod_inverse(std::uint32_t x, std::uint32_t n) {
    x %= n;
    if (x == 0) {
        throw PpoError(ErrorCode::ZeroInverse, "0 has no inverse mod " + std::to_string(n));
    }
    std::int64_t r0 = n, r1 = x;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) {
        throw PpoError(ErrorCode::ZeroInverse, std::to_string(x) + " is not invertible mod " + std::to_string(n));
    }
    return mod_reduce(t0, n);
}

namespace {

void require_same_modulus(const FieldElem &a, const FieldElem &b) {
    if (a.modulus() != b.modulus()) {
        throw PpoError(ErrorCode::DimensionMismatch, "field elements have different moduli");
    }
}

}  // namespace

FieldElem FieldElem::operator+(const FieldElem &other) const {
    require_same_modulus(*this, other);
    return FieldElem(static_cast<std::int64_t>(value_) + other.value_, modulus_);
}

FieldElem FieldElem::operator-(const FieldElem &other) const {
    require_same_modulus(*this, other);
    return FieldElem(static_cast<std::int64_t>(value_) - other.value_, modulus_);
}

FieldElem FieldElem::operator*(const FieldElem &other) const {
    require_same_modulus(*this, other);
    return FieldElem(static_cast<std::int64_t>(value_) * other.value_, modulus_);
}

FieldElem FieldElem::operator/(const FieldElem &other) const {
    return *this * other.inverse();
}

FieldElem FieldElem::operator-() const {
    return FieldElem(-static_cast<std::int64_t>(value_), modulus_);
}

FieldElem FieldElem::pow(std::uint64_t exponent) const {
    std::uint64_t result = 1 % modulus_;
    std::uint64_t base = value_;
    while (exponent) {
        if (exponent & 1) {
            result = result * base % modulus_;
        }
        base = base * base % modulus_;
        exponent >>= 1;
    }
    return FieldElem(static_cast<std::int64_t>(result), modulus_);
}

FieldElem FieldElem::inverse() const {
    return FieldElem(mod_inverse(value_, modulus_), modulus_);
}

bool is_odd_prime(std::uint64_t n) {
    if (n < 3 || n % 2 == 0) {
        return false;
    }
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Field::Field(std::uint32_t modulus) : n_(modulus) {
    if (!is_odd_prime(modulus)) {
        throw PpoError(ErrorCode::InvalidModulus, std::to_string(modulus) + " is not an odd prime");
    }
}

std::uint32_t Field::pow(std::uint32_t base, std::uint64_t exponent) const {
    return FieldElem(base, n_).pow(exponent).value();
}

std::uint32_t ResidueSets::sqrt(std::uint32_t x) const {
    for (std::uint32_t y = 0; y < modulus; y++) {
        if (static_cast<std::uint64_t>(y) * y % modulus == x) {
            return y;
        }
    }
    throw PpoError(ErrorCode::ZeroArgument, std::to_string(x) + " is not a square mod " + std::to_string(modulus));
}

ResidueSets residue_sets(const Field &field) {
    const std::uint32_t n = field.modulus();
    ResidueSets sets;
    sets.modulus = n;
    sets.legendre.assign(n, -1);
    sets.legendre[0] = 0;
    for (std::uint32_t y = 1; y < n; y++) {
        sets.legendre[field.mul(y, y)] = 1;
    }
    for (std::uint32_t x = 1; x < n; x++) {
        (sets.legendre[x] == 1 ? sets.residues : sets.nonresidues).push_back(x);
    }
    sets.nu = sets.nonresidues.front();

    for (std::uint32_t g = 2; g < n; g++) {
        std::uint32_t order = 1;
        std::uint32_t acc = g;
        while (acc != 1) {
            acc = field.mul(acc, g);
            order++;
        }
        if (order == n - 1) {
            sets.primitive_element = g;
            break;
        }
    }

    if (field.is_one_mod_four()) {
        for (std::uint32_t y = 1; y < n; y++) {
            if (field.mul(y, y) == n - 1) {
                sets.sqrt_minus_one = y;
                break;
            }
        }
    }
    return sets;
}

FieldElem field_inv(const FieldElem &x) {
    return x.inverse();
}

std::uint64_t residue_intersection_count(const FieldElem &x, const ResidueSets &sets) {
    if (x.is_zero()) {
        throw PpoError(ErrorCode::ZeroArgument, "residue_intersection_count needs x != 0");
    }
    const std::uint32_t n = sets.modulus;
    std::uint64_t count = 0;
    for (std::uint32_t y : sets.nonresidues) {
        // y in Qbar - x  <=>  y + x in Qbar
        if (sets.in_qbar((y + x.value()) % n)) {
            count++;
        }
    }
    return count;
}

std::uint64_t residue_intersection_closed_form(const FieldElem &x, const ResidueSets &sets) {
    if (x.is_zero()) {
        throw PpoError(ErrorCode::ZeroArgument, "residue_intersection_closed_form needs x != 0");
    }
    const std::uint64_t n = sets.modulus;
    if (n % 4 == 3) {
        return (n - 3) / 4;
    }
    return sets.in_q(x.value()) ? (n - 1) / 4 : (n - 5) / 4;
}

FieldElem residue_shift_witness(const FieldElem &mu, const FieldElem &nu, const ResidueSets &sets) {
    if (mu.is_zero()) {
        throw PpoError(ErrorCode::ZeroArgument, "residue_shift_witness needs mu != 0");
    }
    const std::uint32_t n = sets.modulus;
    auto try_q = [&](std::uint32_t q) {
        return sets.in_q0(static_cast<std::uint32_t>((static_cast<std::uint64_t>(mu.value()) * q + nu.value()) % n));
    };
    if (try_q(0)) {
        return FieldElem(0, n);
    }
    for (std::uint32_t q : sets.residues) {
        if (try_q(q)) {
            return FieldElem(q, n);
        }
    }
    throw PpoError(ErrorCode::NoWitness, "no witness for mu=" + std::to_string(mu.value()) +
                                             " nu=" + std::to_string(nu.value()));
}

}  // namespace ppo
