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

#ifndef PPO_MAT_GROUP_H
#define PPO_MAT_GROUP_H

#include <cstdint>
#include <string>
#include <vector>

#include "ppo/finite_field.h"

namespace ppo {

/// A 2x2 matrix (alpha, beta; gamma, delta) over Z_N with determinant +1 or -1.
/// Entries are stored reduced into [0, N).
class GroupElem {
   public:
    /// Throws BadDeterminant unless alpha*delta - beta*gamma = +-1 (mod n).
    GroupElem(std::int64_t alpha, std::int64_t beta, std::int64_t gamma, std::int64_t delta, std::uint32_t n);

    static GroupElem identity(std::uint32_t n);
    /// (1, 1; 0, 1).
    static GroupElem shear(std::uint32_t n);
    /// (0, 1; -1, 0).
    static GroupElem quarter_turn(std::uint32_t n);
    /// diag(1, -1); the phase-space image of complex conjugation.
    static GroupElem reflection(std::uint32_t n);

    std::uint32_t alpha() const noexcept {
        return a_;
    }
    std::uint32_t beta() const noexcept {
        return b_;
    }
    std::uint32_t gamma() const noexcept {
        return c_;
    }
    std::uint32_t delta() const noexcept {
        return d_;
    }
    std::uint32_t modulus() const noexcept {
        return n_;
    }

    /// +1 or -1.
    int det_sign() const noexcept {
        return det_sign_;
    }
    /// Determinant reduced into [0, N), i.e. 1 or N-1.
    std::uint32_t det() const noexcept {
        return det_sign_ == 1 ? 1 : n_ - 1;
    }
    std::uint32_t trace() const noexcept {
        return (a_ + d_) % n_;
    }

    GroupElem operator*(const GroupElem &other) const;
    GroupElem inverse() const;
    GroupElem pow(std::uint64_t exponent) const;
    bool is_identity() const noexcept {
        return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1;
    }

    /// Dense index in [0, N^4), used for set membership.
    std::uint32_t code() const noexcept {
        return ((a_ * n_ + b_) * n_ + c_) * n_ + d_;
    }

    bool operator==(const GroupElem &other) const = default;

    std::string to_string() const;

   private:
    std::uint32_t a_, b_, c_, d_, n_;
    int det_sign_;
};

enum class GroupKind { SL, ESL };

const char *group_kind_name(GroupKind kind);

/// Order of SL(2, Z_N) or ESL(2, Z_N).
std::uint64_t group_order(std::uint32_t n, GroupKind kind);

/// All elements, in lexicographic (alpha, beta, gamma, delta) order.
std::vector<GroupElem> enumerate_group(const Field &field, GroupKind kind);

enum class ClassKind { Standard, BarC, D };

/// Conjugacy class label. Standard(det, t) is the class of (0, -det; 1, t);
/// BarC(t) of (0, -t^2/(4 nu); nu, t); D(t) of the scalar matrix (t/2) I.
struct ConjClassLabel {
    ClassKind kind = ClassKind::Standard;
    int det_sign = 1;
    std::uint32_t trace = 0;

    bool operator==(const ConjClassLabel &other) const = default;
    /// Sort order (det, trace, kind) with det -1 before +1.
    bool operator<(const ConjClassLabel &other) const;

    /// "C_3", "Cbar_2", "D_4" for SL; "C_{-1,3}" style for ESL standard classes.
    std::string name(GroupKind kind) const;
};

/// Conjugacy class of f within the given group.
ConjClassLabel classify(const GroupElem &f, GroupKind kind, const ResidueSets &sets);

/// Deterministic representative of a class label.
GroupElem class_representative(const ConjClassLabel &label, const ResidueSets &sets);

/// All class labels of the group, sorted.
std::vector<ConjClassLabel> conjugacy_class_labels(const Field &field, GroupKind kind, const ResidueSets &sets);

/// Closed-form size of an SL(2, Z_N) class.
std::uint64_t sl_class_size(const ConjClassLabel &label, const ResidueSets &sets);

/// Class size: closed form for SL, enumeration for ESL.
std::uint64_t class_size(const ConjClassLabel &label, GroupKind kind, const Field &field, const ResidueSets &sets);

struct Conjugation {
    GroupElem conjugator;      ///< S, with det S = det F.
    GroupElem representative;  ///< rep, with F = S rep S^-1.
};

/// Constructs S and a standard form rep with F = S rep S^-1. Follows the
/// three cases of the similarity construction (t^2 - 4 det nonzero, beta
/// nonzero, gamma nonzero) plus the scalar case.
Conjugation standardize(const GroupElem &f, const ResidueSets &sets);

/// Smallest k >= 1 with F^k = I.
std::uint64_t element_order(const GroupElem &f);

/// Number of distinct cyclic subgroups of the given order.
std::uint64_t count_cyclic_subgroups(const Field &field, std::uint64_t order, GroupKind kind);

/// One row of a class table.
struct ClassInfo {
    ConjClassLabel label;
    GroupElem representative;
    std::uint64_t size;
    std::uint64_t order;
};

std::vector<ClassInfo> class_table(const Field &field, GroupKind kind);

}  // namespace ppo

#endif
