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

#include "ppo/mat_group.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ppo/error.h"

namespace ppo {

GroupElem::GroupElem(std::int64_t alpha, std::int64_t beta, std::int64_t gamma, std::int64_t delta, std::uint32_t n)
    : a_(mod_reduce(alpha, n)),
      b_(mod_reduce(beta, n)),
      c_(mod_reduce(gamma, n)),
      d_(mod_reduce(delta, n)),
      n_(n),
      det_sign_(0) {
    std::uint32_t det = mod_reduce(static_cast<std::int64_t>(a_) * d_ - static_cast<std::int64_t>(b_) * c_, n);
    if (det == 1) {
        det_sign_ = 1;
    } else if (det == n - 1) {
        det_sign_ = -1;
    } else {
        throw PpoError(ErrorCode::BadDeterminant, "determinant " + std::to_string(det) + " is not +-1 mod " +
                                                      std::to_string(n));
    }
}

GroupElem GroupElem::identity(std::uint32_t n) {
    return GroupElem(1, 0, 0, 1, n);
}

GroupElem GroupElem::shear(std::uint32_t n) {
    return GroupElem(1, 1, 0, 1, n);
}

GroupElem GroupElem::quarter_turn(std::uint32_t n) {
    return GroupElem(0, 1, -1, 0, n);
}

GroupElem GroupElem::reflection(std::uint32_t n) {
    return GroupElem(1, 0, 0, -1, n);
}

GroupElem GroupElem::operator*(const GroupElem &o) const {
    if (n_ != o.n_) {
        throw PpoError(ErrorCode::DimensionMismatch, "group elements have different moduli");
    }
    std::uint64_t a = a_, b = b_, c = c_, d = d_;
    return GroupElem(static_cast<std::int64_t>((a * o.a_ + b * o.c_) % n_),
                     static_cast<std::int64_t>((a * o.b_ + b * o.d_) % n_),
                     static_cast<std::int64_t>((c * o.a_ + d * o.c_) % n_),
                     static_cast<std::int64_t>((c * o.b_ + d * o.d_) % n_), n_);
}

GroupElem GroupElem::inverse() const {
    // adj(F) / det F, with 1/det = det for det = +-1.
    std::int64_t s = det_sign_;
    return GroupElem(s * d_, -s * b_, -s * c_, s * a_, n_);
}

GroupElem GroupElem::pow(std::uint64_t exponent) const {
    GroupElem result = identity(n_);
    GroupElem base = *this;
    while (exponent) {
        if (exponent & 1) {
            result = result * base;
        }
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

std::string GroupElem::to_string() const {
    std::ostringstream out;
    out << "(" << a_ << "," << b_ << ";" << c_ << "," << d_ << ")";
    return out.str();
}

const char *group_kind_name(GroupKind kind) {
    return kind == GroupKind::SL ? "sl" : "esl";
}

std::uint64_t group_order(std::uint32_t n, GroupKind kind) {
    std::uint64_t sl = static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(n) * n - 1);
    return kind == GroupKind::SL ? sl : 2 * sl;
}

std::vector<GroupElem> enumerate_group(const Field &field, GroupKind kind) {
    const std::uint32_t n = field.modulus();
    std::vector<GroupElem> out;
    out.reserve(group_order(n, kind));
    for (std::uint32_t a = 0; a < n; a++) {
        for (std::uint32_t b = 0; b < n; b++) {
            for (std::uint32_t c = 0; c < n; c++) {
                for (std::uint32_t d = 0; d < n; d++) {
                    std::uint32_t det = field.sub(field.mul(a, d), field.mul(b, c));
                    if (det == 1 || (kind == GroupKind::ESL && det == n - 1)) {
                        out.emplace_back(a, b, c, d, n);
                    }
                }
            }
        }
    }
    return out;
}

bool ConjClassLabel::operator<(const ConjClassLabel &other) const {
    if (det_sign != other.det_sign) {
        return det_sign < other.det_sign;
    }
    if (trace != other.trace) {
        return trace < other.trace;
    }
    return static_cast<int>(kind) < static_cast<int>(other.kind);
}

std::string ConjClassLabel::name(GroupKind group) const {
    std::string t = std::to_string(trace);
    switch (kind) {
        case ClassKind::Standard:
            if (group == GroupKind::SL) {
                return "C_" + t;
            }
            return std::string("C_{") + (det_sign == 1 ? "1," : "-1,") + t + "}";
        case ClassKind::BarC:
            return "Cbar_" + t;
        case ClassKind::D:
            return "D_" + t;
    }
    return "?";
}

ConjClassLabel classify(const GroupElem &f, GroupKind kind, const ResidueSets &sets) {
    const std::uint32_t n = f.modulus();
    if (kind == GroupKind::SL && f.det_sign() != 1) {
        throw PpoError(ErrorCode::BadDeterminant, "element " + f.to_string() + " is not in SL(2)");
    }
    const int det_sign = f.det_sign();
    const std::uint32_t t = f.trace();
    const std::uint32_t disc = mod_reduce(static_cast<std::int64_t>(t) * t - 4 * det_sign, n);
    if (disc != 0) {
        return {ClassKind::Standard, det_sign, t};
    }
    if (f.beta() == 0 && f.gamma() == 0) {
        return {ClassKind::D, det_sign, t};
    }
    if (kind == GroupKind::ESL && n % 4 == 3) {
        return {ClassKind::Standard, det_sign, t};
    }
    // With t^2 = 4 det, -beta and gamma share a residue class when both are nonzero.
    const std::uint32_t witness = f.gamma() != 0 ? f.gamma() : (n - f.beta()) % n;
    return {sets.in_q(witness) ? ClassKind::Standard : ClassKind::BarC, det_sign, t};
}

GroupElem class_representative(const ConjClassLabel &label, const ResidueSets &sets) {
    const std::uint32_t n = sets.modulus;
    const std::int64_t t = label.trace;
    switch (label.kind) {
        case ClassKind::Standard:
            return GroupElem(0, -label.det_sign, 1, t, n);
        case ClassKind::BarC: {
            std::uint32_t beta = mod_reduce(-(t * t) % n * mod_inverse(mod_reduce(4 * sets.nu, n), n), n);
            return GroupElem(0, beta, sets.nu, t, n);
        }
        case ClassKind::D: {
            std::uint32_t half = mod_reduce(t * mod_inverse(2, n), n);
            return GroupElem(half, 0, 0, half, n);
        }
    }
    throw PpoError(ErrorCode::NotConjugable, "unknown class kind");
}

std::vector<ConjClassLabel> conjugacy_class_labels(const Field &field, GroupKind kind, const ResidueSets &sets) {
    const std::uint32_t n = field.modulus();
    std::vector<ConjClassLabel> out;
    for (int det_sign : {-1, 1}) {
        if (kind == GroupKind::SL && det_sign == -1) {
            continue;
        }
        for (std::uint32_t t = 0; t < n; t++) {
            out.push_back({ClassKind::Standard, det_sign, t});
        }
    }
    const std::uint32_t two = 2 % n;
    const std::uint32_t minus_two = n - 2;
    for (std::uint32_t t : {two, minus_two}) {
        out.push_back({ClassKind::D, 1, t});
        if (kind == GroupKind::SL || field.is_one_mod_four()) {
            out.push_back({ClassKind::BarC, 1, t});
        }
    }
    if (kind == GroupKind::ESL && field.is_one_mod_four()) {
        std::uint32_t two_i = field.mul(2, *sets.sqrt_minus_one);
        for (std::uint32_t t : {two_i, field.neg(two_i)}) {
            out.push_back({ClassKind::D, -1, t});
            out.push_back({ClassKind::BarC, -1, t});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t sl_class_size(const ConjClassLabel &label, const ResidueSets &sets) {
    const std::uint64_t n = sets.modulus;
    switch (label.kind) {
        case ClassKind::D:
            return 1;
        case ClassKind::BarC:
            return (n * n - 1) / 2;
        case ClassKind::Standard: {
            std::uint32_t disc = mod_reduce(static_cast<std::int64_t>(label.trace) * label.trace - 4, sets.modulus);
            if (disc == 0) {
                return (n * n - 1) / 2;
            }
            return sets.in_q(disc) ? n * (n + 1) : n * (n - 1);
        }
    }
    return 0;
}

std::uint64_t class_size(const ConjClassLabel &label, GroupKind kind, const Field &field, const ResidueSets &sets) {
    if (kind == GroupKind::SL) {
        return sl_class_size(label, sets);
    }
    std::uint64_t count = 0;
    for (const GroupElem &g : enumerate_group(field, kind)) {
        if (classify(g, kind, sets) == label) {
            count++;
        }
    }
    return count;
}

namespace {

// Given a similarity solution (x, y) and scale k, builds
// S = (x, (alpha x + beta y)/k; y, (gamma x + delta y)/k).
GroupElem conjugator_from(const GroupElem &f, std::uint32_t x, std::uint32_t y, std::uint32_t k) {
    const std::uint32_t n = f.modulus();
    const std::uint32_t k_inv = mod_inverse(k, n);
    auto lin = [&](std::uint32_t p, std::uint32_t q) {
        return mod_reduce((static_cast<std::int64_t>(p) * x + static_cast<std::int64_t>(q) * y) % n * k_inv, n);
    };
    return GroupElem(x, lin(f.alpha(), f.beta()), y, lin(f.gamma(), f.delta()), n);
}

}  // namespace

Conjugation standardize(const GroupElem &f, const ResidueSets &sets) {
    const std::uint32_t n = f.modulus();
    const Field field(n);
    const std::uint32_t delta_det = f.det();
    const std::uint32_t t = f.trace();
    const std::uint32_t disc = field.sub(field.mul(t, t), field.mul(4 % n, delta_det));
    const std::uint32_t a = f.alpha(), b = f.beta(), c = f.gamma(), d = f.delta();
    const std::uint32_t d_minus_a = field.sub(d, a);

    std::uint32_t x = 0, y = 0, k = 1;
    if (disc != 0) {
        k = 1;
        if (c == 0) {
            // (delta - alpha) x - beta = det with y = 1.
            x = field.div(field.add(delta_det, b), d_minus_a);
            y = 1;
        } else {
            // Need r, s with disc s^2 + 4 gamma det = r^2.
            const std::uint32_t shift = field.mul(field.mul(4 % n, c), delta_det);
            const std::uint32_t q = residue_shift_witness(FieldElem(disc, n), FieldElem(shift, n), sets).value();
            const std::uint32_t s = sets.sqrt(q);
            const std::uint32_t r = sets.sqrt(field.add(field.mul(disc, q), shift));
            x = field.div(field.sub(r, field.mul(s, d_minus_a)), field.mul(2, c));
            y = s;
        }
    } else if (b != 0) {
        k = field.neg(b);
        x = 1;
        y = field.div(field.add(field.mul(t, b), d_minus_a), field.mul(2, b));
    } else if (c != 0) {
        k = c;
        y = 1;
        x = field.div(field.sub(field.mul(t, c), d_minus_a), field.mul(2, c));
    } else {
        // Scalar matrix: any S commutes; pick one with det S = det F.
        return {GroupElem(1, 0, 0, delta_det, n), f};
    }

    GroupElem rep(0, field.neg(field.div(delta_det, k)), k, t, n);
    GroupElem s_mat = conjugator_from(f, x, y, k);
    if (s_mat.det() != delta_det || s_mat * rep * s_mat.inverse() != f) {
        throw PpoError(ErrorCode::NotConjugable, "similarity construction failed for " + f.to_string());
    }
    return {s_mat, rep};
}

std::uint64_t element_order(const GroupElem &f) {
    const std::uint64_t bound = group_order(f.modulus(), GroupKind::ESL);
    GroupElem acc = f;
    for (std::uint64_t k = 1; k <= bound; k++) {
        if (acc.is_identity()) {
            return k;
        }
        acc = acc * f;
    }
    throw PpoError(ErrorCode::BadDeterminant, "element " + f.to_string() + " has no finite order");
}

std::uint64_t count_cyclic_subgroups(const Field &field, std::uint64_t order, GroupKind kind) {
    std::set<std::vector<std::uint32_t>> subgroups;
    for (const GroupElem &g : enumerate_group(field, kind)) {
        if (element_order(g) != order) {
            continue;
        }
        std::vector<std::uint32_t> members;
        members.reserve(order);
        GroupElem acc = GroupElem::identity(field.modulus());
        for (std::uint64_t k = 0; k < order; k++) {
            members.push_back(acc.code());
            acc = acc * g;
        }
        std::sort(members.begin(), members.end());
        subgroups.insert(std::move(members));
    }
    return subgroups.size();
}

std::vector<ClassInfo> class_table(const Field &field, GroupKind kind) {
    const ResidueSets sets = residue_sets(field);
    std::vector<ConjClassLabel> labels = conjugacy_class_labels(field, kind, sets);
    std::map<std::pair<int, std::pair<std::uint32_t, int>>, std::uint64_t> counts;
    auto key = [](const ConjClassLabel &l) {
        return std::make_pair(l.det_sign, std::make_pair(l.trace, static_cast<int>(l.kind)));
    };
    if (kind == GroupKind::ESL) {
        for (const GroupElem &g : enumerate_group(field, kind)) {
            counts[key(classify(g, kind, sets))]++;
        }
    }
    std::vector<ClassInfo> out;
    out.reserve(labels.size());
    for (const ConjClassLabel &label : labels) {
        GroupElem rep = class_representative(label, sets);
        std::uint64_t size = kind == GroupKind::SL ? sl_class_size(label, sets) : counts[key(label)];
        out.push_back({label, rep, size, element_order(rep)});
    }
    return out;
}

}  // namespace ppo
