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

#ifndef PPO_ORBIT_ENGINE_H
#define PPO_ORBIT_ENGINE_H

#include <cstdint>
#include <string>
#include <vector>

#include "ppo/mat_group.h"
#include "ppo/phasespace_coords.h"

namespace ppo {

/// Number of (q,p) with F (q,p) = (q,p).
std::uint64_t fixed_points_phase_space(const GroupElem &f);

/// Fixed r-vectors under the linear action (no translations).
std::uint64_t fixed_r_vectors(const CoordinateSystem &cs, const GroupElem &g);
std::uint64_t fixed_planes(const CoordinateSystem &cs, const GroupElem &g);

struct FixedPointRow {
    ConjClassLabel label;
    GroupElem representative;
    std::uint64_t class_size;
    std::uint64_t order;
    std::uint64_t fixed_points;
    std::uint64_t fixed_r_vectors;
    std::uint64_t fixed_planes;
};

/// One row per class of the group; for ESL only the det -1 classes.
std::vector<FixedPointRow> fixed_point_table(const CoordinateSystem &cs, GroupKind kind);

enum class OrbitSpace { RVectors, Planes };

struct BurnsideResult {
    std::uint64_t fixed_sum = 0;
    std::uint64_t group_order = 0;
    std::uint64_t orbits = 0;
    /// fixed_sum is divisible by group_order.
    bool exact = false;
};

enum class BurnsideMode { AllElements, ClassRepresentatives };

BurnsideResult burnside_count(const CoordinateSystem &cs, GroupKind kind, OrbitSpace space,
                              BurnsideMode mode = BurnsideMode::AllElements);

struct Orbit {
    std::uint64_t representative;  ///< Smallest plane code in the orbit.
    std::uint64_t size;
};

struct OrbitCatalog {
    std::uint32_t n = 0;
    GroupKind kind = GroupKind::SL;
    /// Sorted by (size, representative).
    std::vector<Orbit> orbits;
    /// Index into `orbits` for every plane code.
    std::vector<std::uint32_t> orbit_of;
    std::uint64_t total = 0;
};

/// Breadth-first orbit enumeration over all N^{N-1} planes with the generator
/// actions (shear, quarter turn, and the reflection for ESL).
OrbitCatalog orbit_decomposition(const CoordinateSystem &cs, GroupKind kind);

struct ClaimResult {
    std::string name;
    bool passed = false;
    /// Set when the claim lies outside the range this N supports.
    bool skipped = false;
    std::string detail;
};

/// Checks the structural statements about orbits and fixed planes; nothing here
/// is assumed elsewhere. `catalog` may be null, in which case the singlet check
/// builds its own when N <= 7.
std::vector<ClaimResult> structural_checks(const CoordinateSystem &cs, const OrbitCatalog *catalog = nullptr);

}  // namespace ppo

#endif
