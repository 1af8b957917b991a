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

#ifndef PPO_CATALOG_H
#define PPO_CATALOG_H

#include <cstdint>
#include <string>

#include "json.hpp"
#include "ppo/mat_group.h"
#include "ppo/orbit_engine.h"
#include "ppo/phasespace_coords.h"
#include "ppo/spectra_census.h"

namespace ppo {

inline constexpr const char *kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// UTC ISO-8601 time from SOURCE_DATE_EPOCH, or the epoch when unset.
std::string catalog_timestamp();

/// Rounds to 12 significant digits; |x| < 1e-12 becomes 0.
double catalog_number(double x);

/// {schema_version, N, group, kind, payload, tool_version, timestamp}.
nlohmann::ordered_json catalog_document(std::uint32_t n, GroupKind group, const std::string &kind,
                                        nlohmann::ordered_json payload);

nlohmann::ordered_json class_table_payload(const Field &field, GroupKind kind);
nlohmann::ordered_json fixed_points_payload(const CoordinateSystem &cs, GroupKind kind);
nlohmann::ordered_json orbit_catalog_payload(const CoordinateSystem &cs, const OrbitCatalog &catalog);
nlohmann::ordered_json spectra_payload(const CoordinateSystem &cs, const SpectraCensus &census);

/// Serialized document followed by a newline.
std::string dump_catalog(const nlohmann::ordered_json &doc);

}  // namespace ppo

#endif
