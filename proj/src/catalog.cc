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

#include "ppo/catalog.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <string>

namespace ppo {

using nlohmann::ordered_json;

std::string catalog_timestamp() {
    std::time_t t = 0;
    if (const char *env = std::getenv("SOURCE_DATE_EPOCH")) {
        char *end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) {
            t = static_cast<std::time_t>(v);
        }
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

double catalog_number(double x) {
    if (std::abs(x) < 1e-12) {
        return 0.0;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

ordered_json catalog_document(std::uint32_t n, GroupKind group, const std::string &kind, ordered_json payload) {
    ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["N"] = n;
    doc["group"] = group == GroupKind::SL ? "sl" : "esl";
    doc["kind"] = kind;
    doc["payload"] = std::move(payload);
    doc["tool_version"] = kToolVersion;
    doc["timestamp"] = catalog_timestamp();
    return doc;
}

namespace {

ordered_json matrix_json(const GroupElem &g) {
    return ordered_json::array({ordered_json::array({g.alpha(), g.beta()}), ordered_json::array({g.gamma(), g.delta()})});
}

const char *class_kind_name(ClassKind kind) {
    switch (kind) {
        case ClassKind::Standard:
            return "C";
        case ClassKind::BarC:
            return "Cbar";
        case ClassKind::D:
            return "D";
    }
    return "?";
}

ordered_json label_json(const ConjClassLabel &label, GroupKind kind) {
    ordered_json j;
    j["label"] = label.name(kind);
    j["det"] = label.det_sign;
    j["trace"] = label.trace;
    j["type"] = class_kind_name(label.kind);
    return j;
}

}  // namespace

ordered_json class_table_payload(const Field &field, GroupKind kind) {
    ordered_json rows = ordered_json::array();
    for (const ClassInfo &info : class_table(field, kind)) {
        ordered_json row = label_json(info.label, kind);
        row["size"] = info.size;
        row["order"] = info.order;
        row["representative"] = matrix_json(info.representative);
        rows.push_back(std::move(row));
    }
    ordered_json payload;
    payload["group_order"] = group_order(field.modulus(), kind);
    payload["classes"] = std::move(rows);
    return payload;
}

ordered_json fixed_points_payload(const CoordinateSystem &cs, GroupKind kind) {
    ordered_json rows = ordered_json::array();
    for (const FixedPointRow &r : fixed_point_table(cs, kind)) {
        ordered_json row = label_json(r.label, kind);
        row["size"] = r.class_size;
        row["order"] = r.order;
        row["representative"] = matrix_json(r.representative);
        row["fixed_points"] = r.fixed_points;
        row["fixed_r_vectors"] = r.fixed_r_vectors;
        row["fixed_planes"] = r.fixed_planes;
        rows.push_back(std::move(row));
    }
    ordered_json payload;
    payload["classes"] = std::move(rows);
    return payload;
}

ordered_json orbit_catalog_payload(const CoordinateSystem &cs, const OrbitCatalog &catalog) {
    ordered_json orbits = ordered_json::array();
    for (const Orbit &o : catalog.orbits) {
        ordered_json row;
        row["size"] = o.size;
        row["representative"] = o.representative;
        row["plane_label"] = cs.decode_plane(o.representative);
        orbits.push_back(std::move(row));
    }
    ordered_json payload;
    payload["method"] = "explicit";
    payload["orbit_count"] = catalog.orbits.size();
    payload["planes"] = catalog.total;
    payload["orbits"] = std::move(orbits);
    return payload;
}

ordered_json spectra_payload(const CoordinateSystem &cs, const SpectraCensus &census) {
    ordered_json classes = ordered_json::array();
    for (const SpectrumClass &c : census.classes) {
        ordered_json values = ordered_json::array();
        for (double x : c.centroid.values) {
            values.push_back(catalog_number(x));
        }
        ordered_json row;
        row["eigenvalues"] = std::move(values);
        row["count"] = c.count;
        row["example_plane"] = c.example_plane;
        row["example_label"] = cs.decode_plane(c.example_plane);
        classes.push_back(std::move(row));
    }
    ordered_json payload;
    payload["tolerance"] = census.tolerance;
    payload["planes"] = census.total;
    payload["spectrum_count"] = census.classes.size();
    payload["spectra"] = std::move(classes);
    return payload;
}

std::string dump_catalog(const ordered_json &doc) {
    return doc.dump(2) + "\n";
}

}  // namespace ppo
