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

// Acceptance criteria: one PASS/FAIL line each, exit status 1 on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ppo/hw_clifford.h"
#include "ppo/mat_group.h"
#include "ppo/orbit_engine.h"
#include "ppo/phasespace_coords.h"
#include "ppo/spectra_census.h"
#include "ppo/verify.h"

using namespace ppo;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            passed = false;
            detail << " [mismatch: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const CoordinateSystem &coords(std::uint32_t n) {
    static std::map<std::uint32_t, CoordinateSystem> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, CoordinateSystem{Field(n)}).first;
    }
    return it->second;
}

struct TimedCensus {
    SpectraCensus census;
    double seconds;
};

const TimedCensus &census(std::uint32_t n) {
    static std::map<std::uint32_t, TimedCensus> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto start = std::chrono::steady_clock::now();
        HilbertSpace h{Field(n)};
        SpectraCensus c = spectra_census(h, coords(n));
        it = cache.emplace(n, TimedCensus{std::move(c), seconds_since(start)}).first;
    }
    return it->second;
}

void ac1(Outcome &o) {
    const std::map<std::uint32_t, std::uint64_t> want = {{3, 2}, {5, 11}, {7, 360}, {11, 19650810}};
    for (const auto &[n, count] : want) {
        auto start = std::chrono::steady_clock::now();
        BurnsideResult r = burnside_count(coords(n), GroupKind::SL, OrbitSpace::Planes);
        double t = seconds_since(start);
        o.detail << " N=" << n << ":" << r.orbits;
        o.require(r.exact && r.orbits == count, "N=" + std::to_string(n));
        if (n == 11) {
            o.detail << " (" << t << " s)";
            o.require(t < 10, "N=11 runtime");
        }
    }
}

void ac2(Outcome &o) {
    const std::map<std::uint32_t, std::uint64_t> want = {{3, 2}, {5, 9}, {7, 210}, {11, 9833460}};
    for (const auto &[n, count] : want) {
        BurnsideResult r = burnside_count(coords(n), GroupKind::ESL, OrbitSpace::Planes);
        o.detail << " N=" << n << ":" << r.orbits;
        o.require(r.exact && r.orbits == count, "N=" + std::to_string(n));
    }
}

std::multiset<std::uint64_t> sizes(const OrbitCatalog &c) {
    std::multiset<std::uint64_t> s;
    for (const Orbit &orb : c.orbits) {
        s.insert(orb.size);
    }
    return s;
}

void ac3(Outcome &o) {
    o.require(sizes(orbit_decomposition(coords(3), GroupKind::SL)) == std::multiset<std::uint64_t>{1, 8}, "N=3");
    std::multiset<std::uint64_t> five = {1, 24, 40, 40, 40, 40, 40, 40, 120, 120, 120};
    OrbitCatalog c5 = orbit_decomposition(coords(5), GroupKind::SL);
    o.require(sizes(c5) == five && c5.total == 625, "N=5");
    auto start = std::chrono::steady_clock::now();
    OrbitCatalog c7 = orbit_decomposition(coords(7), GroupKind::SL);
    double t = seconds_since(start);
    std::uint64_t burnside = burnside_count(coords(7), GroupKind::SL, OrbitSpace::Planes).orbits;
    o.detail << " N=7 explicit " << c7.orbits.size() << " vs Burnside " << burnside << " over " << c7.total
             << " planes (" << t << " s)";
    o.require(c7.orbits.size() == burnside && burnside == 360 && c7.total == 117649, "N=7");
    o.require(t < 60, "N=7 runtime");
}

void ac4(Outcome &o) {
    const double phi = 1.618034;
    const auto &c3 = census(3).census.classes;
    o.require(c3.size() == 2, "N=3 class count");
    if (c3.size() == 2) {
        const auto &a = c3[0].centroid.values, &b = c3[1].centroid.values;
        o.require(std::abs(a[0] + 1) < 1e-5 && std::abs(a[1] - 1) < 1e-5 && std::abs(a[2] - 1) < 1e-5, "(-1,1,1)");
        o.require(std::abs(b[0] - (1 - phi)) < 1e-5 && std::abs(b[1]) < 1e-5 && std::abs(b[2] - phi) < 1e-5,
                  "(1-phi,0,phi)");
    }
    const std::vector<std::pair<std::vector<double>, std::uint64_t>> table5 = {
        {{-1., -1., 1., 1., 1.}, 1},
        {{-1., -0.61803, 0, 1., 1.61803}, 24},
        {{-0.94658, -0.5169, -0.18438, 0.93842, 1.70944}, 120},
        {{-0.90932, -0.48701, 0, 0.46853, 1.9278}, 120},
        {{-0.90039, -0.64018, -0.14531, 1.06785, 1.61803}, 40},
        {{-0.83726, -0.58152, -0.09576, 0.6287, 1.88584}, 120},
        {{-0.83607, -0.81, 0, 1.05469, 1.59139}, 80},
        {{-0.79859, -0.36221, 0, 0.10661, 2.05419}, 80},
        {{-0.70281, -0.61803, -0.13294, 0.48666, 1.96712}, 40},
    };
    const auto &c5 = census(5).census.classes;
    o.require(c5.size() == table5.size(), "N=5 class count");
    for (std::size_t k = 0; k < std::min(c5.size(), table5.size()); k++) {
        bool close = c5[k].count == table5[k].second;
        for (std::size_t j = 0; j < 5; j++) {
            close = close && std::abs(c5[k].centroid.values[j] - table5[k].first[j]) < 1e-4;
        }
        o.require(close, "N=5 row " + std::to_string(k));
    }
    const TimedCensus &c7 = census(7);
    o.detail << " N=3:" << c3.size() << " N=5:" << c5.size() << " N=7:" << c7.census.classes.size() << " ("
             << c7.seconds << " s)";
    o.require(c7.census.classes.size() == 210, "N=7 count");
    o.require(c7.seconds < 120, "N=7 runtime");
}

void ac5(Outcome &o) {
    for (std::uint32_t n : {3u, 5u, 7u}) {
        OrbitSpectrumReport r = orbit_spectrum_consistency(census(n).census, orbit_decomposition(coords(n), GroupKind::ESL));
        o.detail << " N=" << n << ":" << r.spectrum_classes << "/" << r.orbits;
        o.require(r.passed(), "N=" + std::to_string(n));
    }
}

struct FixedRow {
    ClassKind kind;
    std::uint32_t trace;
    std::uint64_t size, order, points, rvecs, planes;
};

constexpr ClassKind S = ClassKind::Standard, B = ClassKind::BarC, D = ClassKind::D;

bool rows_match(const std::vector<FixedPointRow> &got, const std::vector<FixedRow> &want) {
    if (got.size() != want.size()) {
        return false;
    }
    for (std::size_t k = 0; k < got.size(); k++) {
        const auto &g = got[k];
        const auto &w = want[k];
        if (g.label.kind != w.kind || g.label.trace != w.trace || g.class_size != w.size || g.order != w.order ||
            g.fixed_points != w.points || g.fixed_r_vectors != w.rvecs || g.fixed_planes != w.planes) {
            return false;
        }
    }
    return true;
}

void ac6(Outcome &o) {
    const std::map<std::uint32_t, std::vector<FixedRow>> sl = {
        {3,
         {{S, 0, 6, 4, 1, 1, 1},
          {S, 1, 4, 6, 1, 1, 1},
          {B, 1, 4, 6, 1, 1, 1},
          {D, 1, 1, 2, 1, 1, 1},
          {S, 2, 4, 3, 3, 9, 3},
          {B, 2, 4, 3, 3, 9, 3},
          {D, 2, 1, 1, 9, 81, 9}}},
        {5,
         {{S, 0, 30, 4, 1, 1, 1},
          {S, 1, 20, 6, 1, 1, 1},
          {S, 2, 12, 5, 5, 25, 5},
          {B, 2, 12, 5, 5, 25, 5},
          {D, 2, 1, 1, 25, 15625, 625},
          {S, 3, 12, 10, 1, 1, 1},
          {B, 3, 12, 10, 1, 1, 1},
          {D, 3, 1, 2, 1, 1, 1},
          {S, 4, 20, 3, 1, 25, 25}}},
        {7,
         {{S, 0, 42, 4, 1, 1, 1},
          {S, 1, 56, 6, 1, 1, 1},
          {S, 2, 24, 7, 7, 49, 7},
          {B, 2, 24, 7, 7, 49, 7},
          {D, 2, 1, 1, 49, 5764801, 117649},
          {S, 3, 42, 8, 1, 1, 1},
          {S, 4, 42, 8, 1, 1, 1},
          {S, 5, 24, 14, 1, 1, 1},
          {B, 5, 24, 14, 1, 1, 1},
          {D, 5, 1, 2, 1, 1, 1},
          {S, 6, 56, 3, 1, 49, 49}}},
    };
    // N=5 trace-2 order is 12 by enumeration; the printed table has 20.
    const std::map<std::uint32_t, std::vector<FixedRow>> det_minus_one = {
        {3, {{S, 0, 12, 2, 3, 9, 3}, {S, 1, 6, 8, 1, 1, 1}, {S, 2, 6, 8, 1, 1, 1}}},
        {5,
         {{S, 0, 30, 2, 5, 125, 25},
          {S, 1, 12, 20, 1, 1, 1},
          {B, 1, 12, 20, 1, 1, 1},
          {D, 1, 1, 4, 1, 1, 1},
          {S, 2, 20, 12, 1, 1, 1},
          {S, 3, 20, 12, 1, 1, 1},
          {S, 4, 12, 20, 1, 1, 1},
          {B, 4, 12, 20, 1, 1, 1},
          {D, 4, 1, 4, 1, 1, 1}}},
        {7,
         {{S, 0, 56, 2, 7, 2401, 343},
          {S, 1, 42, 16, 1, 1, 1},
          {S, 2, 56, 6, 1, 7, 7},
          {S, 3, 42, 16, 1, 1, 1},
          {S, 4, 42, 16, 1, 1, 1},
          {S, 5, 56, 6, 1, 7, 7},
          {S, 6, 42, 16, 1, 1, 1}}},
    };
    for (std::uint32_t n : {3u, 5u, 7u}) {
        o.require(rows_match(fixed_point_table(coords(n), GroupKind::SL), sl.at(n)), "SL N=" + std::to_string(n));
        o.require(rows_match(fixed_point_table(coords(n), GroupKind::ESL), det_minus_one.at(n)),
                  "det -1 N=" + std::to_string(n));
    }
    o.detail << " note: det -1 trace-2 class at N=5 has order 12 by enumeration (printed value 20)";
}

void ac7(Outcome &o) {
    for (std::uint32_t n : {3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
        Field field(n);
        ResidueSets sets = residue_sets(field);
        const std::uint32_t m2 = n - 2;
        const std::vector<std::pair<ConjClassLabel, std::uint64_t>> rows = {
            {{S, 1, 0}, 4},           {{S, 1, 1}, 6},         {{S, 1, n - 1}, 3},  {{S, 1, 2}, n},
            {{B, 1, 2}, n},           {{D, 1, 2}, 1},         {{S, 1, m2}, 2 * n}, {{B, 1, m2}, 2 * n},
            {{D, 1, m2}, 2},
        };
        for (const auto &[label, order] : rows) {
            o.require(element_order(class_representative(label, sets)) == order,
                      label.name(GroupKind::SL) + " N=" + std::to_string(n));
        }
    }
    const std::map<std::uint32_t, std::vector<std::uint64_t>> remaining = {
        {7, {8, 8}},
        {11, {5, 10, 12, 12, 5, 10}},
        {13, {14, 12, 14, 14, 7, 7, 12, 7}},
        {17, {18, 18, 16, 8, 9, 16, 16, 18, 8, 16, 9, 9}},
        {19, {9, 5, 10, 20, 9, 20, 9, 18, 20, 18, 20, 5, 10, 18}},
    };
    for (const auto &[n, orders] : remaining) {
        ResidueSets sets = residue_sets(Field(n));
        for (std::uint32_t t = 3; t + 2 < n; t++) {
            o.require(element_order(class_representative({S, 1, t}, sets)) == orders[t - 3],
                      "C_" + std::to_string(t) + " N=" + std::to_string(n));
        }
    }
}

void ac8(Outcome &o) {
    for (std::uint32_t n : {3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
        Field field(n);
        ResidueSets sets = residue_sets(field);
        o.require(conjugacy_class_labels(field, GroupKind::SL, sets).size() == n + 4, "SL count");
        o.require(conjugacy_class_labels(field, GroupKind::ESL, sets).size() == (n % 4 == 1 ? 2 * n + 8 : 2 * n + 2),
                  "ESL count");
        for (std::uint32_t x = 1; x < n; x++) {
            FieldElem e = field.elem(x);
            o.require(residue_intersection_count(e, sets) == residue_intersection_closed_form(e, sets),
                      "residue intersection N=" + std::to_string(n));
        }
    }
    for (std::uint32_t n : {3u, 5u, 7u}) {
        Field field(n);
        ResidueSets sets = residue_sets(field);
        for (GroupKind kind : {GroupKind::SL, GroupKind::ESL}) {
            auto elems = enumerate_group(field, kind);
            // Brute-force classes by conjugation orbits.
            std::set<std::uint32_t> seen;
            std::size_t classes = 0;
            for (const GroupElem &g : elems) {
                if (seen.count(g.code())) {
                    continue;
                }
                std::set<std::uint32_t> cls;
                for (const GroupElem &s : elems) {
                    cls.insert((s * g * s.inverse()).code());
                }
                seen.insert(cls.begin(), cls.end());
                classes++;
                ConjClassLabel label = classify(g, kind, sets);
                o.require(class_size(label, kind, field, sets) == cls.size(), "class size " + label.name(kind));
                if (kind == GroupKind::SL) {
                    o.require(sl_class_size(label, sets) == cls.size(), "closed-form size " + label.name(kind));
                }
            }
            o.require(classes == conjugacy_class_labels(field, kind, sets).size(), "brute class count");
        }
        for (const GroupElem &f : enumerate_group(field, GroupKind::ESL)) {
            Conjugation c = standardize(f, sets);
            o.require(c.conjugator * c.representative * c.conjugator.inverse() == f, "standardize " + f.to_string());
        }
    }
}

void ac9(Outcome &o) {
    for (std::uint32_t n : {3u, 5u, 7u}) {
        for (const char *suite : {"hilbert", "coords"}) {
            for (const VerifyCheck &c : run_verify(suite, n, 0)) {
                o.require(c.passed, c.suite + "/" + c.name + " N=" + std::to_string(n));
            }
        }
    }
}

void ac10(Outcome &o) {
    for (std::uint32_t n : {3u, 5u, 7u, 11u}) {
        o.detail << " N=" << n << ":";
        for (const ClaimResult &c : structural_checks(coords(n))) {
            o.detail << (c.skipped ? "s" : (c.passed ? "+" : "-"));
            o.require(c.passed, c.name + " N=" + std::to_string(n));
            o.require(!c.skipped || (c.name.find("singlet") != std::string::npos && n > 7), "skipped " + c.name);
        }
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<void(Outcome &)>>> criteria = {
        {"AC1 SL orbit counts", ac1},
        {"AC2 ESL orbit counts", ac2},
        {"AC3 explicit orbit decompositions", ac3},
        {"AC4 spectra census", ac4},
        {"AC5 orbit-spectrum agreement", ac5},
        {"AC6 fixed-point tables", ac6},
        {"AC7 cyclic orders", ac7},
        {"AC8 conjugacy machinery", ac8},
        {"AC9 property suites", ac9},
        {"AC10 structural claims", ac10},
    };
    int failed = 0;
    for (const auto &[name, fn] : criteria) {
        Outcome o;
        try {
            fn(o);
        } catch (const std::exception &e) {
            o.passed = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        std::printf("%s %s:%s\n", o.passed ? "PASS" : "FAIL", name, o.detail.str().c_str());
        std::fflush(stdout);
        failed += !o.passed;
    }
    return failed ? 1 : 0;
}
