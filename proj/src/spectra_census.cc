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

#include "ppo/spectra_census.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "ppo/error.h"

namespace ppo {

namespace {

double off_diagonal_norm(const CMatrix &a) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < a.size(); j++) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

double frobenius_norm(const CMatrix &a) {
    double s = 0;
    for (const auto &x : a.data()) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eigen(const CMatrix &input) {
    if (hermitian_defect(input) > 1e-10) {
        throw PpoError(ErrorCode::NotHermitian, "matrix is not Hermitian");
    }
    const std::size_t n = input.size();
    CMatrix a = (input + input.adjoint()) * Complex(0.5);
    CMatrix v = CMatrix::identity(n);
    const double scale = std::max(frobenius_norm(a), std::numeric_limits<double>::min());

    for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) > 1e-15 * scale; sweep++) {
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                const Complex g = a(p, q);
                const double mag = std::abs(g);
                if (mag < 1e-300) {
                    continue;
                }
                // R = diag(1, conj(phase)) times a real rotation; R^dagger A R zeroes (p,q).
                const Complex phase = g / mag;
                const double app = a(p, p).real(), aqq = a(q, q).real();
                const double theta = (aqq - app) / (2 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1), s = t * c;
                const Complex rpp = c, rpq = s, rqp = -s * std::conj(phase), rqq = c * std::conj(phase);
                for (std::size_t k = 0; k < n; k++) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * rpp + akq * rqp;
                    a(k, q) = akp * rpq + akq * rqq;
                }
                for (std::size_t k = 0; k < n; k++) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(rpp) * apk + std::conj(rqp) * aqk;
                    a(q, k) = std::conj(rpq) * apk + std::conj(rqq) * aqk;
                }
                for (std::size_t k = 0; k < n; k++) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * rpp + vkq * rqp;
                    v(k, q) = vkp * rpq + vkq * rqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    HermitianEigen out;
    out.vectors = CMatrix(n);
    for (std::size_t k = 0; k < n; k++) {
        out.values.push_back(a(order[k], order[k]).real());
        for (std::size_t row = 0; row < n; row++) {
            out.vectors(row, k) = v(row, order[k]);
        }
    }
    return out;
}

bool Spectrum::matches(const Spectrum &other, double tol) const {
    if (values.size() != other.values.size()) {
        return false;
    }
    for (std::size_t k = 0; k < values.size(); k++) {
        if (std::abs(values[k] - other.values[k]) >= tol) {
            return false;
        }
    }
    return true;
}

Spectrum hermitian_eigenvalues(const CMatrix &a) {
    return {hermitian_eigen(a).values};
}

namespace {

struct Cluster {
    std::vector<double> sum;
    Spectrum centroid;
    std::uint64_t count = 0;
    std::uint64_t example = 0;
};

}  // namespace

SpectraCensus spectra_census(const HilbertSpace &h, const CoordinateSystem &cs, double tol) {
    const std::uint32_t n = cs.modulus();
    SpectraCensus census;
    census.n = n;
    census.tolerance = tol;
    census.total = cs.plane_count();
    census.class_of.assign(census.total, 0);

    std::vector<Cluster> clusters;
    for (std::uint64_t code = 0; code < census.total; code++) {
        RVector r = cs.plane_representative(cs.decode_plane(code));
        Spectrum s = hermitian_eigenvalues(h.phase_point_operator(r));
        std::size_t hit = clusters.size();
        for (std::size_t k = 0; k < clusters.size(); k++) {
            if (s.matches(clusters[k].centroid, tol)) {
                if (hit != clusters.size()) {
                    throw PpoError(ErrorCode::ToleranceCollision,
                                   "spectrum of plane " + std::to_string(code) + " matches two clusters");
                }
                hit = k;
            }
        }
        if (hit == clusters.size()) {
            for (const auto &c : clusters) {
                if (s.matches(c.centroid, 2 * tol)) {
                    throw PpoError(ErrorCode::ToleranceCollision,
                                   "new spectrum of plane " + std::to_string(code) + " lies within 2 tol of a cluster");
                }
            }
            clusters.push_back({std::vector<double>(n, 0.0), s, 0, code});
        }
        Cluster &c = clusters[hit];
        c.count++;
        for (std::size_t k = 0; k < n; k++) {
            c.sum[k] += s.values[k];
            c.centroid.values[k] = c.sum[k] / static_cast<double>(c.count);
        }
        census.class_of[code] = static_cast<std::uint32_t>(hit);
    }

    for (std::size_t i = 0; i < clusters.size(); i++) {
        for (std::size_t j = i + 1; j < clusters.size(); j++) {
            if (clusters[i].centroid.matches(clusters[j].centroid, 2 * tol)) {
                throw PpoError(ErrorCode::ToleranceCollision, "two spectrum centroids are within 2 tol");
            }
        }
    }

    std::vector<std::uint32_t> order(clusters.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        return clusters[x].centroid.values < clusters[y].centroid.values;
    });
    std::vector<std::uint32_t> rank(clusters.size());
    for (std::uint32_t k = 0; k < order.size(); k++) {
        rank[order[k]] = k;
        const Cluster &c = clusters[order[k]];
        census.classes.push_back({c.centroid, c.count, c.example});
    }
    for (auto &id : census.class_of) {
        id = rank[id];
    }
    return census;
}

OrbitSpectrumReport orbit_spectrum_consistency(const SpectraCensus &census, const OrbitCatalog &catalog) {
    if (census.class_of.size() != catalog.orbit_of.size()) {
        throw PpoError(ErrorCode::DimensionMismatch, "census and catalog cover different plane sets");
    }
    OrbitSpectrumReport report;
    report.spectrum_classes = census.classes.size();
    report.orbits = catalog.orbits.size();
    report.homogeneous = true;

    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> class_of_orbit(catalog.orbits.size(), kUnset);
    for (std::size_t code = 0; code < catalog.orbit_of.size(); code++) {
        std::uint32_t &slot = class_of_orbit[catalog.orbit_of[code]];
        if (slot == kUnset) {
            slot = census.class_of[code];
        } else if (slot != census.class_of[code]) {
            report.homogeneous = false;
        }
    }

    std::vector<std::uint64_t> orbit_total(census.classes.size(), 0);
    std::map<std::uint32_t, std::uint32_t> first_orbit_of_class;
    for (std::uint32_t o = 0; o < catalog.orbits.size(); o++) {
        std::uint32_t c = class_of_orbit[o];
        orbit_total[c] += catalog.orbits[o].size;
        auto [it, inserted] = first_orbit_of_class.emplace(c, o);
        if (!inserted) {
            report.shared.emplace_back(it->second, o);
        }
    }
    report.counts_are_orbit_sums = true;
    for (std::size_t c = 0; c < census.classes.size(); c++) {
        report.counts_are_orbit_sums = report.counts_are_orbit_sums && orbit_total[c] == census.classes[c].count;
    }
    return report;
}

}  // namespace ppo
