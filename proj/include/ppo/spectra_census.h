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

#ifndef PPO_SPECTRA_CENSUS_H
#define PPO_SPECTRA_CENSUS_H

#include <cstdint>
#include <utility>
#include <vector>

#include "ppo/cmatrix.h"
#include "ppo/hw_clifford.h"
#include "ppo/orbit_engine.h"
#include "ppo/phasespace_coords.h"

namespace ppo {

struct HermitianEigen {
    std::vector<double> values;  ///< Ascending.
    CMatrix vectors;             ///< Column k belongs to values[k].
};

/// Cyclic complex Jacobi rotations. Throws NotHermitian if the input is not
/// Hermitian to 1e-10.
HermitianEigen hermitian_eigen(const CMatrix &a);

/// Sorted real eigenvalues; two spectra are equal when every pair differs by
/// less than the tolerance.
struct Spectrum {
    std::vector<double> values;

    bool matches(const Spectrum &other, double tol) const;
};

Spectrum hermitian_eigenvalues(const CMatrix &a);

struct SpectrumClass {
    Spectrum centroid;
    std::uint64_t count = 0;
    std::uint64_t example_plane = 0;  ///< Smallest plane code with this spectrum.
};

struct SpectraCensus {
    std::uint32_t n = 0;
    double tolerance = 0;
    /// Sorted lexicographically by centroid.
    std::vector<SpectrumClass> classes;
    /// Class index for every plane code.
    std::vector<std::uint32_t> class_of;
    std::uint64_t total = 0;
};

/// Spectrum of one representative operator (alpha_0 = alpha_1 = 0) per plane,
/// clustered in plane-code order. Throws ToleranceCollision if a spectrum is
/// within tolerance of two clusters or two centroids come within 2 tolerance.
SpectraCensus spectra_census(const HilbertSpace &h, const CoordinateSystem &cs, double tol = 1e-6);

struct OrbitSpectrumReport {
    std::uint64_t spectrum_classes = 0;
    std::uint64_t orbits = 0;
    /// Every orbit lies inside one spectrum class.
    bool homogeneous = false;
    /// Every class count is the total size of the orbits mapped to it.
    bool counts_are_orbit_sums = false;
    /// Pairs of orbits that share a spectrum class.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> shared;

    bool passed() const {
        return homogeneous && counts_are_orbit_sums && spectrum_classes == orbits && shared.empty();
    }
};

/// Compares a census against an orbit catalog of the same N.
OrbitSpectrumReport orbit_spectrum_consistency(const SpectraCensus &census, const OrbitCatalog &catalog);

}  // namespace ppo

#endif
