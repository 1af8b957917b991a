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

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "ppo/error.h"

using namespace ppo;

namespace {

std::vector<double> eigen_oracle(const CMatrix &a) {
    const auto n = static_cast<Eigen::Index>(a.size());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            m(i, j) = a(i, j);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    auto v = solver.eigenvalues();
    return std::vector<double>(v.data(), v.data() + v.size());
}

CMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CMatrix a(n);
    for (std::size_t i = 0; i < n; i++) {
        a(i, i) = g(rng);
        for (std::size_t j = i + 1; j < n; j++) {
            a(i, j) = Complex(g(rng), g(rng));
            a(j, i) = std::conj(a(i, j));
        }
    }
    return a;
}

RVector random_rvec(std::uint32_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, n - 1);
    RVector r(n + 1);
    for (auto &x : r) {
        x = dist(rng);
    }
    return r;
}

const double kPhi = (1 + std::sqrt(5.0)) / 2;

}  // namespace

TEST(hermitian_eigen, matches_oracle_and_residual) {
    std::mt19937_64 rng(0);
    for (std::size_t n : {1u, 2u, 3u, 5u, 7u, 11u}) {
        for (int trial = 0; trial < 30; trial++) {
            CMatrix a = random_hermitian(n, rng);
            HermitianEigen e = hermitian_eigen(a);
            auto oracle = eigen_oracle(a);
            ASSERT_EQ(e.values.size(), n);
            for (std::size_t k = 0; k < n; k++) {
                EXPECT_NEAR(e.values[k], oracle[k], 1e-10);
                CVector v(n);
                for (std::size_t r = 0; r < n; r++) {
                    v[r] = e.vectors(r, k);
                }
                CVector av = a * v;
                double residual = 0;
                for (std::size_t r = 0; r < n; r++) {
                    residual += std::norm(av[r] - e.values[k] * v[r]);
                }
                EXPECT_LT(std::sqrt(residual), 1e-8);
            }
            EXPECT_LT(unitarity_defect(e.vectors), 1e-10);
        }
    }
}

TEST(hermitian_eigen, degenerate_and_errors) {
    auto s = hermitian_eigenvalues(CMatrix::identity(3));
    EXPECT_EQ(s.values, (std::vector<double>{1, 1, 1}));
    CMatrix bad(2);
    bad(0, 1) = 1.0;
    try {
        hermitian_eigen(bad);
        FAIL();
    } catch (const PpoError &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
    }
}

TEST(spectra_census, three) {
    HilbertSpace h{Field(3)};
    CoordinateSystem cs{Field(3)};
    auto census = spectra_census(h, cs);
    ASSERT_EQ(census.classes.size(), 2u);
    const auto &a = census.classes[0], &b = census.classes[1];
    EXPECT_EQ(a.count, 1u);
    EXPECT_NEAR(a.centroid.values[0], -1, 1e-9);
    EXPECT_NEAR(a.centroid.values[1], 1, 1e-9);
    EXPECT_NEAR(a.centroid.values[2], 1, 1e-9);
    EXPECT_EQ(b.count, 8u);
    EXPECT_NEAR(b.centroid.values[0], 1 - kPhi, 1e-9);
    EXPECT_NEAR(b.centroid.values[1], 0, 1e-9);
    EXPECT_NEAR(b.centroid.values[2], kPhi, 1e-9);
}

TEST(spectra_census, five) {
    const std::vector<std::pair<std::vector<double>, std::uint64_t>> table = {
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
    HilbertSpace h{Field(5)};
    CoordinateSystem cs{Field(5)};
    auto census = spectra_census(h, cs);
    ASSERT_EQ(census.classes.size(), table.size());
    for (std::size_t k = 0; k < table.size(); k++) {
        EXPECT_EQ(census.classes[k].count, table[k].second) << "row " << k;
        for (std::size_t j = 0; j < 5; j++) {
            EXPECT_NEAR(census.classes[k].centroid.values[j], table[k].first[j], 1e-4) << "row " << k;
        }
    }
}

TEST(spectra_census, sums_and_divisibility) {
    for (std::uint32_t n : {3u, 5u}) {
        HilbertSpace h{Field(n)};
        CoordinateSystem cs{Field(n)};
        auto census = spectra_census(h, cs);
        std::uint64_t total = 0;
        for (const auto &c : census.classes) {
            double s = 0, s2 = 0;
            for (double x : c.centroid.values) {
                s += x;
                s2 += x * x;
            }
            EXPECT_NEAR(s, 1.0, 1e-8);
            EXPECT_NEAR(s2, n, 1e-7);
            EXPECT_EQ(group_order(n, GroupKind::ESL) % c.count, 0u);
            EXPECT_EQ(census.class_of[c.example_plane], &c - census.classes.data());
            total += c.count;
        }
        EXPECT_EQ(total, cs.plane_count());
    }
}

TEST(spectra_census, tolerance_collision) {
    HilbertSpace h{Field(5)};
    CoordinateSystem cs{Field(5)};
    try {
        spectra_census(h, cs, 0.5);
        FAIL();
    } catch (const PpoError &e) {
        EXPECT_EQ(e.code(), ErrorCode::ToleranceCollision);
    }
}

TEST(spectrum, invariant_within_plane) {
    std::mt19937_64 rng(1);
    for (std::uint32_t n : {3u, 5u, 7u}) {
        HilbertSpace h{Field(n)};
        for (int trial = 0; trial < 10; trial++) {
            AffinePlane plane = h.affine_plane_operators(random_rvec(n, rng));
            Spectrum ref = hermitian_eigenvalues(plane.begin()->second);
            for (const auto &[pt, a] : plane) {
                EXPECT_TRUE(hermitian_eigenvalues(a).matches(ref, 1e-9));
            }
        }
    }
}

TEST(spectrum, invariant_under_generators) {
    std::mt19937_64 rng(2);
    for (std::uint32_t n : {3u, 5u, 7u}) {
        HilbertSpace h{Field(n)};
        CoordinateSystem cs{Field(n)};
        std::uniform_int_distribution<std::uint64_t> dist(0, cs.plane_count() - 1);
        for (int trial = 0; trial < 50; trial++) {
            RVector r = cs.plane_representative(cs.decode_plane(dist(rng)));
            Spectrum ref = hermitian_eigenvalues(h.phase_point_operator(r));
            for (const GroupElem &g : {GroupElem::shear(n), GroupElem::quarter_turn(n), GroupElem::reflection(n)}) {
                RVector image = cs.esl_action(g) * std::span<const std::uint32_t>(r);
                EXPECT_TRUE(hermitian_eigenvalues(h.phase_point_operator(image)).matches(ref, 1e-9));
            }
        }
    }
}

TEST(orbit_spectrum_consistency, small_cases) {
    for (std::uint32_t n : {3u, 5u}) {
        HilbertSpace h{Field(n)};
        CoordinateSystem cs{Field(n)};
        auto report = orbit_spectrum_consistency(spectra_census(h, cs), orbit_decomposition(cs, GroupKind::ESL));
        EXPECT_TRUE(report.passed());
        EXPECT_EQ(report.spectrum_classes, n == 3 ? 2u : 9u);
    }
    // The SL catalog at N = 5 has 11 orbits over 9 spectra.
    HilbertSpace h{Field(5)};
    CoordinateSystem cs{Field(5)};
    auto report = orbit_spectrum_consistency(spectra_census(h, cs), orbit_decomposition(cs, GroupKind::SL));
    EXPECT_TRUE(report.homogeneous);
    EXPECT_FALSE(report.passed());
    EXPECT_EQ(report.shared.size(), 2u);
}
