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

#include "ppo/zn_matrix.h"

#include <random>

#include "gtest/gtest.h"
#include "ppo/error.h"

using namespace ppo;

namespace {

ZnMatrix random_matrix(std::size_t k, std::uint32_t n, std::mt19937_64 &rng) {
    ZnMatrix m(k, k, n);
    std::uniform_int_distribution<std::uint32_t> dist(0, n - 1);
    for (std::size_t i = 0; i < k; i++) {
        for (std::size_t j = 0; j < k; j++) {
            m.set(i, j, dist(rng));
        }
    }
    return m;
}

// Counts fixed vectors by enumerating all of Z_N^k.
std::uint64_t brute_fixed(const ZnMatrix &m) {
    const std::size_t k = m.rows();
    const std::uint32_t n = m.modulus();
    std::uint64_t total = int_pow(n, k), count = 0;
    ZnVector v(k);
    for (std::uint64_t code = 0; code < total; code++) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < k; i++) {
            v[i] = c % n;
            c /= n;
        }
        if (m * std::span<const std::uint32_t>(v) == v) {
            count++;
        }
    }
    return count;
}

}  // namespace

TEST(zn_matrix, inverse_and_determinant) {
    std::mt19937_64 rng(0);
    for (std::uint32_t n : {3u, 5u, 7u}) {
        for (int trial = 0; trial < 50; trial++) {
            ZnMatrix m = random_matrix(4, n, rng);
            if (m.determinant() == 0) {
                EXPECT_LT(m.rank(), 4u);
                EXPECT_THROW(m.inverse(), PpoError);
                continue;
            }
            EXPECT_EQ(m * m.inverse(), ZnMatrix::identity(4, n));
            EXPECT_EQ(m.rank(), 4u);
        }
    }
}

TEST(zn_matrix, determinant_examples) {
    auto m = ZnMatrix::from_rows({{0, 1}, {1, 0}}, 7);
    EXPECT_EQ(m.determinant(), 6u);
    auto d = ZnMatrix::from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}, 7);
    EXPECT_EQ(d.determinant(), 3u);
    EXPECT_EQ(ZnMatrix::from_rows({{1, 2}, {2, 4}}, 5).determinant(), 0u);
}

TEST(zn_matrix, determinant_multiplicative) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; trial++) {
        ZnMatrix a = random_matrix(3, 5, rng), b = random_matrix(3, 5, rng);
        EXPECT_EQ((a * b).determinant(), a.determinant() * b.determinant() % 5);
    }
}

TEST(zn_matrix, nullspace) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; trial++) {
        ZnMatrix m = random_matrix(3, 3, rng);
        m.set(2, 0, m(0, 0) + m(1, 0));
        m.set(2, 1, m(0, 1) + m(1, 1));
        m.set(2, 2, m(0, 2) + m(1, 2));
        auto basis = m.nullspace();
        EXPECT_EQ(basis.size(), m.nullity());
        EXPECT_GE(basis.size(), 1u);
        for (const auto &v : basis) {
            EXPECT_EQ(m * std::span<const std::uint32_t>(v), ZnVector(3, 0));
        }
    }
}

TEST(fixed_count_linear, matches_enumeration) {
    std::mt19937_64 rng(3);
    EXPECT_EQ(fixed_count_linear(ZnMatrix::identity(4, 5)), 625u);
    for (int trial = 0; trial < 100; trial++) {
        ZnMatrix m = random_matrix(3, 5, rng);
        EXPECT_EQ(fixed_count_linear(m), brute_fixed(m));
    }
}

TEST(zn_matrix, monomial) {
    EXPECT_TRUE(ZnMatrix::from_rows({{0, 2}, {3, 0}}, 5).is_monomial());
    EXPECT_FALSE(ZnMatrix::from_rows({{1, 2}, {0, 1}}, 5).is_monomial());
}
