/**************************************************************************
 * Copyright 2026 The mubs Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "mubs/verifier.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "mubs/constructions.hpp"
#include "oracles.hpp"

namespace mubs {
namespace {

ExponentVector ev(std::vector<std::uint8_t> e, std::uint32_t m) { return {std::move(e), m}; }

TEST(InnerProduct, SelfPairIsQSquared) {
    const auto u = ev({0, 1, 2}, 3);
    const auto v = inner_product_sq(u, u);
    EXPECT_TRUE(v.rational);
    EXPECT_EQ(v.value, 9);
}

TEST(InnerProduct, FullCharacterSumVanishes) {
    const auto v = inner_product_sq(ev({0, 0, 0}, 3), ev({0, 1, 2}, 3));
    EXPECT_TRUE(v.rational);
    EXPECT_EQ(v.value, 0);
    EXPECT_EQ(v.residue_counts, (std::vector<std::int64_t>{1, 1, 1}));
}

TEST(InnerProduct, NonRationalIsDetected) {
    // S = 1 + 2w for w = exp(2 pi i / 3): |S|^2 = 1 + 4 - 2 = 3, rational
    const auto r = inner_product_sq(ev({0, 0, 0}, 3), ev({0, 1, 1}, 3));
    EXPECT_TRUE(r.rational);
    EXPECT_EQ(r.value, 3);
    // S = 1 + w over Z_5 has |S|^2 = 2 + w + w^4, irrational
    const auto s = inner_product_sq(ev({0, 0}, 5), ev({0, 1}, 5));
    EXPECT_FALSE(s.rational);
    EXPECT_NEAR(oracle::overlap({0, 0}, {0, 1}, 5) * 4, 2 + 2 * std::cos(2 * 3.14159265358979 / 5), 1e-12);
}

TEST(InnerProduct, GaussianIntegerPath) {
    // (1, i) vs (1, -i): exponent differences (0, 2) give 1 - 1 = 0
    EXPECT_EQ(inner_product_sq(ev({0, 1}, 4), ev({0, 3}, 4)).value, 0);
    // (1, 1) vs (1, i): S = 1 + i
    EXPECT_EQ(inner_product_sq(ev({0, 0}, 4), ev({0, 1}, 4)).value, 2);
}

TEST(InnerProduct, LengthMismatch) {
    EXPECT_THROW(inner_product_sq(ev({0, 1}, 3), ev({0, 1, 2}, 3)), Error);
    EXPECT_THROW(inner_product_sq(ev({0, 1}, 3), ev({0, 1}, 4)), Error);
}

TEST(InnerProduct, PlanarZ3CrossBasisValueIsThree) {
    const auto fam = build_planar(Field::create(3, 1));
    for (const auto& u : fam.bases[0]) {
        for (const auto& v : fam.bases[1]) {
            const double f = oracle::overlap(u.entries, v.entries, 3) * 9;
            ASSERT_NEAR(f, 3.0, 1e-9);
            const auto exact = inner_product_sq(u, v);
            ASSERT_TRUE(exact.rational);
            ASSERT_EQ(exact.value, 3);
        }
    }
}

TEST(InnerProduct, ExactAgreesWithFloatOracleOnRandomVectors) {
    std::mt19937_64 rng(7);
    for (std::uint32_t m : {3U, 4U, 5U, 7U}) {
        std::uniform_int_distribution<int> e(0, static_cast<int>(m) - 1);
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<std::uint8_t> a(9), b(9);
            for (auto& x : a) x = static_cast<std::uint8_t>(e(rng));
            for (auto& x : b) x = static_cast<std::uint8_t>(e(rng));
            const auto val = inner_product_sq(ev(a, m), ev(b, m));
            const double f = oracle::overlap(a, b, static_cast<int>(m));
            EXPECT_NEAR(float_overlap(ev(a, m), ev(b, m)), f, 1e-12);
            if (val.rational) {
                ASSERT_NEAR(static_cast<double>(val.value) / 81.0, f, 1e-8);
            } else {
                // irrational |S|^2 cannot be an integer
                ASSERT_GT(std::abs(f * 81 - std::round(f * 81)), 1e-6);
            }
        }
    }
}

TEST(InnerProduct, SymmetryAndGlobalPhaseInvariance) {
    std::mt19937_64 rng(11);
    for (std::uint32_t m : {3U, 4U, 5U}) {
        std::uniform_int_distribution<int> e(0, static_cast<int>(m) - 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::uint8_t> a(8), b(8);
            for (auto& x : a) x = static_cast<std::uint8_t>(e(rng));
            for (auto& x : b) x = static_cast<std::uint8_t>(e(rng));
            const auto ab = inner_product_sq(ev(a, m), ev(b, m));
            const auto ba = inner_product_sq(ev(b, m), ev(a, m));
            EXPECT_EQ(ab.rational, ba.rational);
            EXPECT_EQ(ab.correlation, ba.correlation);
            const auto c = static_cast<std::uint8_t>(e(rng));
            auto shifted = a;
            for (auto& x : shifted) x = static_cast<std::uint8_t>((x + c) % m);
            const auto sh = inner_product_sq(ev(shifted, m), ev(b, m));
            EXPECT_EQ(sh.correlation, ab.correlation);
            EXPECT_EQ(sh.value, ab.value);
        }
    }
}

TEST(Orthonormal, Examples) {
    const auto planar = build_planar(Field::create(3, 1));
    EXPECT_TRUE(verify_orthonormal(planar.bases[0]).pass);

    const std::vector<ExponentVector> repeated{ev({0, 0, 0}, 3), ev({0, 0, 0}, 3), ev({0, 1, 2}, 3)};
    const auto bad = verify_orthonormal(repeated);
    EXPECT_FALSE(bad.pass);
    EXPECT_EQ(bad.first, 0U);
    EXPECT_EQ(bad.second, 1U);

    const auto ring = build_galois_ring(GaloisRing::create(1));
    EXPECT_TRUE(verify_orthonormal(ring.bases[1]).pass);
}

TEST(Unbiased, Examples) {
    const auto planar = build_planar(Field::create(3, 1));
    EXPECT_TRUE(verify_unbiased(planar.bases[0], planar.bases[1]).pass);
    const auto self = verify_unbiased(planar.bases[0], planar.bases[0]);
    EXPECT_FALSE(self.pass);
    EXPECT_EQ(self.value.value, 9);

    const auto ring = build_galois_ring(GaloisRing::create(2));
    EXPECT_TRUE(verify_unbiased(ring.bases[0], ring.bases[2]).pass);
    for (const auto& u : ring.bases[0]) {
        for (const auto& v : ring.bases[2]) {
            EXPECT_EQ(inner_product_sq(u, v).value, 4);
            EXPECT_NEAR(oracle::overlap(u.entries, v.entries, 4), 4.0 / 16.0, 1e-12);
        }
    }
}

TEST(VerifyFamily, PlanarZ5HistogramMatchesPairCounts) {
    const auto fam = build_planar(Field::create(5, 1));
    const auto rep = verify_family(fam);
    EXPECT_TRUE(rep.pass);
    const std::uint64_t q = 5;
    // q self pairs per basis, C(q,2) within-basis pairs per basis, q^2 pairs per basis pair
    const std::map<std::int64_t, std::uint64_t> expected{
        {0, q * (q * (q - 1) / 2)}, {5, (q * (q - 1) / 2) * q * q}, {25, q * q}};
    EXPECT_EQ(rep.histogram, expected);
    EXPECT_EQ(rep.histogram.at(0), 50U);
    EXPECT_EQ(rep.histogram.at(5), 250U);
    EXPECT_EQ(rep.non_rational, 0U);
}

TEST(VerifyFamily, AlltopZ5Passes) {
    const auto fam = build_alltop(Field::create(5, 1));
    const auto rep = verify_family(fam);
    EXPECT_TRUE(rep.pass);
    for (const auto& ba : fam.bases) {
        for (const auto& bb : fam.bases) {
            for (const auto& u : ba) {
                for (const auto& v : bb) {
                    const double f = oracle::overlap(u.entries, v.entries, 5);
                    ASSERT_TRUE(std::abs(f) < 1e-9 || std::abs(f - 0.2) < 1e-9 || std::abs(f - 1) < 1e-9);
                }
            }
        }
    }
}

TEST(VerifyFamily, SymplecticGf27Passes) {
    EXPECT_TRUE(verify_family(build_symplectic(Field::create(3, 3), 1)).pass);
}

TEST(VerifyFamily, CorruptedEntryFails) {
    auto fam = build_planar(Field::create(5, 1));
    fam.bases[2][3].entries[1] = static_cast<std::uint8_t>((fam.bases[2][3].entries[1] + 1) % 5);
    const auto rep = verify_family(fam);
    EXPECT_FALSE(rep.pass);
    EXPECT_GT(rep.failure_count, 0U);
}

TEST(VerifyFamily, RandomSingleEntryMutationsFail) {
    std::mt19937_64 rng(2024);
    for (const auto& base : {build_planar(Field::create(3, 2)), build_galois_ring(GaloisRing::create(3))}) {
        for (int t = 0; t < 20; ++t) {
            auto fam = base;
            const std::size_t a = rng() % fam.bases.size(), b = rng() % fam.dimension, x = rng() % fam.dimension;
            const auto delta = static_cast<std::uint8_t>(1 + rng() % (fam.root_order - 1));
            auto& e = fam.bases[a][b].entries[x];
            e = static_cast<std::uint8_t>((e + delta) % fam.root_order);
            EXPECT_FALSE(verify_family(fam).pass);
        }
    }
}

TEST(VerifyFamily, MalformedFamilyFailsShapeCheck) {
    auto fam = build_planar(Field::create(3, 1));
    fam.bases[1].pop_back();
    EXPECT_FALSE(verify_family(fam).pass);
    auto fam2 = build_planar(Field::create(3, 1));
    fam2.bases[0][0].entries[0] = 7;
    const auto rep = verify_family(fam2);
    EXPECT_FALSE(rep.pass);
    EXPECT_EQ(rep.failures.front().kind, "entry");
}

TEST(VerifyFamily, SampledModeIsSeededAndDeterministic) {
    const auto fam = build_planar(Field::create(3, 2));
    const auto a = verify_family(fam, VerifyMode::sampled(5, 99));
    const auto b = verify_family(fam, VerifyMode::sampled(5, 99));
    EXPECT_TRUE(a.pass);
    EXPECT_EQ(a.histogram, b.histogram);
    EXPECT_EQ(a.pairs_checked, 9U * 5U + 36U * 5U);
}

TEST(VerifyFamily, FullModeLimit) {
    const auto fam = build_planar(Field::create(7, 2));  // q = 49 fine
    EXPECT_NO_THROW(verify_family(fam, VerifyMode::sampled(1, 0)));
    MubFamily big;
    big.dimension = 243;
    EXPECT_THROW(verify_family(big), Error);
}

}  // namespace
}  // namespace mubs
