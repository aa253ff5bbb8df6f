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

#include "mubs/galois_ring.hpp"

#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace mubs {
namespace {

std::vector<int> as_ints(const Poly& p) { return {p.begin(), p.end()}; }

TEST(GaloisRing, DegreeOneIsZ4) {
    const auto r = GaloisRing::create(1);
    EXPECT_EQ(r.size(), 4U);
    ASSERT_EQ(r.teichmuller().size(), 2U);
    EXPECT_EQ(r.teichmuller()[0], r.zero());
    EXPECT_EQ(r.teichmuller()[1], r.one());
    EXPECT_EQ(r.trace(RingElement{3}), 3U);
}

TEST(GaloisRing, DefaultLiftDividesUnitRootPolynomial) {
    for (unsigned n = 1; n <= 6; ++n) {
        const auto r = GaloisRing::create(n);
        const auto f = as_ints(r.modulus());
        ASSERT_EQ(f.size(), n + 1);
        // x^(2^n - 1) == 1 mod (f, 4)
        std::vector<int> x(n, 0);
        if (n == 1) {
            x[0] = (4 - f[0]) % 4;  // the root of x + f0 is -f0
        } else {
            x[1] = 1;
        }
        std::vector<int> one(n, 0);
        one[0] = 1;
        EXPECT_EQ(oracle::pow_mod(x, (1U << n) - 1, f, 4), one) << "n = " << n;
    }
    EXPECT_EQ(GaloisRing::create(2).modulus(), (Poly{1, 1, 1}));
    EXPECT_EQ(GaloisRing::create(3).modulus(), (Poly{3, 1, 2, 1}));
}

TEST(GaloisRing, SecondDegreeWithMinusOneMiddleCoefficient) {
    // h(f) = f^2 - f + 1 = f^2 + 3f + 1 over Z_4, xi = f
    const auto r = GaloisRing::create(2, Poly{1, 3, 1});
    const RingElement xi{4};
    const RingElement xi_plus_3 = r.add(xi, RingElement{3});
    EXPECT_EQ(r.mul(xi, xi), xi_plus_3);
    EXPECT_EQ(r.sub(xi, r.mul(xi, xi)), r.one());
    // xi itself has xi^3 = -1, so the Teichmuller set is {0, 1, 3 xi, xi + 3}
    EXPECT_EQ(r.pow(xi, 3), r.scalar(3));
    const std::set<RingElement> teich(r.teichmuller().begin(), r.teichmuller().end());
    EXPECT_EQ(teich, (std::set<RingElement>{r.zero(), r.one(), r.mul(r.scalar(3), xi), xi_plus_3}));
    // tr(xi) = xi + phi(xi) with xi = t + 2t, t = 3 xi, phi(xi) = 3 t^2; hand value 1
    EXPECT_EQ(r.trace(xi), 1U);
}

TEST(GaloisRing, DefaultSecondDegreeTrace) {
    const auto r = GaloisRing::create(2);
    EXPECT_EQ(r.trace(r.one()), 2U);
    const RingElement xi = r.teichmuller_generator();
    EXPECT_EQ(xi, r.root());
    // xi + xi^2 = xi + (3 xi + 3) = 3
    EXPECT_EQ(r.trace(xi), 3U);
}

TEST(GaloisRing, RejectsBadModulus) {
    EXPECT_THROW(GaloisRing::create(0), Error);
    EXPECT_THROW(GaloisRing::create(2, Poly{1, 0, 1}), Error);  // x^2 + 1 = (x + 1)^2 mod 2
    EXPECT_THROW(GaloisRing::create(2, Poly{1, 1, 2}), Error);  // not monic
}

TEST(GaloisRing, MultiplicationMatchesSchoolbookOracle) {
    for (unsigned n = 2; n <= 4; ++n) {
        const auto r = GaloisRing::create(n);
        const auto f = as_ints(r.modulus());
        for (std::uint32_t a = 0; a < r.size(); a += 3) {
            for (std::uint32_t b = 0; b < r.size(); b += 7) {
                const auto expect = oracle::pack(oracle::mul_mod(oracle::digits(a, n, 4), oracle::digits(b, n, 4), f, 4), 4);
                ASSERT_EQ(r.mul(RingElement{a}, RingElement{b}).value, expect);
            }
        }
    }
}

TEST(GaloisRing, TeichmullerInvariants) {
    for (unsigned n = 1; n <= 5; ++n) {
        const auto r = GaloisRing::create(n);
        const auto& t = r.teichmuller();
        ASSERT_EQ(t.size(), std::size_t{1} << n);
        std::set<RingElement> members(t.begin(), t.end());
        std::set<std::uint32_t> residues;
        for (const auto& x : t) {
            residues.insert(r.reduce_mod2(x));
            if (x != r.zero()) {
                EXPECT_EQ(r.pow(x, (std::uint64_t{1} << n) - 1), r.one());
            }
            for (const auto& y : t) ASSERT_TRUE(members.count(r.mul(x, y)));
        }
        EXPECT_EQ(residues.size(), t.size());
        EXPECT_EQ(r.teichmuller_index(r.one()), 1);
    }
}

TEST(GaloisRing, TwoAdicDecompositionIsBijective) {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto r = GaloisRing::create(n);
        const auto& t = r.teichmuller();
        std::set<RingElement> image;
        for (const auto& a : t) {
            for (const auto& b : t) {
                const auto x = r.add(a, r.twice(b));
                image.insert(x);
                const auto [da, db] = r.decompose(x);
                ASSERT_EQ(da, a);
                ASSERT_EQ(db, b);
            }
        }
        EXPECT_EQ(image.size(), r.size());
    }
}

TEST(GaloisRing, FrobeniusIsTheAutomorphismSendingXiToXiSquared) {
    // with a Teichmuller root xi the generalized Frobenius is the ring map
    // sum c_i xi^i -> sum c_i xi^(2i); evaluate that map independently
    for (unsigned n = 2; n <= 4; ++n) {
        const auto r = GaloisRing::create(n);
        ASSERT_EQ(r.teichmuller_generator(), r.root());
        const auto f = as_ints(r.modulus());
        std::vector<int> xi(n, 0);
        xi[1] = 1;
        const auto xi2 = oracle::mul_mod(xi, xi, f, 4);
        for (std::uint32_t v = 0; v < r.size(); ++v) {
            const auto c = oracle::digits(v, n, 4);
            std::vector<int> acc(n, 0), power(n, 0);
            power[0] = 1;
            for (unsigned i = 0; i < n; ++i) {
                for (unsigned k = 0; k < n; ++k) acc[k] = (acc[k] + c[i] * power[k]) % 4;
                power = oracle::mul_mod(power, xi2, f, 4);
            }
            ASSERT_EQ(r.frobenius(RingElement{v}).value, oracle::pack(acc, 4)) << "n = " << n << " v = " << v;
        }
    }
}

TEST(GaloisRing, FrobeniusIsAutomorphismOfOrderN) {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto r = GaloisRing::create(n);
        std::set<RingElement> image;
        for (std::uint32_t v = 0; v < r.size(); ++v) {
            const RingElement x{v};
            image.insert(r.frobenius(x));
            RingElement y = x;
            for (unsigned k = 0; k < n; ++k) y = r.frobenius(y);
            ASSERT_EQ(y, x);
            for (std::uint32_t w = 0; w < r.size(); w += 5) {
                const RingElement z{w};
                ASSERT_EQ(r.frobenius(r.add(x, z)), r.add(r.frobenius(x), r.frobenius(z)));
                ASSERT_EQ(r.frobenius(r.mul(x, z)), r.mul(r.frobenius(x), r.frobenius(z)));
            }
        }
        EXPECT_EQ(image.size(), r.size());
    }
}

TEST(GaloisRing, TraceIsZ4LinearAndLandsInZ4) {
    for (unsigned n = 1; n <= 3; ++n) {
        const auto r = GaloisRing::create(n);
        for (std::uint32_t v = 0; v < r.size(); ++v) {
            const RingElement x{v};
            const auto t = r.trace(x);
            ASSERT_LT(t, 4U);
            for (std::uint32_t s = 0; s < 4; ++s) ASSERT_EQ(s * t % 4, r.trace(r.mul(r.scalar(s), x)));
        }
    }
}

TEST(GaloisRing, TraceKernelIsImageOfOneMinusFrobenius) {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto v = trace_kernel_check(GaloisRing::create(n));
        EXPECT_TRUE(v.pass) << "n = " << n;
        // the trace maps onto Z_4, so the kernel has 4^(n-1) elements
        EXPECT_EQ(v.kernel_size, std::size_t{1} << (2 * (n - 1)));
        EXPECT_EQ(v.image_size, v.kernel_size);
    }
    EXPECT_EQ(trace_kernel_check(GaloisRing::create(1)).kernel_size, 1U);
}

}  // namespace
}  // namespace mubs
