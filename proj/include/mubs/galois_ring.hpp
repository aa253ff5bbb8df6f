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

#pragma once

/**
 * @file galois_ring.hpp
 * @brief The Galois ring GR(4, n) = Z_4[x] / (f), f a basic irreducible.
 *
 * Elements are packed base-4 coefficient vectors, the same scheme Field uses
 * with p = 4. Every element r has a unique 2-adic form r = a + 2b with a, b in
 * the Teichmuller set T_n = {0} u <xi>, |T_n| = 2^n. The Teichmuller lift of r
 * is r^(2^n): the factor (1 + 2s) of a unit squares to 1, and 2s squares to 0.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mubs/error.hpp"
#include "mubs/poly.hpp"

namespace mubs {

struct RingElement {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(RingElement, RingElement) = default;
};

class GaloisRing {
public:
    static constexpr unsigned kMaxDegree = 10;

    static GaloisRing create(unsigned n, std::optional<Poly> modulus = std::nullopt) {
        if (n < 1 || n > kMaxDegree) {
            throw Error(ErrorCode::InvalidDegree, "ring degree must be in [1, " + std::to_string(kMaxDegree) + "]");
        }
        Poly f;
        if (modulus) {
            f = *modulus;
            poly::trim(f);
            if (poly::degree(f) != static_cast<int>(n) || f.back() != 1) {
                throw Error(ErrorCode::InvalidModulus, "modulus must be monic of degree " + std::to_string(n));
            }
            for (auto c : f) {
                if (c >= 4) throw Error(ErrorCode::InvalidModulus, "modulus coefficient out of range");
            }
            if (!poly::is_irreducible(poly::normalized(f, 2), 2)) {
                throw Error(ErrorCode::ReducibleModulus, "modulus is not irreducible mod 2");
            }
        } else {
            // x itself is excluded in degree 1: its root 0 is not a unit
            f = hensel_lift(n == 1 ? Poly{1, 1} : poly::smallest_irreducible(static_cast<int>(n), 2));
        }
        return GaloisRing(n, std::move(f));
    }

    /// Graeffe squaring: g(x^2) = (-1)^n f(x) f(-x) mod 4, iterated to a fixed
    /// point. The fixed point divides x^(2^n - 1) - 1 over Z_4.
    static Poly hensel_lift(const Poly& binary) {
        Poly f = poly::normalized(binary, 4);
        const int n = poly::degree(f);
        for (int iter = 0; iter < 16; ++iter) {
            Poly minus = f;
            for (std::size_t i = 1; i < minus.size(); i += 2) minus[i] = (4 - minus[i]) % 4;
            const Poly prod = poly::mul(f, minus, 4);
            Poly next(static_cast<std::size_t>(n) + 1, 0);
            for (int i = 0; i <= n; ++i) {
                std::uint32_t c = prod[static_cast<std::size_t>(2 * i)];
                if (n % 2 == 1) c = (4 - c) % 4;
                next[static_cast<std::size_t>(i)] = c;
            }
            poly::trim(next);
            if (next == f) break;
            f = std::move(next);
        }
        return f;
    }

    unsigned degree() const noexcept { return n_; }
    const Poly& modulus() const noexcept { return modulus_; }
    std::uint32_t size() const noexcept { return size_; }
    std::uint32_t teichmuller_size() const noexcept { return 1U << n_; }

    /// Ordered 0, 1, xi, xi^2, ..., xi^(2^n - 2).
    const std::vector<RingElement>& teichmuller() const noexcept { return teich_; }
    RingElement teichmuller_generator() const noexcept { return teich_.size() > 2 ? teich_[2] : teich_[1]; }
    /// Root of the modulus, the packed element x.
    RingElement root() const noexcept { return n_ == 1 ? RingElement{(4 - modulus_[0]) % 4} : RingElement{4}; }

    RingElement zero() const noexcept { return {0}; }
    RingElement one() const noexcept { return {1}; }
    RingElement scalar(std::int64_t r) const noexcept { return {static_cast<std::uint32_t>(((r % 4) + 4) % 4)}; }

    std::vector<std::uint32_t> coeffs(RingElement x) const {
        std::vector<std::uint32_t> c(n_);
        for (unsigned i = 0; i < n_; ++i) c[i] = (x.value >> (2 * i)) & 3U;
        return c;
    }

    RingElement from_coeffs(const std::vector<std::uint32_t>& c) const {
        std::uint32_t v = 0;
        for (std::size_t i = 0; i < c.size() && i < n_; ++i) v |= (c[i] & 3U) << (2 * i);
        return {v};
    }

    RingElement add(RingElement a, RingElement b) const noexcept {
        std::uint32_t r = 0;
        for (unsigned i = 0; i < n_; ++i) {
            const std::uint32_t d = ((a.value >> (2 * i)) + (b.value >> (2 * i))) & 3U;
            r |= d << (2 * i);
        }
        return {r};
    }

    RingElement neg(RingElement a) const noexcept {
        std::uint32_t r = 0;
        for (unsigned i = 0; i < n_; ++i) {
            const std::uint32_t d = (4 - ((a.value >> (2 * i)) & 3U)) & 3U;
            r |= d << (2 * i);
        }
        return {r};
    }

    RingElement sub(RingElement a, RingElement b) const noexcept { return add(a, neg(b)); }

    RingElement mul(RingElement a, RingElement b) const {
        std::uint32_t prod[2 * kMaxDegree] = {};
        for (unsigned i = 0; i < n_; ++i) {
            const std::uint32_t ai = (a.value >> (2 * i)) & 3U;
            if (ai == 0) continue;
            for (unsigned j = 0; j < n_; ++j) prod[i + j] += ai * ((b.value >> (2 * j)) & 3U);
        }
        // reduce by the monic modulus, top degree first
        for (unsigned d = 2 * n_ - 1; d-- > n_;) {
            const std::uint32_t c = prod[d] & 3U;
            if (c == 0) continue;
            for (unsigned i = 0; i < n_; ++i) prod[d - n_ + i] += 4 * 4 - c * modulus_[i];
            prod[d] = 0;
        }
        std::uint32_t r = 0;
        for (unsigned i = 0; i < n_; ++i) r |= (prod[i] & 3U) << (2 * i);
        return {r};
    }

    RingElement pow(RingElement a, std::uint64_t e) const {
        RingElement result{1};
        while (e > 0) {
            if (e & 1U) result = mul(result, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return result;
    }

    bool is_unit(RingElement a) const noexcept { return reduce_mod2(a) != 0; }

    /// Packed base-2 coefficients of a mod 2.
    std::uint32_t reduce_mod2(RingElement a) const noexcept {
        std::uint32_t r = 0;
        for (unsigned i = 0; i < n_; ++i) r |= ((a.value >> (2 * i)) & 1U) << i;
        return r;
    }

    RingElement teichmuller_lift(RingElement a) const { return pow(a, std::uint64_t{1} << n_); }

    /// (a, b) with x = a + 2b, a, b in T_n.
    std::pair<RingElement, RingElement> decompose(RingElement x) const {
        const RingElement a = teichmuller_lift(x);
        const RingElement twice_b = sub(x, a);
        std::uint32_t half = 0;
        for (unsigned i = 0; i < n_; ++i) half |= (((twice_b.value >> (2 * i)) & 3U) >> 1) << (2 * i);
        return {a, teichmuller_lift(RingElement{half})};
    }

    RingElement twice(RingElement a) const noexcept { return add(a, a); }

    /// Generalized Frobenius: a + 2b -> a^2 + 2b^2.
    RingElement frobenius(RingElement x) const {
        const auto [a, b] = decompose(x);
        return add(mul(a, a), twice(mul(b, b)));
    }

    /// Trace to Z_4: sum of the n generalized-Frobenius conjugates.
    std::uint32_t trace(RingElement x) const {
        RingElement acc{0};
        for (unsigned k = 0; k < n_; ++k) {
            acc = add(acc, x);
            x = frobenius(x);
        }
        return acc.value;  // lies in Z_4, i.e. packed value < 4
    }

    /// Index of a Teichmuller element in the enumeration, or -1.
    int teichmuller_index(RingElement t) const noexcept {
        const auto v = t.value;
        return v < teich_index_.size() ? teich_index_[v] : -1;
    }

private:
    GaloisRing(unsigned n, Poly modulus)
        : n_(n), size_(1U << (2 * n)), modulus_(std::move(modulus)) {
        modulus_.resize(n_ + 1, 0);
        build_teichmuller();
    }

    void build_teichmuller() {
        const std::uint64_t group = (std::uint64_t{1} << n_) - 1;
        const auto factors = prime_factors(group);
        auto full_order = [&](RingElement g) {
            if (pow(g, group) != one()) return false;
            for (auto r : factors) {
                if (pow(g, group / r) == one()) return false;
            }
            return true;
        };
        RingElement gen = one();
        if (group > 1) {
            const RingElement lifted_root = teichmuller_lift(root());
            if (full_order(lifted_root)) {
                gen = lifted_root;
            } else {
                for (std::uint32_t v = 2; v < size_; ++v) {
                    const RingElement u{v};
                    if (!is_unit(u)) continue;
                    const RingElement t = teichmuller_lift(u);
                    if (full_order(t)) {
                        gen = t;
                        break;
                    }
                }
            }
        }
        teich_.clear();
        teich_.push_back(zero());
        RingElement cur = one();
        for (std::uint64_t k = 0; k < group; ++k) {
            teich_.push_back(cur);
            cur = mul(cur, gen);
        }
        teich_index_.assign(size_, -1);
        for (std::size_t i = 0; i < teich_.size(); ++i) teich_index_[teich_[i].value] = static_cast<int>(i);
    }

    unsigned n_;
    std::uint32_t size_;
    Poly modulus_;
    std::vector<RingElement> teich_;
    std::vector<int> teich_index_;
};

struct TraceKernelVerdict {
    bool pass = false;
    std::size_t kernel_size = 0;
    std::size_t image_size = 0;
    std::optional<RingElement> witness;
};

/// Exhaustive check that {a : tr(a) = 0} equals {b - phi(b) : b in R}.
inline TraceKernelVerdict trace_kernel_check(const GaloisRing& ring) {
    if (ring.size() > 65536) throw Error(ErrorCode::TooLarge, "exhaustion limited to 4^n <= 65536");
    std::vector<char> in_kernel(ring.size()), in_image(ring.size());
    TraceKernelVerdict out;
    for (std::uint32_t v = 0; v < ring.size(); ++v) {
        const RingElement x{v};
        if (ring.trace(x) == 0) {
            in_kernel[v] = 1;
            ++out.kernel_size;
        }
        const auto d = ring.sub(x, ring.frobenius(x));
        if (!in_image[d.value]) {
            in_image[d.value] = 1;
            ++out.image_size;
        }
    }
    out.pass = true;
    for (std::uint32_t v = 0; v < ring.size(); ++v) {
        if (in_kernel[v] != in_image[v]) {
            out.pass = false;
            out.witness = RingElement{v};
            break;
        }
    }
    return out;
}

}  // namespace mubs
