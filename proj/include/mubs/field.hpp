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
 * @file field.hpp
 * @brief GF(p^n) for odd p with table-driven arithmetic.
 *
 * An element is stored packed: the coefficient vector (c_0, ..., c_{n-1}) of
 * its polynomial representative is the integer sum c_i p^i. The packed value
 * doubles as the element's enumeration index, so index 0 is zero and index 1
 * is one. The root of the modulus is the packed value p (for n >= 2).
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mubs/error.hpp"
#include "mubs/poly.hpp"

namespace mubs {

struct FieldElement {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class Field {
public:
    /// Largest supported field order; log tables are dense.
    static constexpr std::uint64_t kMaxOrder = 1U << 20;

    static Field create(std::uint32_t p, unsigned n, std::optional<Poly> modulus = std::nullopt) {
        if (!is_prime(p) || p == 2) {
            throw Error(ErrorCode::NonPrime, "characteristic " + std::to_string(p) + " is not an odd prime");
        }
        if (n < 1) throw Error(ErrorCode::InvalidDegree, "extension degree must be >= 1");
        const std::uint64_t q = ipow(p, n);
        if (q > kMaxOrder) throw Error(ErrorCode::TooLarge, "field order " + std::to_string(q) + " exceeds limit");

        Poly f;
        if (modulus) {
            f = *modulus;
            poly::trim(f);
            if (poly::degree(f) != static_cast<int>(n) || f.back() != 1) {
                throw Error(ErrorCode::InvalidModulus, "modulus must be monic of degree " + std::to_string(n));
            }
            for (auto c : f) {
                if (c >= p) throw Error(ErrorCode::InvalidModulus, "modulus coefficient out of range");
            }
            if (!poly::is_irreducible(f, p)) {
                throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over Z_" + std::to_string(p));
            }
        } else {
            f = poly::smallest_irreducible(static_cast<int>(n), p);
        }
        return Field(p, n, std::move(f));
    }

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return n_; }
    std::uint32_t order() const noexcept { return q_; }
    const Poly& modulus() const noexcept { return modulus_; }
    FieldElement primitive_element() const noexcept { return exp_[1]; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    FieldElement element(std::uint32_t index) const noexcept { return {index}; }
    /// Image of an integer under Z -> Z_p -> GF(p^n).
    FieldElement scalar(std::int64_t r) const noexcept {
        const auto p = static_cast<std::int64_t>(p_);
        return {static_cast<std::uint32_t>(((r % p) + p) % p)};
    }

    std::vector<std::uint32_t> coeffs(FieldElement x) const {
        std::vector<std::uint32_t> c(n_);
        for (unsigned i = 0; i < n_; ++i) {
            c[i] = x.value % p_;
            x.value /= p_;
        }
        return c;
    }

    FieldElement from_coeffs(std::span<const std::uint32_t> c) const {
        std::uint32_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i] % p_;
        return {v};
    }

    FieldElement add(FieldElement a, FieldElement b) const noexcept {
        std::uint32_t r = 0, place = 1;
        while (a.value != 0 || b.value != 0) {
            std::uint32_t d = a.value % p_ + b.value % p_;
            if (d >= p_) d -= p_;
            r += d * place;
            place *= p_;
            a.value /= p_;
            b.value /= p_;
        }
        return {r};
    }

    FieldElement neg(FieldElement a) const noexcept {
        std::uint32_t r = 0, place = 1;
        while (a.value != 0) {
            const std::uint32_t d = a.value % p_;
            r += (d == 0 ? 0 : p_ - d) * place;
            place *= p_;
            a.value /= p_;
        }
        return {r};
    }

    FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }

    FieldElement mul(FieldElement a, FieldElement b) const noexcept {
        if (a.value == 0 || b.value == 0) return {0};
        std::uint32_t e = log_[a.value] + log_[b.value];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }

    FieldElement inv(FieldElement a) const {
        if (a.value == 0) throw Error(ErrorCode::InvalidParameters, "zero has no inverse");
        return exp_[(q_ - 1 - log_[a.value]) % (q_ - 1)];
    }

    FieldElement pow(FieldElement a, std::uint64_t e) const noexcept {
        if (e == 0) return {1};
        if (a.value == 0) return {0};
        return exp_[static_cast<std::uint32_t>((std::uint64_t{log_[a.value]} * (e % (q_ - 1))) % (q_ - 1))];
    }

    /// x -> x^p.
    FieldElement frobenius(FieldElement x) const noexcept { return pow(x, p_); }

    /// Absolute trace to Z_p: sum of the n Frobenius conjugates.
    std::uint32_t trace(FieldElement x) const noexcept { return trace_[x.value]; }

    /// Evaluate a polynomial whose coefficients are field elements (ascending).
    FieldElement evaluate(std::span<const FieldElement> coeffs, FieldElement x) const noexcept {
        FieldElement acc{0};
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = add(mul(acc, x), coeffs[i]);
        return acc;
    }

private:
    Field(std::uint32_t p, unsigned n, Poly modulus)
        : p_(p), n_(n), q_(static_cast<std::uint32_t>(ipow(p, n))), modulus_(std::move(modulus)) {
        build_tables();
    }

    Poly to_poly(std::uint32_t v) const {
        Poly a(n_);
        for (unsigned i = 0; i < n_; ++i) {
            a[i] = v % p_;
            v /= p_;
        }
        poly::trim(a);
        return a;
    }

    std::uint32_t from_poly(const Poly& a) const {
        std::uint32_t v = 0;
        for (std::size_t i = a.size(); i-- > 0;) v = v * p_ + a[i];
        return v;
    }

    bool is_primitive(std::uint32_t candidate) const {
        const Poly g = to_poly(candidate);
        const std::uint64_t group = q_ - 1;
        if (poly::powmod(g, group, modulus_, p_) != Poly{1}) return false;
        for (auto r : prime_factors(group)) {
            if (poly::powmod(g, group / r, modulus_, p_) == Poly{1}) return false;
        }
        return true;
    }

    void build_tables() {
        std::uint32_t g = 1;
        if (q_ > 2) {
            for (g = 2; g < q_; ++g) {
                if (is_primitive(g)) break;
            }
        }
        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        const Poly gp = to_poly(g);
        Poly cur{1};
        for (std::uint32_t i = 0; i + 1 < q_; ++i) {
            const std::uint32_t v = from_poly(cur);
            exp_[i] = {v};
            log_[v] = i;
            cur = poly::mulmod(cur, gp, modulus_, p_);
        }
        trace_.assign(q_, 0);
        for (std::uint32_t v = 0; v < q_; ++v) {
            FieldElement acc{0}, conj{v};
            for (unsigned k = 0; k < n_; ++k) {
                acc = add(acc, conj);
                conj = frobenius(conj);
            }
            // acc lies in the prime subfield, i.e. its packed value is < p
            trace_[v] = acc.value;
        }
    }

    std::uint32_t p_;
    unsigned n_;
    std::uint32_t q_;
    Poly modulus_;
    std::vector<FieldElement> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> trace_;
};

struct PlanarVerdict {
    bool planar = false;
    /// Shift a != 0 whose difference map x -> f(x+a) - f(x) is not a bijection.
    std::optional<FieldElement> witness;
};

/// Brute-force planarity test of a function given by its value table
/// (indexed by enumeration index). O(q^2).
inline PlanarVerdict planar_check(const Field& field, std::span<const FieldElement> table) {
    const std::uint32_t q = field.order();
    if (table.size() != q) throw Error(ErrorCode::LengthMismatch, "function table must have q entries");
    std::vector<char> seen(q);
    for (std::uint32_t a = 1; a < q; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::uint32_t x = 0; x < q; ++x) {
            const auto shifted = field.add(FieldElement{x}, FieldElement{a});
            const auto diff = field.sub(table[shifted.value], table[x]);
            if (seen[diff.value]) return {false, FieldElement{a}};
            seen[diff.value] = 1;
        }
    }
    return {true, std::nullopt};
}

/// Value table of a polynomial with field coefficients.
inline std::vector<FieldElement> function_table(const Field& field, std::span<const FieldElement> coeffs) {
    std::vector<FieldElement> t(field.order());
    for (std::uint32_t x = 0; x < field.order(); ++x) t[x] = field.evaluate(coeffs, FieldElement{x});
    return t;
}

}  // namespace mubs
