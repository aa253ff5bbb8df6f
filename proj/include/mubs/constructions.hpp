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
 * @file constructions.hpp
 * @brief The four complete-MUB constructions as exponent matrices.
 *
 * Each builder returns bases[i][j][x], an exponent in Z_m for the x-th
 * coordinate, with i, j, x running over the fixed element enumeration:
 *
 *   planar      bases[a][b][x] = tr(a Pi(x) + b x)                      m = p
 *   alltop      bases[a][b][x] = tr((x + a)^3 + b (x + a))              m = p
 *   symplectic  bases[b][a][x] = tr(a x + b x^(p^(n-s)+1)
 *                                     + b^(p^s) x^(p^s+1))             m = p
 *   galois-ring bases[a][b][x] = tr((a + 2b) x),  a, b, x in T_n       m = 4
 *
 * A symplectic basis collects the vectors sharing the quadratic parameter b;
 * within it the linear parameter a varies, so two members differ by a
 * character tr((a - c) x) and are orthogonal.
 */

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mubs/error.hpp"
#include "mubs/family.hpp"
#include "mubs/field.hpp"
#include "mubs/galois_ring.hpp"

namespace mubs {

namespace detail {

inline void check_family_size(std::uint64_t q) {
    if (q * q * q > (std::uint64_t{1} << 28)) {
        throw Error(ErrorCode::TooLarge, "family of dimension " + std::to_string(q) + " is too large to store");
    }
}

inline ExponentVector make_row(std::uint32_t q, std::uint32_t m) {
    return ExponentVector{std::vector<std::uint8_t>(q), m};
}

inline FamilyParams field_params(const Field& f) {
    FamilyParams params;
    params.p = f.characteristic();
    params.n = f.degree();
    params.modulus = f.modulus();
    return params;
}

/// t[x] = tr(c * g(x)) for every x, given the table g.
inline std::vector<std::uint8_t> trace_row(const Field& f, FieldElement c, const std::vector<FieldElement>& g) {
    std::vector<std::uint8_t> out(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) out[x] = static_cast<std::uint8_t>(f.trace(f.mul(c, g[x])));
    return out;
}

}  // namespace detail

inline std::vector<std::uint32_t> default_planar_poly() { return {0, 0, 1}; }

inline MubFamily build_planar(const Field& f, std::vector<std::uint32_t> planar_poly = default_planar_poly()) {
    const std::uint32_t q = f.order();
    detail::check_family_size(q);
    std::vector<FieldElement> coeffs;
    for (auto c : planar_poly) {
        if (c >= q) throw Error(ErrorCode::InvalidParameters, "planar coefficient index out of range");
        coeffs.push_back(FieldElement{c});
    }
    const auto pi = function_table(f, coeffs);
    const auto verdict = planar_check(f, pi);
    if (!verdict.planar) {
        throw Error(ErrorCode::NotPlanar,
                    "difference map is not a bijection for shift " + std::to_string(verdict.witness->value));
    }

    std::vector<FieldElement> identity(q);
    for (std::uint32_t x = 0; x < q; ++x) identity[x] = FieldElement{x};

    MubFamily fam;
    fam.dimension = q;
    fam.root_order = f.characteristic();
    fam.construction = Construction::Planar;
    fam.params = detail::field_params(f);
    fam.params.planar_poly = std::move(planar_poly);
    fam.bases.assign(q, {});

    const std::uint32_t p = f.characteristic();
    std::vector<std::vector<std::uint8_t>> linear(q);
    for (std::uint32_t b = 0; b < q; ++b) linear[b] = detail::trace_row(f, FieldElement{b}, identity);
    for (std::uint32_t a = 0; a < q; ++a) {
        const auto quad = detail::trace_row(f, FieldElement{a}, pi);
        auto& basis = fam.bases[a];
        basis.reserve(q);
        for (std::uint32_t b = 0; b < q; ++b) {
            auto row = detail::make_row(q, p);
            for (std::uint32_t x = 0; x < q; ++x) row.entries[x] = static_cast<std::uint8_t>((quad[x] + linear[b][x]) % p);
            basis.push_back(std::move(row));
        }
    }
    return fam;
}

inline MubFamily build_alltop(const Field& f) {
    const std::uint32_t p = f.characteristic();
    if (p < 5) throw Error(ErrorCode::CharacteristicTooSmall, "construction needs characteristic p >= 5");
    const std::uint32_t q = f.order();
    detail::check_family_size(q);

    MubFamily fam;
    fam.dimension = q;
    fam.root_order = p;
    fam.construction = Construction::Alltop;
    fam.params = detail::field_params(f);
    fam.bases.assign(q, {});

    for (std::uint32_t a = 0; a < q; ++a) {
        std::vector<FieldElement> shifted(q), cubed(q);
        for (std::uint32_t x = 0; x < q; ++x) {
            shifted[x] = f.add(FieldElement{x}, FieldElement{a});
            cubed[x] = f.pow(shifted[x], 3);
        }
        auto& basis = fam.bases[a];
        basis.reserve(q);
        for (std::uint32_t b = 0; b < q; ++b) {
            auto row = detail::make_row(q, p);
            for (std::uint32_t x = 0; x < q; ++x) {
                const auto arg = f.add(cubed[x], f.mul(FieldElement{b}, shifted[x]));
                row.entries[x] = static_cast<std::uint8_t>(f.trace(arg));
            }
            basis.push_back(std::move(row));
        }
    }
    return fam;
}

/// Parameter check for the symplectic construction: n odd, gcd(s, n) = 1 and 1 <= s < n/2.
inline bool symplectic_parameters_valid(unsigned n, unsigned s) {
    return n % 2 == 1 && s >= 1 && 2 * s < n && std::gcd(s, n) == 1;
}

inline std::optional<unsigned> default_symplectic_s(unsigned n) {
    for (unsigned s = 1; 2 * s < n; ++s) {
        if (symplectic_parameters_valid(n, s)) return s;
    }
    return std::nullopt;
}

inline MubFamily build_symplectic(const Field& f, std::optional<unsigned> s_opt = std::nullopt) {
    const unsigned n = f.degree();
    const unsigned s = s_opt ? *s_opt : default_symplectic_s(n).value_or(0);
    if (!symplectic_parameters_valid(n, s)) {
        throw Error(ErrorCode::InvalidParameters, "need n odd, gcd(s, n) = 1 and 1 <= s < n/2 (n = " +
                                                      std::to_string(n) + ", s = " + std::to_string(s) + ")");
    }
    const std::uint32_t p = f.characteristic();
    const std::uint32_t q = f.order();
    detail::check_family_size(q);

    const std::uint64_t ps = ipow(p, s);
    const std::uint64_t pns = ipow(p, n - s);
    std::vector<FieldElement> identity(q), first(q), second(q);
    for (std::uint32_t x = 0; x < q; ++x) {
        identity[x] = FieldElement{x};
        first[x] = f.pow(FieldElement{x}, pns + 1);
        second[x] = f.pow(FieldElement{x}, ps + 1);
    }

    MubFamily fam;
    fam.dimension = q;
    fam.root_order = p;
    fam.construction = Construction::Symplectic;
    fam.params = detail::field_params(f);
    fam.params.s = s;
    fam.bases.assign(q, {});

    std::vector<std::vector<std::uint8_t>> linear(q);
    for (std::uint32_t a = 0; a < q; ++a) linear[a] = detail::trace_row(f, FieldElement{a}, identity);
    for (std::uint32_t b = 0; b < q; ++b) {
        const FieldElement be{b};
        const auto quad1 = detail::trace_row(f, be, first);
        const auto quad2 = detail::trace_row(f, f.pow(be, ps), second);
        auto& basis = fam.bases[b];
        basis.reserve(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            auto row = detail::make_row(q, p);
            for (std::uint32_t x = 0; x < q; ++x) {
                row.entries[x] = static_cast<std::uint8_t>((linear[a][x] + quad1[x] + quad2[x]) % p);
            }
            basis.push_back(std::move(row));
        }
    }
    return fam;
}

inline MubFamily build_galois_ring(const GaloisRing& ring) {
    const auto& teich = ring.teichmuller();
    const auto q = static_cast<std::uint32_t>(teich.size());
    detail::check_family_size(q);

    MubFamily fam;
    fam.dimension = q;
    fam.root_order = 4;
    fam.construction = Construction::GaloisRing;
    fam.params.p = 2;
    fam.params.n = ring.degree();
    fam.params.modulus = ring.modulus();
    fam.bases.assign(q, {});

    for (std::uint32_t a = 0; a < q; ++a) {
        auto& basis = fam.bases[a];
        basis.reserve(q);
        for (std::uint32_t b = 0; b < q; ++b) {
            const RingElement alpha = ring.add(teich[a], ring.twice(teich[b]));
            auto row = detail::make_row(q, 4);
            for (std::uint32_t x = 0; x < q; ++x) {
                row.entries[x] = static_cast<std::uint8_t>(ring.trace(ring.mul(alpha, teich[x])));
            }
            basis.push_back(std::move(row));
        }
    }
    return fam;
}

}  // namespace mubs
