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

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mubs/error.hpp"
#include "mubs/poly.hpp"

namespace mubs {

/// A unit-modulus vector (1/sqrt(q)) * (w^e_x)_x with w a primitive m-th root
/// of unity, stored by its exponents e_x in Z_m.
struct ExponentVector {
    std::vector<std::uint8_t> entries;
    std::uint32_t modulus = 0;

    std::size_t size() const noexcept { return entries.size(); }
    std::uint8_t operator[](std::size_t i) const noexcept { return entries[i]; }

    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
};

struct ExponentVectorHash {
    std::size_t operator()(const ExponentVector& v) const noexcept {
        // FNV-1a
        std::uint64_t h = 1469598103934665603ULL ^ v.modulus;
        for (auto e : v.entries) {
            h ^= e;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

enum class Construction { Planar, Alltop, Symplectic, GaloisRing };

inline std::string construction_name(Construction c) {
    switch (c) {
        case Construction::Planar: return "planar";
        case Construction::Alltop: return "alltop";
        case Construction::Symplectic: return "symplectic";
        case Construction::GaloisRing: return "galois-ring";
    }
    return "unknown";
}

inline Construction parse_construction(const std::string& name) {
    if (name == "planar") return Construction::Planar;
    if (name == "alltop") return Construction::Alltop;
    if (name == "symplectic") return Construction::Symplectic;
    if (name == "galois-ring") return Construction::GaloisRing;
    throw Error(ErrorCode::InvalidParameters, "unknown construction '" + name + "'");
}

struct FamilyParams {
    std::uint32_t p = 0;
    unsigned n = 0;
    Poly modulus;
    /// Planar function coefficients as field-element indices, ascending degree.
    std::vector<std::uint32_t> planar_poly;
    unsigned s = 0;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// q non-standard bases V_0..V_{q-1} of q exponent vectors each. The standard
/// basis E completes the set to q + 1 bases and is kept symbolic: its vectors
/// have zero entries, which exponent form cannot express.
struct MubFamily {
    std::uint32_t dimension = 0;
    std::uint32_t root_order = 0;
    Construction construction = Construction::Planar;
    FamilyParams params;
    std::vector<std::vector<ExponentVector>> bases;
    bool includes_standard_basis = true;

    std::size_t basis_count() const noexcept { return bases.size() + (includes_standard_basis ? 1 : 0); }

    /// The q^2 non-standard vectors in (basis, row) order.
    std::vector<ExponentVector> vectors() const {
        std::vector<ExponentVector> out;
        out.reserve(bases.size() * dimension);
        for (const auto& b : bases) out.insert(out.end(), b.begin(), b.end());
        return out;
    }

    friend bool operator==(const MubFamily&, const MubFamily&) = default;
};

inline ExponentVector hat_product(const ExponentVector& u, const ExponentVector& v, bool conjugate_second) {
    if (u.size() != v.size() || u.modulus != v.modulus) {
        throw Error(ErrorCode::LengthMismatch, "hat product needs equal lengths and root orders");
    }
    const std::uint32_t m = u.modulus;
    ExponentVector r{std::vector<std::uint8_t>(u.size()), m};
    for (std::size_t i = 0; i < u.size(); ++i) {
        const std::uint32_t e = conjugate_second ? u[i] + m - v[i] : u[i] + v[i];
        r.entries[i] = static_cast<std::uint8_t>(e % m);
    }
    return r;
}

inline ExponentVector scale(const ExponentVector& v, std::uint32_t r) {
    ExponentVector out{v.entries, v.modulus};
    for (auto& e : out.entries) e = static_cast<std::uint8_t>((std::uint32_t{e} * r) % v.modulus);
    return out;
}

}  // namespace mubs
