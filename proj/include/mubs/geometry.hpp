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
 * @file geometry.hpp
 * @brief Projective points over Z_p (PG) and over Z_4 (Hjelmslev, PHG).
 *
 * A PG point is the orbit of a nonzero vector under Z_p^*; its canonical
 * representative has first nonzero entry 1. A PHG point is the orbit of a
 * vector with at least one unit entry under the units {1, 3} of Z_4; its
 * representative has first unit entry 1. Two PHG points are neighbours when
 * their reductions mod 2 are the same point of PG over Z_2.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "mubs/error.hpp"
#include "mubs/module.hpp"
#include "mubs/poly.hpp"

namespace mubs {

enum class GeometryKind { PG, PHG };

struct ProjectivePoint {
    std::vector<std::uint8_t> rep;
    std::uint32_t modulus = 0;
    GeometryKind kind = GeometryKind::PG;

    friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

inline ProjectivePoint canonicalize(std::span<const std::uint8_t> v, std::uint32_t m, GeometryKind kind) {
    if (kind == GeometryKind::PHG && m != 4) throw Error(ErrorCode::InvalidParameters, "PHG is defined over Z_4");
    if (kind == GeometryKind::PG && !is_prime(m)) throw Error(ErrorCode::InvalidParameters, "PG needs a prime modulus");
    auto lead = std::find_if(v.begin(), v.end(), [&](std::uint8_t e) {
        return kind == GeometryKind::PG ? e % m != 0 : e % 2 == 1;
    });
    if (lead == v.end()) {
        throw kind == GeometryKind::PG ? Error(ErrorCode::ZeroVector, "zero vector has no projective point")
                                       : Error(ErrorCode::NoUnitEntry, "vector has no unit entry");
    }
    const std::uint32_t rho = poly::inverse_mod(*lead, m);
    ProjectivePoint pt{std::vector<std::uint8_t>(v.size()), m, kind};
    for (std::size_t i = 0; i < v.size(); ++i) pt.rep[i] = static_cast<std::uint8_t>(std::uint32_t{v[i]} * rho % m);
    return pt;
}

/// Vectors representing one point: |Z_p^*| = p - 1 for PG, |{1, 3}| = 2 for PHG.
inline std::uint32_t representative_count(GeometryKind kind, std::uint32_t m) {
    return kind == GeometryKind::PG ? m - 1 : 2;
}

/// Neighbourhood of a PHG point: its reduction mod 2, already canonical over Z_2.
inline std::vector<std::uint8_t> neighbourhood_class(const ProjectivePoint& pt) {
    if (pt.kind != GeometryKind::PHG) throw Error(ErrorCode::InvalidParameters, "neighbourhoods exist in PHG only");
    std::vector<std::uint8_t> cls(pt.rep.size());
    for (std::size_t i = 0; i < cls.size(); ++i) cls[i] = pt.rep[i] % 2;
    return cls;
}

struct PgCountIdentity {
    std::uint64_t points = 0;        // (p^(2n) - 1) / (p - 1)
    std::uint64_t represented = 0;   // (p - 1) * points + 1
    std::uint64_t mub_vectors = 0;   // q^2, the non-standard vectors of a complete set
    bool pass = false;
};

/// Odd counting identity for a (2n-1)-dimensional subspace of PG(p^n - 1, p).
inline PgCountIdentity pg_count_identity(std::uint32_t p, unsigned n) {
    PgCountIdentity out;
    const std::uint64_t top = ipow(p, 2 * n);
    out.points = (top - 1) / (p - 1);
    out.represented = (p - 1) * out.points + 1;
    const std::uint64_t q = ipow(p, n);
    out.mub_vectors = q * q;
    out.pass = out.represented == top && top == out.mub_vectors;
    return out;
}

/// Even counting identity with projective dimension m = n - 1: 2^m points in
/// each of 2^(m+1) - 1 neighbourhoods, two vectors per point. Two readings of
/// the number of added non-unit vectors are reported: 2^n and 2^m.
struct PhgCountIdentity {
    unsigned projective_dimension = 0;
    std::uint64_t points_per_neighbourhood = 0;
    std::uint64_t neighbourhoods = 0;
    std::uint64_t point_vectors = 0;
    std::uint64_t target = 0;  // 4^n, the non-standard vectors of a complete set
    std::uint64_t nonunit_two_pow_n = 0;
    std::uint64_t nonunit_two_pow_m = 0;
    bool two_pow_n_reading_holds = false;
    bool two_pow_m_reading_holds = false;
};

inline PhgCountIdentity phg_count_identity(unsigned n) {
    if (n < 1) throw Error(ErrorCode::InvalidDegree, "n must be >= 1");
    PhgCountIdentity out;
    const unsigned m = n - 1;
    out.projective_dimension = m;
    out.points_per_neighbourhood = ipow(2, m);
    out.neighbourhoods = ipow(2, m + 1) - 1;
    out.point_vectors = 2 * out.points_per_neighbourhood * out.neighbourhoods;
    out.target = ipow(4, n);
    out.nonunit_two_pow_n = ipow(2, n);
    out.nonunit_two_pow_m = ipow(2, m);
    out.two_pow_n_reading_holds = out.point_vectors + out.nonunit_two_pow_n == out.target;
    out.two_pow_m_reading_holds = out.point_vectors + out.nonunit_two_pow_m == out.target;
    return out;
}

struct PointCensus {
    GeometryKind kind = GeometryKind::PG;
    std::uint32_t modulus = 0;
    unsigned rank = 0;
    std::uint64_t vectors = 0;           // |M|
    std::uint64_t excluded = 0;          // zero (PG) or the non-unit vectors U' (PHG)
    std::vector<ProjectivePoint> points;  // sorted canonical representatives
    std::uint64_t neighbourhoods = 0;
    std::uint32_t min_representatives = 0, max_representatives = 0;
    std::uint64_t min_per_neighbourhood = 0, max_per_neighbourhood = 0;

    std::uint64_t expected_points = 0;
    std::uint64_t expected_neighbourhoods = 0;
    bool formula_ok = false;
    /// (p - 1) * #points + 1 == |M| for PG; 2 * #points + |U'| == |M| for PHG.
    bool reconciliation_ok = false;
};

/// Canonical points represented by a module M of exponent vectors.
inline PointCensus subspace_points(const ExponentSet& set) {
    const std::uint32_t m = set.modulus();
    const GeometryKind kind = m == 4 ? GeometryKind::PHG : GeometryKind::PG;
    if (!module_axioms_check(set).pass()) throw Error(ErrorCode::NotAModule, "point census needs a module");
    const auto profile = module_rank(set);

    PointCensus out;
    out.kind = kind;
    out.modulus = m;
    out.rank = profile.free_rank;
    out.vectors = set.size();

    std::map<ProjectivePoint, std::uint32_t> reps;
    for (const auto& v : set) {
        const bool has_lead = std::any_of(v.entries.begin(), v.entries.end(),
                                          [&](std::uint8_t e) { return is_unit_mod(e, m); });
        if (!has_lead) {
            ++out.excluded;
            continue;
        }
        ++reps[canonicalize(v.entries, m, kind)];
    }
    std::map<std::vector<std::uint8_t>, std::uint64_t> hoods;
    out.min_representatives = reps.empty() ? 0 : ~0U;
    for (const auto& [pt, count] : reps) {
        out.points.push_back(pt);
        out.min_representatives = std::min(out.min_representatives, count);
        out.max_representatives = std::max(out.max_representatives, count);
        if (kind == GeometryKind::PHG) ++hoods[neighbourhood_class(pt)];
    }
    if (kind == GeometryKind::PHG) {
        out.neighbourhoods = hoods.size();
        out.min_per_neighbourhood = hoods.empty() ? 0 : ~std::uint64_t{0};
        for (const auto& [cls, count] : hoods) {
            out.min_per_neighbourhood = std::min(out.min_per_neighbourhood, count);
            out.max_per_neighbourhood = std::max(out.max_per_neighbourhood, count);
        }
    }

    const std::uint64_t npoints = out.points.size();
    const std::uint32_t per_point = representative_count(kind, m);
    const bool reps_uniform = npoints == 0 || (out.min_representatives == per_point && out.max_representatives == per_point);
    if (kind == GeometryKind::PG) {
        out.expected_points = (ipow(m, out.rank) - 1) / (m - 1);
        out.formula_ok = npoints == out.expected_points && reps_uniform;
        out.reconciliation_ok = (m - 1) * npoints + 1 == out.vectors;
    } else {
        // free rank r: (4^r - 2^r) / 2 points in 2^r - 1 neighbourhoods of 2^(r-1)
        const unsigned r = out.rank;
        out.expected_points = r == 0 ? 0 : (ipow(4, r) - ipow(2, r)) / 2;
        out.expected_neighbourhoods = r == 0 ? 0 : ipow(2, r) - 1;
        const std::uint64_t per_hood = r == 0 ? 0 : ipow(2, r - 1);
        out.formula_ok = profile.is_free() && npoints == out.expected_points &&
                         out.neighbourhoods == out.expected_neighbourhoods && reps_uniform &&
                         (npoints == 0 || (out.min_per_neighbourhood == per_hood && out.max_per_neighbourhood == per_hood));
        out.reconciliation_ok = 2 * npoints + out.excluded == out.vectors;
    }
    return out;
}

/// All of Z_m^d as an exponent set (the whole geometry PG(d-1, p) or PHG(d-1, Z_4)).
inline ExponentSet full_space(std::uint32_t m, std::size_t d) {
    ExponentSet s(m, d);
    const std::uint64_t total = ipow(m, static_cast<unsigned>(d));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        ExponentVector v{std::vector<std::uint8_t>(d), m};
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < d; ++i) {
            v.entries[i] = static_cast<std::uint8_t>(t % m);
            t /= m;
        }
        s.insert(std::move(v));
    }
    s.finalize();
    return s;
}

}  // namespace mubs
