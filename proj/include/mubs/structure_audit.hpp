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
 * @file structure_audit.hpp
 * @brief Module and subspace structure of the exponent sets of a family.
 *
 * For the non-standard vectors N of a family, the derived set
 * N' = {u (.)^ v* : u, v in N} is, on exponents, M' = {x - y : x, y in M}.
 * Each derived vector is taken up to global phase: its exponents are shifted
 * so the coordinate at x = 0 is 0. Planar, symplectic and Galois-ring
 * vectors already vanish there; Alltop differences carry a constant term
 * tr(a^3 - c^3 + ba - dc) that the shift removes.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mubs/constructions.hpp"
#include "mubs/error.hpp"
#include "mubs/family.hpp"
#include "mubs/field.hpp"
#include "mubs/galois_ring.hpp"
#include "mubs/geometry.hpp"
#include "mubs/module.hpp"

namespace mubs {

inline ExponentVector phase_normalized(ExponentVector v) {
    if (v.entries.empty()) return v;
    const std::uint32_t m = v.modulus, shift = v.entries.front();
    for (auto& e : v.entries) e = static_cast<std::uint8_t>((e + m - shift) % m);
    return v;
}

struct DerivedSets {
    /// M', which is also the exponent encoding of N'.
    ExponentSet m_prime;
    /// Members of M' with no unit entry.
    ExponentSet u_prime;

    const ExponentSet& n_prime() const noexcept { return m_prime; }
};

inline ExponentSet raw_exponent_set(const MubFamily& fam) {
    return ExponentSet::from(fam.root_order, fam.dimension, fam.vectors());
}

inline DerivedSets derive_sets(const MubFamily& fam) {
    const auto vecs = fam.vectors();
    const std::uint32_t m = fam.root_order;
    DerivedSets out{ExponentSet(m, fam.dimension), ExponentSet(m, fam.dimension)};
    for (const auto& u : vecs) {
        for (const auto& v : vecs) out.m_prime.insert(phase_normalized(hat_product(u, v, true)));
    }
    out.m_prime.finalize();
    for (const auto& v : out.m_prime) {
        if (std::none_of(v.entries.begin(), v.entries.end(), [&](std::uint8_t e) { return is_unit_mod(e, m); })) {
            out.u_prime.insert(v);
        }
    }
    out.u_prime.finalize();
    return out;
}

/// Checks r * v_(i,j) = v_(r.(i,j)) for every scalar r by looking up the
/// family member with scaled parameters. Empty for Alltop, whose raw set is
/// not a module.
inline std::optional<bool> scalar_lookup_consistent(const MubFamily& fam) {
    const std::uint32_t q = fam.dimension, m = fam.root_order;
    if (fam.construction == Construction::Alltop) return std::nullopt;
    if (fam.construction == Construction::GaloisRing) {
        const auto ring = GaloisRing::create(fam.params.n, fam.params.modulus);
        const auto& t = ring.teichmuller();
        for (std::uint32_t r = 0; r < 4; ++r) {
            for (std::uint32_t a = 0; a < q; ++a) {
                for (std::uint32_t b = 0; b < q; ++b) {
                    const auto alpha = ring.mul(ring.scalar(r), ring.add(t[a], ring.twice(t[b])));
                    const auto [ta, tb] = ring.decompose(alpha);
                    const int ia = ring.teichmuller_index(ta), ib = ring.teichmuller_index(tb);
                    if (ia < 0 || ib < 0) return false;
                    if (scale(fam.bases[a][b], r) != fam.bases[static_cast<std::size_t>(ia)][static_cast<std::size_t>(ib)]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }
    const auto field = Field::create(fam.params.p, fam.params.n, fam.params.modulus);
    for (std::uint32_t r = 0; r < m; ++r) {
        const auto rs = field.scalar(r);
        for (std::uint32_t i = 0; i < q; ++i) {
            const auto ri = field.mul(rs, FieldElement{i}).value;
            for (std::uint32_t j = 0; j < q; ++j) {
                const auto rj = field.mul(rs, FieldElement{j}).value;
                if (scale(fam.bases[i][j], r) != fam.bases[ri][rj]) return false;
            }
        }
    }
    return true;
}

/// Exponent vectors tr(alpha x^2 + beta x) for all alpha, beta in F.
inline ExponentSet quadratic_trace_set(const Field& field) {
    const auto planar = build_planar(field, default_planar_poly());
    return raw_exponent_set(planar);
}

struct QuadraticBridge {
    std::size_t matched = 0;
    std::size_t total = 0;
    std::optional<ExponentVector> witness;  // first element without a quadratic form

    bool pass() const noexcept { return total > 0 && matched == total; }
};

/// Every member of the set must equal tr(alpha x^2 + beta x) up to global phase.
inline QuadraticBridge match_quadratic_forms(const Field& field, const ExponentSet& set) {
    const auto quad = quadratic_trace_set(field);
    QuadraticBridge out;
    for (const auto& v : set) {
        ++out.total;
        if (quad.contains(phase_normalized(v))) {
            ++out.matched;
        } else if (!out.witness) {
            out.witness = v;
        }
    }
    return out;
}

struct AuditReport {
    Construction construction = Construction::Planar;
    std::uint32_t dimension = 0;
    std::uint32_t root_order = 0;

    ModuleVerdict raw_module;
    bool derived_equals_original = false;
    std::size_t derived_size = 0;
    std::size_t u_prime_size = 0;

    ModuleVerdict module;  // on M'
    std::optional<RankProfile> profile;
    unsigned rank = 0;
    bool free = false;
    std::optional<FreeVerdict> free_verdict;
    int projective_dimension = -1;
    std::size_t vector_count = 0;

    unsigned expected_rank = 0;
    std::uint64_t stated_projective_dimension = 0;

    std::optional<bool> scalar_lookup;
    std::optional<QuadraticBridge> quadratic_bridge;
    std::optional<PointCensus> census;
    std::optional<PgCountIdentity> pg_identity;
    std::optional<PhgCountIdentity> phg_identity;

    std::vector<std::string> discrepancies;
    std::vector<std::string> notes;
    bool pass = false;
};

inline AuditReport audit_family(const MubFamily& fam) {
    AuditReport rep;
    rep.construction = fam.construction;
    rep.dimension = fam.dimension;
    rep.root_order = fam.root_order;
    const unsigned n = fam.params.n;
    const bool even = fam.root_order == 4;

    const auto raw = raw_exponent_set(fam);
    rep.raw_module = module_axioms_check(raw);

    const auto derived = derive_sets(fam);
    rep.derived_size = derived.m_prime.size();
    rep.u_prime_size = derived.u_prime.size();
    rep.derived_equals_original = derived.m_prime == raw;
    rep.vector_count = derived.m_prime.size();

    rep.module = module_axioms_check(derived.m_prime);
    rep.expected_rank = even ? n : 2 * n;
    rep.stated_projective_dimension = even ? ipow(2, n - 1) : 2 * n - 1;

    bool ok = rep.module.pass();
    if (rep.module.pass()) {
        rep.profile = module_rank(derived.m_prime);
        rep.rank = rep.profile->free_rank;
        rep.free = rep.profile->is_free();
        if (even) {
            rep.free_verdict = free_check(derived.m_prime);
            rep.free = rep.free && rep.free_verdict->pass;
        }
        rep.projective_dimension = static_cast<int>(rep.rank) - 1;
        rep.census = subspace_points(derived.m_prime);
        ok = ok && rep.free && rep.rank == rep.expected_rank &&
             rep.vector_count == ipow(fam.root_order, rep.rank) && rep.census->formula_ok &&
             rep.census->reconciliation_ok;
    } else {
        rep.discrepancies.push_back("derived set is not a module (failed axiom: " + rep.module.failed_axiom + ")");
    }

    if (even) {
        rep.phg_identity = phg_count_identity(n);
        ok = ok && rep.phg_identity->two_pow_n_reading_holds;
    } else {
        rep.pg_identity = pg_count_identity(fam.params.p, n);
        ok = ok && rep.pg_identity->pass;
    }

    if (rep.projective_dimension >= 0 &&
        static_cast<std::uint64_t>(rep.projective_dimension) != rep.stated_projective_dimension) {
        rep.discrepancies.push_back(
            "stated projective dimension " + std::string(even ? "2^(n-1) = " : "2n-1 = ") +
            std::to_string(rep.stated_projective_dimension) + " differs from computed " +
            std::to_string(rep.projective_dimension) + " (free rank " + std::to_string(rep.rank) + " over Z_" +
            std::to_string(fam.root_order) + ")");
    }
    if (fam.root_order != fam.dimension) {
        rep.notes.push_back("exponents lie in Z_" + std::to_string(fam.root_order) + " while the dimension is " +
                            std::to_string(fam.dimension) + "; root order and dimension are tracked separately");
    }

    rep.scalar_lookup = scalar_lookup_consistent(fam);
    if (rep.scalar_lookup) ok = ok && *rep.scalar_lookup;

    if (fam.construction == Construction::Alltop) {
        const auto field = Field::create(fam.params.p, n, fam.params.modulus);
        rep.quadratic_bridge = match_quadratic_forms(field, derived.m_prime);
        ok = ok && rep.quadratic_bridge->pass();
        if (rep.raw_module.closure) rep.notes.push_back("raw exponent set is unexpectedly closed");
    } else {
        ok = ok && rep.raw_module.pass() && rep.derived_equals_original;
    }
    rep.pass = ok;
    return rep;
}

struct DerivedComparison {
    std::size_t size_a = 0, size_b = 0;
    bool equal = false;
    bool a_in_b = false;
    bool b_in_a = false;
    std::vector<ExponentVector> only_in_a;  // up to kMaxWitnesses
    std::vector<ExponentVector> only_in_b;

    static constexpr std::size_t kMaxWitnesses = 8;
};

inline DerivedComparison compare_derived(const MubFamily& a, const MubFamily& b) {
    if (a.dimension != b.dimension || a.root_order != b.root_order) {
        throw Error(ErrorCode::DimensionMismatch, "families live in different spaces (q = " +
                                                      std::to_string(a.dimension) + " vs " +
                                                      std::to_string(b.dimension) + ")");
    }
    const auto da = derive_sets(a).m_prime;
    const auto db = derive_sets(b).m_prime;
    DerivedComparison out;
    out.size_a = da.size();
    out.size_b = db.size();
    out.a_in_b = true;
    for (const auto& v : da) {
        if (!db.contains(v)) {
            out.a_in_b = false;
            if (out.only_in_a.size() < DerivedComparison::kMaxWitnesses) out.only_in_a.push_back(v);
        }
    }
    out.b_in_a = true;
    for (const auto& v : db) {
        if (!da.contains(v)) {
            out.b_in_a = false;
            if (out.only_in_b.size() < DerivedComparison::kMaxWitnesses) out.only_in_b.push_back(v);
        }
    }
    out.equal = out.a_in_b && out.b_in_a;
    return out;
}

}  // namespace mubs
