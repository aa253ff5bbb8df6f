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

// JSON and CSV artifacts. Keys are emitted in a fixed order so identical
// inputs give byte-identical output.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mubs/error.hpp"
#include "mubs/family.hpp"
#include "mubs/geometry.hpp"
#include "mubs/structure_audit.hpp"
#include "mubs/verifier.hpp"

namespace mubs::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const ExponentVector& v) {
    Json a = Json::array();
    for (auto e : v.entries) a.push_back(static_cast<int>(e));
    return a;
}

inline Json params_json(const MubFamily& fam) {
    Json p;
    p["p"] = fam.params.p;
    p["n"] = fam.params.n;
    p["modulus"] = fam.params.modulus;
    if (fam.construction == Construction::Planar) p["planar_poly"] = fam.params.planar_poly;
    if (fam.construction == Construction::Symplectic) p["s"] = fam.params.s;
    return p;
}

inline Json family_summary(const MubFamily& fam) {
    Json j;
    j["q"] = fam.dimension;
    j["m"] = fam.root_order;
    j["construction"] = construction_name(fam.construction);
    j["params"] = params_json(fam);
    return j;
}

inline Json to_json(const MubFamily& fam) {
    Json j = family_summary(fam);
    Json bases = Json::array();
    for (const auto& basis : fam.bases) {
        Json rows = Json::array();
        for (const auto& v : basis) rows.push_back(to_json(v));
        bases.push_back(std::move(rows));
    }
    j["bases"] = std::move(bases);
    return j;
}

inline MubFamily family_from_json(const Json& j) {
    try {
        MubFamily fam;
        fam.dimension = j.at("q").get<std::uint32_t>();
        fam.root_order = j.at("m").get<std::uint32_t>();
        if (fam.root_order < 2 || fam.root_order > 255) throw Error(ErrorCode::BadInput, "root order out of range");
        fam.construction = parse_construction(j.at("construction").get<std::string>());
        const auto& p = j.at("params");
        fam.params.p = p.at("p").get<std::uint32_t>();
        fam.params.n = p.at("n").get<unsigned>();
        fam.params.modulus = p.at("modulus").get<Poly>();
        if (p.contains("planar_poly")) fam.params.planar_poly = p.at("planar_poly").get<std::vector<std::uint32_t>>();
        if (p.contains("s")) fam.params.s = p.at("s").get<unsigned>();
        for (const auto& basis : j.at("bases")) {
            std::vector<ExponentVector> rows;
            for (const auto& row : basis) {
                ExponentVector v{{}, fam.root_order};
                for (const auto& e : row) {
                    const int val = e.get<int>();
                    if (val < 0 || val > 255) throw Error(ErrorCode::BadInput, "exponent out of range");
                    v.entries.push_back(static_cast<std::uint8_t>(val));
                }
                rows.push_back(std::move(v));
            }
            fam.bases.push_back(std::move(rows));
        }
        return fam;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadInput, std::string("malformed family JSON: ") + e.what());
    }
}

/// One row per vector: basis index, row index, then the q exponents.
inline void write_csv(std::ostream& os, const MubFamily& fam) {
    os << "a,b";
    for (std::uint32_t x = 0; x < fam.dimension; ++x) os << ",e_" << x;
    os << '\n';
    for (std::size_t a = 0; a < fam.bases.size(); ++a) {
        for (std::size_t b = 0; b < fam.bases[a].size(); ++b) {
            os << a << ',' << b;
            for (auto e : fam.bases[a][b].entries) os << ',' << static_cast<int>(e);
            os << '\n';
        }
    }
}

inline Json to_json(const VerifyReport& rep, const MubFamily& fam) {
    Json j;
    j["family"] = family_summary(fam);
    j["mode"] = rep.mode.name();
    if (rep.mode.kind == VerifyMode::Kind::Sampled) {
        j["samples"] = rep.mode.samples;
        j["seed"] = rep.mode.seed;
    } else {
        j["seed"] = nullptr;
    }
    j["verdict"] = rep.pass ? "pass" : "fail";
    j["bases"] = fam.basis_count();
    j["pairs_checked"] = rep.pairs_checked;
    j["non_rational"] = rep.non_rational;
    Json hist = Json::object();
    for (const auto& [value, count] : rep.histogram) hist[std::to_string(value)] = count;
    j["histogram"] = std::move(hist);
    j["failure_count"] = rep.failure_count;
    Json fails = Json::array();
    for (const auto& f : rep.failures) {
        Json fj;
        fj["kind"] = f.kind;
        fj["basis"] = {f.basis_a, f.basis_b};
        fj["row"] = {f.row_a, f.row_b};
        if (f.rational) {
            fj["value"] = f.value;
        } else {
            fj["value"] = nullptr;
        }
        fails.push_back(std::move(fj));
    }
    j["failures"] = std::move(fails);
    return j;
}

inline Json to_json(const ModuleVerdict& v) {
    Json j;
    j["closure"] = v.closure;
    j["identity"] = v.identity;
    j["inverses"] = v.inverses;
    j["scalar_action"] = v.scalar_action;
    if (!v.pass()) {
        j["failed_axiom"] = v.failed_axiom;
        Json w = Json::array();
        for (const auto& x : v.witness) w.push_back(to_json(x));
        j["witness"] = std::move(w);
        if (v.witness_scalar) j["witness_scalar"] = *v.witness_scalar;
    }
    return j;
}

inline Json to_json(const PointCensus& c, bool with_points) {
    Json j;
    j["kind"] = c.kind == GeometryKind::PG ? "PG" : "PHG";
    j["modulus"] = c.modulus;
    j["rank"] = c.rank;
    Json census;
    census["points"] = c.points.size();
    census["neighbourhoods"] = c.neighbourhoods;
    census["vectors"] = c.vectors;
    census["excluded"] = c.excluded;
    census["representatives_per_point"] = {c.min_representatives, c.max_representatives};
    if (c.kind == GeometryKind::PHG) {
        census["points_per_neighbourhood"] = {c.min_per_neighbourhood, c.max_per_neighbourhood};
        census["expected_neighbourhoods"] = c.expected_neighbourhoods;
    }
    census["expected_points"] = c.expected_points;
    census["formula_ok"] = c.formula_ok;
    census["reconciliation_ok"] = c.reconciliation_ok;
    j["census"] = std::move(census);
    if (with_points) {
        Json pts = Json::array();
        for (const auto& pt : c.points) {
            Json a = Json::array();
            for (auto e : pt.rep) a.push_back(static_cast<int>(e));
            pts.push_back(std::move(a));
        }
        j["points"] = std::move(pts);
    }
    return j;
}

inline Json to_json(const PgCountIdentity& c) {
    Json j;
    j["points"] = c.points;
    j["represented_vectors"] = c.represented;
    j["mub_vectors"] = c.mub_vectors;
    j["pass"] = c.pass;
    return j;
}

inline Json to_json(const PhgCountIdentity& c) {
    Json j;
    j["projective_dimension"] = c.projective_dimension;
    j["points_per_neighbourhood"] = c.points_per_neighbourhood;
    j["neighbourhoods"] = c.neighbourhoods;
    j["point_vectors"] = c.point_vectors;
    j["target"] = c.target;
    j["nonunit_2^n"] = c.nonunit_two_pow_n;
    j["nonunit_2^m"] = c.nonunit_two_pow_m;
    j["reading_2^n_holds"] = c.two_pow_n_reading_holds;
    j["reading_2^m_holds"] = c.two_pow_m_reading_holds;
    return j;
}

inline Json to_json(const AuditReport& r, const MubFamily& fam) {
    Json j;
    j["family"] = family_summary(fam);
    j["verdict"] = r.pass ? "pass" : "fail";
    j["raw_set"] = to_json(r.raw_module);
    j["derived_equals_original"] = r.derived_equals_original;
    j["derived_size"] = r.derived_size;
    j["u_prime_size"] = r.u_prime_size;
    j["module"] = to_json(r.module);
    j["rank"] = r.rank;
    if (r.profile) j["torsion_rank"] = r.profile->torsion_rank;
    j["free"] = r.free;
    if (r.free_verdict) {
        Json fv;
        fv["pass"] = r.free_verdict->pass;
        fv["two_torsion"] = r.free_verdict->two_torsion;
        if (r.free_verdict->witness) fv["witness"] = to_json(*r.free_verdict->witness);
        j["free_check"] = std::move(fv);
    }
    j["projective_dimension"] = r.projective_dimension;
    j["vector_count"] = r.vector_count;
    j["expected_rank"] = r.expected_rank;
    j["stated_projective_dimension"] = r.stated_projective_dimension;
    if (r.scalar_lookup) j["scalar_lookup"] = *r.scalar_lookup;
    if (r.quadratic_bridge) {
        Json qb;
        qb["matched"] = r.quadratic_bridge->matched;
        qb["total"] = r.quadratic_bridge->total;
        if (r.quadratic_bridge->witness) qb["witness"] = to_json(*r.quadratic_bridge->witness);
        j["quadratic_bridge"] = std::move(qb);
    }
    if (r.census) j["geometry"] = to_json(*r.census, false);
    if (r.pg_identity) j["count_identity"] = to_json(*r.pg_identity);
    if (r.phg_identity) j["count_identity"] = to_json(*r.phg_identity);
    j["discrepancies"] = r.discrepancies;
    j["notes"] = r.notes;
    return j;
}

inline Json to_json(const DerivedComparison& c) {
    Json j;
    j["size_a"] = c.size_a;
    j["size_b"] = c.size_b;
    j["equal"] = c.equal;
    j["a_in_b"] = c.a_in_b;
    j["b_in_a"] = c.b_in_a;
    Json wa = Json::array(), wb = Json::array();
    for (const auto& v : c.only_in_a) wa.push_back(to_json(v));
    for (const auto& v : c.only_in_b) wb.push_back(to_json(v));
    j["only_in_a"] = std::move(wa);
    j["only_in_b"] = std::move(wb);
    return j;
}

}  // namespace mubs::io
