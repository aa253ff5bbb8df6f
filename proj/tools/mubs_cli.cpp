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

// mubs: construct, verify, audit and census complete sets of mutually
// unbiased bases. Exit status 0 = pass, 1 = check failure, 2 = bad input.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mubs/io.hpp"
#include "mubs/mubs.hpp"

namespace {

using mubs::io::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInvalid = 2;

struct FamilySpec {
    std::string construction;
    std::optional<std::uint32_t> p;
    unsigned n = 1;
    std::optional<unsigned> s;
    std::vector<std::uint32_t> planar_poly;
    std::vector<std::uint32_t> modulus;
    std::string input;

    void bind(CLI::App& app, const std::string& prefix) {
        app.add_option("--" + prefix + "construction", construction, "planar | alltop | symplectic | galois-ring");
        app.add_option("--" + prefix + "p", p, "characteristic (odd prime)");
        app.add_option("--" + prefix + "n", n, "extension degree")->capture_default_str();
        app.add_option("--" + prefix + "s", s, "symplectic parameter");
        app.add_option("--" + prefix + "planar-poly", planar_poly, "planar polynomial coefficients, lowest first")
            ->delimiter(',');
        app.add_option("--" + prefix + "modulus", modulus, "modulus coefficients, lowest first")->delimiter(',');
        app.add_option("--" + prefix + "input", input, "read the family from a JSON file instead");
    }

    mubs::MubFamily build() const {
        using mubs::Error;
        using mubs::ErrorCode;
        if (!input.empty()) {
            std::ifstream in(input);
            if (!in) throw Error(ErrorCode::BadInput, "cannot open " + input);
            try {
                return mubs::io::family_from_json(Json::parse(in));
            } catch (const nlohmann::json::exception& e) {
                throw Error(ErrorCode::BadInput, std::string("cannot parse ") + input + ": " + e.what());
            }
        }
        if (construction.empty()) throw Error(ErrorCode::InvalidParameters, "--construction or --input is required");
        const auto kind = mubs::parse_construction(construction);
        std::optional<mubs::Poly> mod;
        if (!modulus.empty()) mod = mubs::Poly(modulus.begin(), modulus.end());
        if (kind == mubs::Construction::GaloisRing) {
            if (p && *p != 2) throw Error(ErrorCode::InvalidParameters, "galois-ring works over Z_4; omit --p or use 2");
            return mubs::build_galois_ring(mubs::GaloisRing::create(n, mod));
        }
        if (!p) throw Error(ErrorCode::InvalidParameters, "--p is required for " + construction);
        const auto field = mubs::Field::create(*p, n, mod);
        switch (kind) {
            case mubs::Construction::Planar:
                return mubs::build_planar(field, planar_poly.empty() ? mubs::default_planar_poly() : planar_poly);
            case mubs::Construction::Alltop:
                return mubs::build_alltop(field);
            case mubs::Construction::Symplectic:
                return mubs::build_symplectic(field, s);
            default:
                break;
        }
        throw Error(ErrorCode::InvalidParameters, "unknown construction");
    }
};

struct RunConfig {
    std::string command;
    FamilySpec family, other;
    std::string mode = "full";
    std::uint64_t samples = 16;
    std::uint64_t seed = 0;
    std::string output;
    std::string format = "json";
};

std::string family_tag(const mubs::MubFamily& fam) {
    return mubs::construction_name(fam.construction) + "_q" + std::to_string(fam.dimension);
}

/// Resolves --output: "-" is stdout, empty falls back to $MUBS_OUTPUT_DIR, then stdout.
std::string destination(const RunConfig& cfg, const std::string& stem) {
    if (!cfg.output.empty()) return cfg.output;
    if (const char* dir = std::getenv("MUBS_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
        return (std::filesystem::path(dir) / (stem + "." + cfg.format)).string();
    }
    return "-";
}

void emit(const std::string& dest, const std::string& body) {
    if (dest == "-") {
        std::cout << body;
        std::cout.flush();
        return;
    }
    const std::filesystem::path path(dest);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mubs::Error(mubs::ErrorCode::BadInput, "cannot write " + dest);
    out << body;
}

void verdict(const std::string& dest, const std::string& line) {
    (dest == "-" ? std::cerr : std::cout) << line << '\n';
}

mubs::VerifyMode verify_mode(const RunConfig& cfg) {
    if (cfg.mode == "full") return mubs::VerifyMode::full();
    if (cfg.mode == "sampled") {
        if (cfg.samples == 0) throw mubs::Error(mubs::ErrorCode::InvalidParameters, "--samples must be positive");
        return mubs::VerifyMode::sampled(cfg.samples, cfg.seed);
    }
    throw mubs::Error(mubs::ErrorCode::InvalidParameters, "--mode must be full or sampled");
}

Json geometry_json(const mubs::MubFamily& fam, bool& ok) {
    const auto derived = mubs::derive_sets(fam);
    const auto census = mubs::subspace_points(derived.m_prime);
    Json j;
    j["family"] = mubs::io::family_summary(fam);
    j["census"] = mubs::io::to_json(census, true);
    j["u_prime_size"] = derived.u_prime.size();
    if (fam.root_order == 4) {
        const auto id = mubs::phg_count_identity(fam.params.n);
        j["count_identity"] = mubs::io::to_json(id);
        ok = census.formula_ok && census.reconciliation_ok && id.two_pow_n_reading_holds;
    } else {
        const auto id = mubs::pg_count_identity(fam.params.p, fam.params.n);
        j["count_identity"] = mubs::io::to_json(id);
        ok = census.formula_ok && census.reconciliation_ok && id.pass;
    }
    j["verdict"] = ok ? "pass" : "fail";
    return j;
}

std::string census_line(const mubs::MubFamily& fam) {
    const auto census = mubs::subspace_points(mubs::derive_sets(fam).m_prime);
    std::ostringstream os;
    os << census.points.size() << " points";
    if (census.kind == mubs::GeometryKind::PHG) os << " in " << census.neighbourhoods << " neighbourhoods";
    return os.str();
}

int run(const RunConfig& cfg) {
    if (cfg.format != "json" && cfg.format != "csv") {
        throw mubs::Error(mubs::ErrorCode::InvalidParameters, "--format must be json or csv");
    }
    if (cfg.format == "csv" && cfg.command != "construct") {
        throw mubs::Error(mubs::ErrorCode::InvalidParameters, "csv output is available for construct only");
    }
    const auto mode = verify_mode(cfg);
    const auto fam = cfg.family.build();
    const std::string tag = family_tag(fam);

    if (cfg.command == "construct") {
        const auto dest = destination(cfg, "family_" + tag);
        if (cfg.format == "csv") {
            std::ostringstream os;
            mubs::io::write_csv(os, fam);
            emit(dest, os.str());
        } else {
            emit(dest, mubs::io::to_json(fam).dump(2) + "\n");
        }
        verdict(dest, "constructed " + tag + ": " + std::to_string(fam.basis_count()) + " bases of " +
                          std::to_string(fam.dimension) + " vectors");
        return kPass;
    }
    if (cfg.command == "verify") {
        const auto rep = mubs::verify_family(fam, mode);
        const auto dest = destination(cfg, "verify_" + tag);
        emit(dest, mubs::io::to_json(rep, fam).dump(2) + "\n");
        verdict(dest, std::string("verify ") + tag + ": " + (rep.pass ? "PASS" : "FAIL") + " (" +
                          std::to_string(rep.pairs_checked) + " pairs, " + std::to_string(rep.failure_count) +
                          " failures)");
        return rep.pass ? kPass : kFail;
    }
    if (cfg.command == "audit") {
        const auto rep = mubs::audit_family(fam);
        const auto dest = destination(cfg, "audit_" + tag);
        emit(dest, mubs::io::to_json(rep, fam).dump(2) + "\n");
        verdict(dest, std::string("audit ") + tag + ": " + (rep.pass ? "PASS" : "FAIL") + " (rank " +
                          std::to_string(rep.rank) + ", " + std::to_string(rep.discrepancies.size()) +
                          " discrepancies)");
        return rep.pass ? kPass : kFail;
    }
    if (cfg.command == "geometry") {
        bool ok = false;
        const auto j = geometry_json(fam, ok);
        const auto dest = destination(cfg, "geometry_" + tag);
        emit(dest, j.dump(2) + "\n");
        verdict(dest, std::string("geometry ") + tag + ": " + (ok ? "PASS" : "FAIL") + " (" + census_line(fam) + ")");
        return ok ? kPass : kFail;
    }
    if (cfg.command == "all") {
        const auto vrep = mubs::verify_family(fam, mode);
        const auto arep = mubs::audit_family(fam);
        bool geo_ok = false;
        Json j;
        j["family"] = mubs::io::to_json(fam);
        j["verify"] = mubs::io::to_json(vrep, fam);
        j["audit"] = mubs::io::to_json(arep, fam);
        j["geometry"] = geometry_json(fam, geo_ok);
        const bool ok = vrep.pass && arep.pass && geo_ok;
        j["verdict"] = ok ? "pass" : "fail";
        const auto dest = destination(cfg, "all_" + tag);
        emit(dest, j.dump(2) + "\n");
        verdict(dest, std::string("all ") + tag + ": " + (ok ? "PASS" : "FAIL") + " (verify " +
                          (vrep.pass ? "pass" : "fail") + ", audit " + (arep.pass ? "pass" : "fail") + ", rank " +
                          std::to_string(arep.rank) + ", " + census_line(fam) + ")");
        return ok ? kPass : kFail;
    }
    if (cfg.command == "compare") {
        const auto other = cfg.other.build();
        const auto cmp = mubs::compare_derived(fam, other);
        Json j;
        j["a"] = mubs::io::family_summary(fam);
        j["b"] = mubs::io::family_summary(other);
        j["comparison"] = mubs::io::to_json(cmp);
        j["verdict"] = cmp.equal ? "equal" : (cmp.a_in_b ? "a_subset_of_b" : (cmp.b_in_a ? "b_subset_of_a" : "differ"));
        const auto dest = destination(cfg, "compare_" + tag + "_" + family_tag(other));
        emit(dest, j.dump(2) + "\n");
        verdict(dest, "compare " + tag + " vs " + family_tag(other) + ": " + j["verdict"].get<std::string>() + " (" +
                          std::to_string(cmp.size_a) + " vs " + std::to_string(cmp.size_b) + " derived vectors)");
        return cmp.equal ? kPass : kFail;
    }
    throw mubs::Error(mubs::ErrorCode::InvalidParameters, "unknown command " + cfg.command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct and check complete sets of mutually unbiased bases"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        cfg.family.bind(*sub, "");
        sub->add_option("--mode", cfg.mode, "verification mode: full | sampled")->capture_default_str();
        sub->add_option("--samples", cfg.samples, "pairs per basis pair in sampled mode")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "seed for sampled mode")->capture_default_str();
        sub->add_option("--output,-o", cfg.output, "output file, '-' for stdout (default: $MUBS_OUTPUT_DIR or stdout)");
        sub->add_option("--format", cfg.format, "json | csv")->capture_default_str();
    };
    for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
             {"construct", "build a family and export it"},
             {"verify", "check orthonormality and unbiasedness exactly"},
             {"audit", "module and subspace structure of the exponent sets"},
             {"geometry", "projective point census of the derived set"},
             {"all", "verify, audit and geometry in one report"},
             {"compare", "compare the derived sets of two families"}}) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub);
        if (name == "compare") cfg.other.bind(*sub, "other-");
        sub->callback([&cfg, name = name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kInvalid;
    }

    try {
        return run(cfg);
    } catch (const mubs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: BadInput: " << e.what() << '\n';
        return kInvalid;
    }
}
