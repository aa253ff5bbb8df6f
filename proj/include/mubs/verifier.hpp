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
 * @file verifier.hpp
 * @brief Exact unbiasedness checks on exponent vectors.
 *
 * For u, v with exponents in Z_m the unnormalized inner product is
 * S = sum_x w^(v_x - u_x) = sum_k c_k w^k, where c_k counts coordinates with
 * difference k. Then |S|^2 = sum_j d_j w^j with d_j = sum_k c_k c_{k+j}.
 *
 *  - m = 4: S = (c_0 - c_2) + (c_1 - c_3) i is a Gaussian integer.
 *  - m = p prime: w, ..., w^(p-1) are linearly independent over Q, so |S|^2
 *    is rational iff d_1 = ... = d_{p-1}, and then |S|^2 = d_0 - d_1.
 *
 * Values are |S|^2, so |<u, v>|^2 = value / q^2. A complete family shows only
 * 0 (same basis), q (different bases) and q^2 (self).
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mubs/error.hpp"
#include "mubs/family.hpp"

namespace mubs {

struct InnerProductValue {
    bool rational = false;
    /// |S|^2 when rational.
    std::int64_t value = 0;
    std::vector<std::int64_t> residue_counts;
    std::vector<std::int64_t> correlation;
};

inline InnerProductValue inner_product_sq(const ExponentVector& u, const ExponentVector& v) {
    if (u.size() != v.size() || u.modulus != v.modulus) {
        throw Error(ErrorCode::LengthMismatch, "inner product needs equal lengths and root orders");
    }
    const std::uint32_t m = u.modulus;
    InnerProductValue out;
    out.residue_counts.assign(m, 0);
    for (std::size_t x = 0; x < u.size(); ++x) {
        std::uint32_t d = std::uint32_t{v[x]} + m - u[x];
        if (d >= m) d -= m;
        ++out.residue_counts[d];
    }
    const auto& c = out.residue_counts;
    out.correlation.assign(m, 0);
    for (std::uint32_t j = 0; j < m; ++j) {
        for (std::uint32_t k = 0; k < m; ++k) out.correlation[j] += c[k] * c[(k + j) % m];
    }
    if (m == 4) {
        const std::int64_t re = c[0] - c[2], im = c[1] - c[3];
        out.rational = true;
        out.value = re * re + im * im;
        return out;
    }
    const auto& d = out.correlation;
    out.rational = m == 1 || std::all_of(d.begin() + 1, d.end(), [&](std::int64_t x) { return x == d[1]; });
    if (out.rational) out.value = m == 1 ? d[0] : d[0] - d[1];
    return out;
}

/// |<u, v>|^2 computed in double precision from the explicit complex vectors.
inline double float_overlap(const ExponentVector& u, const ExponentVector& v) {
    const double q = static_cast<double>(u.size());
    const double step = 2.0 * std::numbers::pi / static_cast<double>(u.modulus);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t x = 0; x < u.size(); ++x) {
        const auto a = std::polar(1.0 / std::sqrt(q), step * u[x]);
        const auto b = std::polar(1.0 / std::sqrt(q), step * v[x]);
        acc += std::conj(a) * b;
    }
    return std::norm(acc);
}

struct PairVerdict {
    bool pass = true;
    std::size_t first = 0;
    std::size_t second = 0;
    InnerProductValue value;
};

/// Pairwise orthogonality inside one basis; unit norm holds by representation
/// and is asserted through the self value q^2.
inline PairVerdict verify_orthonormal(std::span<const ExponentVector> basis) {
    const auto q = static_cast<std::int64_t>(basis.empty() ? 0 : basis.front().size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto self = inner_product_sq(basis[i], basis[i]);
        if (!self.rational || self.value != q * q) return {false, i, i, std::move(self)};
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            auto val = inner_product_sq(basis[i], basis[j]);
            if (!val.rational || val.value != 0) return {false, i, j, std::move(val)};
        }
    }
    return {};
}

inline PairVerdict verify_unbiased(std::span<const ExponentVector> b1, std::span<const ExponentVector> b2) {
    for (std::size_t i = 0; i < b1.size(); ++i) {
        const auto q = static_cast<std::int64_t>(b1[i].size());
        for (std::size_t j = 0; j < b2.size(); ++j) {
            auto val = inner_product_sq(b1[i], b2[j]);
            if (!val.rational || val.value != q) return {false, i, j, std::move(val)};
        }
    }
    return {};
}

struct VerifyMode {
    enum class Kind { Full, Sampled } kind = Kind::Full;
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    static VerifyMode full() { return {}; }
    static VerifyMode sampled(std::size_t k, std::uint64_t seed) { return {Kind::Sampled, k, seed}; }
    std::string name() const { return kind == Kind::Full ? "full" : "sampled"; }
};

struct VerifyFailure {
    std::string kind;  // "shape", "entry", "norm", "orthogonal", "unbiased"
    std::size_t basis_a = 0, basis_b = 0, row_a = 0, row_b = 0;
    bool rational = true;
    std::int64_t value = 0;
};

struct VerifyReport {
    VerifyMode mode;
    bool pass = false;
    std::uint64_t pairs_checked = 0;
    std::uint64_t non_rational = 0;
    std::map<std::int64_t, std::uint64_t> histogram;
    std::uint64_t failure_count = 0;
    std::vector<VerifyFailure> failures;  // first kMaxListed only

    static constexpr std::size_t kMaxListed = 64;
};

/// Largest dimension accepted in full mode.
inline constexpr std::uint32_t kFullModeLimit = 81;

inline VerifyReport verify_family(const MubFamily& fam, VerifyMode mode = VerifyMode::full()) {
    const std::uint32_t q = fam.dimension;
    if (mode.kind == VerifyMode::Kind::Full && q > kFullModeLimit) {
        throw Error(ErrorCode::TooLarge, "full verification is limited to q <= " + std::to_string(kFullModeLimit));
    }
    VerifyReport rep;
    rep.mode = mode;
    auto fail = [&](VerifyFailure f) {
        ++rep.failure_count;
        if (rep.failures.size() < VerifyReport::kMaxListed) rep.failures.push_back(std::move(f));
    };

    bool shape_ok = fam.bases.size() == q;
    for (std::size_t a = 0; a < fam.bases.size(); ++a) {
        if (fam.bases[a].size() != q) {
            shape_ok = false;
            fail({"shape", a, a, fam.bases[a].size(), q});
            continue;
        }
        for (std::size_t b = 0; b < q; ++b) {
            const auto& v = fam.bases[a][b];
            // every entry w^e / sqrt(q) has squared magnitude 1/q, so each
            // vector is unbiased to the standard basis iff it is well formed
            const bool entries_ok = v.size() == q && v.modulus == fam.root_order &&
                                    std::all_of(v.entries.begin(), v.entries.end(),
                                                [&](std::uint8_t e) { return e < fam.root_order; });
            if (!entries_ok) {
                shape_ok = false;
                fail({"entry", a, a, b, b});
            }
        }
    }
    if (fam.bases.size() != q) fail({"shape", fam.bases.size(), q, 0, 0});
    if (!shape_ok) return rep;

    const auto qq = static_cast<std::int64_t>(q);
    auto check = [&](std::size_t ba, std::size_t ra, std::size_t bb, std::size_t rb) {
        const auto val = inner_product_sq(fam.bases[ba][ra], fam.bases[bb][rb]);
        ++rep.pairs_checked;
        if (!val.rational) {
            ++rep.non_rational;
        } else {
            ++rep.histogram[val.value];
        }
        std::int64_t expected = 0;
        std::string kind = "orthogonal";
        if (ba == bb && ra == rb) {
            expected = qq * qq;
            kind = "norm";
        } else if (ba != bb) {
            expected = qq;
            kind = "unbiased";
        }
        if (!val.rational || val.value != expected) fail({kind, ba, bb, ra, rb, val.rational, val.value});
    };

    if (mode.kind == VerifyMode::Kind::Full) {
        for (std::size_t a = 0; a < q; ++a) {
            for (std::size_t r = 0; r < q; ++r) {
                for (std::size_t s = r; s < q; ++s) check(a, r, a, s);
            }
        }
        for (std::size_t a = 0; a < q; ++a) {
            for (std::size_t b = a + 1; b < q; ++b) {
                for (std::size_t r = 0; r < q; ++r) {
                    for (std::size_t s = 0; s < q; ++s) check(a, r, b, s);
                }
            }
        }
    } else {
        std::mt19937_64 rng(mode.seed);
        std::uniform_int_distribution<std::size_t> row(0, q - 1);
        for (std::size_t a = 0; a < q; ++a) {
            for (std::size_t k = 0; k < mode.samples; ++k) {
                const std::size_t r = row(rng);
                std::size_t s = row(rng);
                if (q > 1 && s == r) s = (s + 1) % q;
                check(a, r, a, s);
            }
        }
        for (std::size_t a = 0; a < q; ++a) {
            for (std::size_t b = a + 1; b < q; ++b) {
                for (std::size_t k = 0; k < mode.samples; ++k) {
                    const std::size_t r = row(rng);
                    const std::size_t s = row(rng);
                    check(a, r, b, s);
                }
            }
        }
    }
    rep.pass = rep.failure_count == 0;
    return rep;
}

}  // namespace mubs
