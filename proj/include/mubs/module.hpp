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
 * @file module.hpp
 * @brief Finite sets of exponent vectors viewed as subsets of Z_m^q.
 *
 * Module axioms are checked extensionally. Ranks come from elimination:
 * Gaussian over Z_p, invariant factors over Z_4 (each summand is Z_4 or Z_2).
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mubs/error.hpp"
#include "mubs/family.hpp"
#include "mubs/poly.hpp"

namespace mubs {

/// Sorted, deduplicated set of equal-length exponent vectors over one Z_m.
class ExponentSet {
public:
    ExponentSet(std::uint32_t modulus, std::size_t length) : modulus_(modulus), length_(length) {}

    template <class Range>
    static ExponentSet from(std::uint32_t modulus, std::size_t length, const Range& vectors) {
        ExponentSet s(modulus, length);
        for (const auto& v : vectors) s.insert(v);
        s.finalize();
        return s;
    }

    void insert(ExponentVector v) {
        if (v.size() != length_ || v.modulus != modulus_) {
            throw Error(ErrorCode::LengthMismatch, "vector does not match set length / root order");
        }
        if (index_.insert(v).second) items_.push_back(std::move(v));
    }

    void finalize() { std::sort(items_.begin(), items_.end()); }

    bool contains(const ExponentVector& v) const { return index_.count(v) != 0; }
    std::size_t size() const noexcept { return items_.size(); }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::size_t length() const noexcept { return length_; }
    const std::vector<ExponentVector>& items() const noexcept { return items_; }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    friend bool operator==(const ExponentSet& a, const ExponentSet& b) {
        return a.modulus_ == b.modulus_ && a.length_ == b.length_ && a.items_ == b.items_;
    }

private:
    std::uint32_t modulus_;
    std::size_t length_;
    std::vector<ExponentVector> items_;
    std::unordered_set<ExponentVector, ExponentVectorHash> index_;
};

inline ExponentVector zero_vector(std::size_t length, std::uint32_t m) {
    return ExponentVector{std::vector<std::uint8_t>(length, 0), m};
}

inline bool is_unit_mod(std::uint32_t e, std::uint32_t m) {
    if (m == 4) return e % 2 == 1;
    return e % m != 0;  // m prime
}

struct ModuleVerdict {
    bool closure = false;
    bool identity = false;
    bool inverses = false;
    bool scalar_action = false;
    /// Name of the first failing axiom and the vectors that witness it.
    std::string failed_axiom;
    std::vector<ExponentVector> witness;
    std::optional<std::uint32_t> witness_scalar;

    bool pass() const noexcept { return closure && identity && inverses && scalar_action; }
};

/// Exhaustive check that M is a Z_m-submodule of Z_m^q: zero, negatives,
/// sums and every scalar multiple r * v, r in Z_m, stay inside M.
inline ModuleVerdict module_axioms_check(const ExponentSet& set) {
    if (set.size() > (std::size_t{1} << 20)) throw Error(ErrorCode::TooLarge, "set too large for exhaustion");
    const std::uint32_t m = set.modulus();
    ModuleVerdict out;
    auto note = [&](const char* axiom, std::vector<ExponentVector> w) {
        if (out.failed_axiom.empty()) {
            out.failed_axiom = axiom;
            out.witness = std::move(w);
        }
    };

    const auto zero = zero_vector(set.length(), m);
    out.identity = set.contains(zero);
    if (!out.identity) note("identity", {zero});

    out.inverses = true;
    for (const auto& v : set) {
        if (!set.contains(scale(v, m - 1))) {
            out.inverses = false;
            note("inverses", {v});
            break;
        }
    }

    out.scalar_action = true;
    for (std::uint32_t r = 0; r < m && out.scalar_action; ++r) {
        for (const auto& v : set) {
            if (!set.contains(scale(v, r))) {
                out.scalar_action = false;
                if (out.failed_axiom.empty()) out.witness_scalar = r;
                note("scalar_action", {v});
                break;
            }
        }
    }

    out.closure = true;
    const auto& items = set.items();
    for (std::size_t i = 0; i < items.size() && out.closure; ++i) {
        for (std::size_t j = i; j < items.size(); ++j) {
            if (!set.contains(hat_product(items[i], items[j], false))) {
                out.closure = false;
                note("closure", {items[i], items[j]});
                break;
            }
        }
    }
    return out;
}

/// Invariant profile of the module spanned by a set: Z_m^free_rank (+) Z_2^torsion_rank
/// (torsion only for m = 4).
struct RankProfile {
    unsigned free_rank = 0;
    unsigned torsion_rank = 0;
    std::uint64_t span_size = 1;

    bool is_free() const noexcept { return torsion_rank == 0; }
};

namespace detail {

inline unsigned rank_mod_prime(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p, std::size_t cols) {
    unsigned rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        const std::uint32_t inv = poly::inverse_mod(rows[rank][c], p);
        for (auto& e : rows[rank]) e = e * inv % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const std::uint32_t f = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + p * p - f * rows[rank][k]) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline RankProfile rank_profile(const ExponentSet& set) {
    const std::uint32_t m = set.modulus();
    const std::size_t cols = set.length();
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(set.size());
    for (const auto& v : set) rows.emplace_back(v.entries.begin(), v.entries.end());

    RankProfile out;
    if (m != 4) {
        out.free_rank = detail::rank_mod_prime(std::move(rows), m, cols);
        out.span_size = ipow(m, out.free_rank);
        return out;
    }

    // Z_4: pivot on unit entries; each such pivot splits off a Z_4 summand.
    std::vector<char> row_used(rows.size(), 0), col_used(cols, 0);
    for (;;) {
        std::size_t pr = rows.size(), pc = cols;
        for (std::size_t r = 0; r < rows.size() && pr == rows.size(); ++r) {
            if (row_used[r]) continue;
            for (std::size_t c = 0; c < cols; ++c) {
                if (!col_used[c] && rows[r][c] % 2 == 1) {
                    pr = r;
                    pc = c;
                    break;
                }
            }
        }
        if (pr == rows.size()) break;
        const std::uint32_t inv = rows[pr][pc];  // 1 and 3 are self-inverse
        for (auto& e : rows[pr]) e = e * inv % 4;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pr || rows[r][pc] == 0) continue;
            const std::uint32_t f = rows[r][pc];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + 16 - f * rows[pr][k]) % 4;
        }
        // column operations clear the rest of the pivot row without touching other rows
        for (std::size_t k = 0; k < cols; ++k) {
            if (k != pc) rows[pr][k] = 0;
        }
        row_used[pr] = 1;
        col_used[pc] = 1;
        ++out.free_rank;
    }
    // remaining entries are even; halve and take the rank over Z_2
    std::vector<std::vector<std::uint32_t>> rest;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (row_used[r]) continue;
        std::vector<std::uint32_t> half;
        for (std::size_t c = 0; c < cols; ++c) {
            if (!col_used[c]) half.push_back(rows[r][c] / 2);
        }
        rest.push_back(std::move(half));
    }
    std::size_t rest_cols = 0;
    for (auto u : col_used) rest_cols += u ? 0 : 1;
    out.torsion_rank = detail::rank_mod_prime(std::move(rest), 2, rest_cols);
    out.span_size = ipow(4, out.free_rank) * ipow(2, out.torsion_rank);
    return out;
}

/// Rank of a set that is itself a module. The set equals its span exactly
/// when the sizes agree, so a size mismatch means M is not closed.
inline RankProfile module_rank(const ExponentSet& set) {
    const auto prof = rank_profile(set);
    if (prof.span_size != set.size()) {
        throw Error(ErrorCode::NotAModule, "set of size " + std::to_string(set.size()) +
                                               " is not its own span (span size " + std::to_string(prof.span_size) +
                                               ")");
    }
    return prof;
}

struct FreeVerdict {
    bool pass = false;
    std::size_t two_torsion = 0;
    /// A 2-torsion element that is not twice an element of M.
    std::optional<ExponentVector> witness;
};

/// Over Z_4: M is free iff every v with 2v = 0 equals 2u for some u in M.
inline FreeVerdict free_check(const ExponentSet& set) {
    if (set.modulus() != 4) throw Error(ErrorCode::InvalidParameters, "free_check applies to Z_4 sets");
    ExponentSet doubles(4, set.length());
    for (const auto& u : set) doubles.insert(scale(u, 2));
    FreeVerdict out;
    out.pass = true;
    for (const auto& v : set) {
        if (!std::all_of(v.entries.begin(), v.entries.end(), [](std::uint8_t e) { return e % 2 == 0; })) continue;
        ++out.two_torsion;
        if (!doubles.contains(v) && out.pass) {
            out.pass = false;
            out.witness = v;
        }
    }
    return out;
}

}  // namespace mubs
