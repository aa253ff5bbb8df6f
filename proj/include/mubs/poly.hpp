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
 * @file poly.hpp
 * @brief Dense univariate polynomials over Z_m for small m.
 *
 * Polynomials are ascending coefficient lists: x^2 + 1 over Z_3 is {1, 0, 1}.
 * The zero polynomial is the empty list. All results are trimmed.
 *
 * Routines that divide by a leading coefficient other than 1 (gcd, general
 * remainder) require m prime. Remainder by a monic divisor works for any m,
 * which is what the Z_4 code uses.
 */

#include <algorithm>
#include <cstdint>
#include <vector>

namespace mubs {

using Poly = std::vector<std::uint32_t>;

namespace poly {

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly normalized(Poly a, std::uint32_t m) {
    for (auto& c : a) c %= m;
    trim(a);
    return a;
}

inline Poly add(const Poly& a, const Poly& b, std::uint32_t m) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] % m;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % m;
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b, std::uint32_t m) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] % m;
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + m - b[i] % m) % m;
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint32_t m) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % m);
        }
    }
    trim(r);
    return r;
}

inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t m) {
    // extended Euclid; caller guarantees gcd(a, m) = 1
    std::int64_t t = 0, new_t = 1, r = m, new_r = a % m;
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        t -= quot * new_t;
        std::swap(t, new_t);
        r -= quot * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += m;
    return static_cast<std::uint32_t>(t);
}

/// Remainder of a by b. The leading coefficient of b must be invertible mod m.
inline Poly rem(Poly a, const Poly& b, std::uint32_t m) {
    trim(a);
    const int db = degree(b);
    const std::uint32_t lead_inv = inverse_mod(b.back(), m);
    while (degree(a) >= db) {
        const int shift = degree(a) - db;
        const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % m);
        for (int i = 0; i <= db; ++i) {
            auto& c = a[static_cast<std::size_t>(i + shift)];
            c = static_cast<std::uint32_t>((c + m - std::uint64_t{factor} * b[static_cast<std::size_t>(i)] % m) % m);
        }
        trim(a);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t m) {
    return rem(mul(a, b, m), f, m);
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t m) {
    Poly result{1};
    result = rem(result, f, m);
    base = rem(base, f, m);
    while (e > 0) {
        if (e & 1U) result = mulmod(result, base, f, m);
        base = mulmod(base, base, f, m);
        e >>= 1U;
    }
    return result;
}

/// Monic gcd over the prime field Z_p.
inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint32_t inv = inverse_mod(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(std::uint64_t{c} * inv % p);
    }
    return a;
}

/// Ben-Or test: f of degree n is irreducible over Z_p iff
/// gcd(x^(p^k) - x, f) = 1 for every 1 <= k <= n/2.
inline bool is_irreducible(const Poly& f_in, std::uint32_t p) {
    const Poly f = normalized(f_in, p);
    const int n = degree(f);
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly x{0, 1};
    Poly frob = rem(x, f, p);
    for (int k = 1; 2 * k <= n; ++k) {
        frob = powmod(frob, p, f, p);
        const Poly g = gcd(f, sub(frob, x, p), p);
        if (degree(g) > 0) return false;
    }
    return true;
}

/// Monic degree-n polynomial whose lower coefficients are the base-p digits
/// of `index`; index order is the packed order with the highest-degree
/// coefficient most significant.
inline Poly monic_from_index(std::uint64_t index, int n, std::uint32_t p) {
    Poly f(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    f[static_cast<std::size_t>(n)] = 1;
    return f;
}

inline Poly smallest_irreducible(int n, std::uint32_t p) {
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f = monic_from_index(idx, n, p);
        if (is_irreducible(f, p)) return f;
    }
    return {};  // unreachable: irreducibles exist in every degree
}

}  // namespace poly

inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace mubs
