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

// Test-only reference computations. Nothing here calls into the library's
// arithmetic; each routine recomputes its answer from first principles.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

/// Schoolbook product of two residues mod (f, m) with f monic, coefficient vectors of length n.
inline std::vector<int> mul_mod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& f, int m) {
    const std::size_t n = f.size() - 1;
    std::vector<int> prod(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % m;
    }
    for (std::size_t d = 2 * n - 1; d >= n; --d) {
        const int c = prod[d];
        if (c != 0) {
            for (std::size_t i = 0; i <= n; ++i) prod[d - n + i] = ((prod[d - n + i] - c * f[i]) % m + m) % m;
        }
        if (d == n) break;
    }
    prod.resize(n);
    return prod;
}

inline std::vector<int> digits(std::uint32_t v, std::size_t n, int base) {
    std::vector<int> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = static_cast<int>(v % static_cast<std::uint32_t>(base));
        v /= static_cast<std::uint32_t>(base);
    }
    return d;
}

inline std::uint32_t pack(const std::vector<int>& d, int base) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * static_cast<std::uint32_t>(base) + static_cast<std::uint32_t>(d[i]);
    return v;
}

inline std::vector<int> pow_mod(std::vector<int> a, std::uint64_t e, const std::vector<int>& f, int m) {
    std::vector<int> r(f.size() - 1, 0);
    r[0] = 1;
    while (e > 0) {
        if (e & 1U) r = mul_mod(r, a, f, m);
        a = mul_mod(a, a, f, m);
        e >>= 1U;
    }
    return r;
}

/// True iff the polynomial (ascending coefficients) has a root in Z_p.
inline bool has_root_mod_p(const std::vector<int>& f, int p) {
    for (int x = 0; x < p; ++x) {
        long long acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

/// |<u, v>|^2 for u_x = w^ue_x / sqrt(q), w = exp(2 pi i / m), summed term by term.
inline double overlap(const std::vector<std::uint8_t>& ue, const std::vector<std::uint8_t>& ve, int m) {
    const double q = static_cast<double>(ue.size());
    double re = 0.0, im = 0.0;
    for (std::size_t x = 0; x < ue.size(); ++x) {
        const double angle = 2.0 * std::numbers::pi * (static_cast<double>(ve[x]) - static_cast<double>(ue[x])) / m;
        re += std::cos(angle);
        im += std::sin(angle);
    }
    return (re * re + im * im) / (q * q);
}

}  // namespace oracle
