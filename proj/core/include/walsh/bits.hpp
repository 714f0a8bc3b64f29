// Copyright 2026 The walshsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Bit and index conventions shared by the whole library.
 *
 * A register of width n carries grid indices k in [0, 2^n).  The dyadic
 * bits k_1..k_n of k are indexed from the most significant side
 * (k = sum k_i 2^{n-i}); qubit i holds bit k_i, so qubit 1 is the most
 * significant position bit.  Paley indices j are indexed from the least
 * significant side (j = sum j_i 2^{i-1}).  The Walsh pairing sums
 * j_i * k_i, i.e. the i-th least significant bit of j against the i-th
 * most significant bit of k.
 */

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace walsh {

/// 1-based position of the most significant set bit; 0 for j = 0.
inline int msb_position(std::uint64_t j) noexcept {
    return j == 0 ? 0 : 64 - std::countl_zero(j);
}

/// Reverse the low n bits of k.
inline std::uint64_t reverse_bits(std::uint64_t k, int n) noexcept {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        r = (r << 1) | ((k >> i) & 1u);
    }
    return r;
}

/// Discrete Walsh function value w_{jk} on a width-n grid, exactly +-1.
inline int walsh_sign(std::uint64_t j, std::uint64_t k, int n) noexcept {
    return (std::popcount(j & reverse_bits(k, n)) & 1) ? -1 : 1;
}

/// First n bits of the finite dyadic expansion of x in [0,1).
/// Dyadic rationals terminate (trailing zeros), so values at exact
/// breakpoints are right-continuous.
inline std::vector<int> dyadic_bits(double x, int n) {
    if (!(x >= 0.0 && x < 1.0)) {
        throw std::domain_error("dyadic_bits: x must lie in [0,1)");
    }
    if (n < 1) {
        throw std::invalid_argument("dyadic_bits: width must be >= 1");
    }
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        x *= 2.0;
        const int b = x >= 1.0 ? 1 : 0;
        bits[static_cast<std::size_t>(i)] = b;
        x -= b;
    }
    return bits;
}

/// Continuous-argument Walsh function w_j(x) for x in [0,1).
/// The effective width is the MSB position of j; w_0 is identically 1.
inline int walsh_function(std::uint64_t j, double x) {
    if (!(x >= 0.0 && x < 1.0)) {
        throw std::domain_error("walsh_function: x must lie in [0,1)");
    }
    if (j == 0) return 1;
    const int n = msb_position(j);
    const auto xb = dyadic_bits(x, n);
    int parity = 0;
    for (int i = 0; i < n; ++i) {
        parity ^= static_cast<int>((j >> i) & 1u) & xb[static_cast<std::size_t>(i)];
    }
    return parity ? -1 : 1;
}

}  // namespace walsh
