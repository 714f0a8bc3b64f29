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
 * Sampled functions and the discrete Walsh-Fourier transform in Paley
 * order, plus the Gray-code (sequency) index sequence.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace walsh {

/// Physical interval [x_min, x_min + length) mapped affinely onto [0,1).
struct Domain {
    double x_min = 0.0;
    double length = 1.0;

    bool operator==(const Domain&) const = default;
};

/// Real samples f_k on a dyadic grid, sample k at x_min + k*length/2^n.
struct SampledFunction {
    int n = 0;
    std::vector<double> values;
    Domain domain;

    double x(std::size_t k) const {
        return domain.x_min + static_cast<double>(k) * domain.length /
                                  static_cast<double>(values.size());
    }
};

/// Dense Paley-ordered coefficient vector a_0..a_{2^n-1}.
struct WalshSpectrum {
    int n = 0;
    std::vector<double> coeffs;
};

/// a_j = (1/N) sum_k f_k w_{jk}. Fast butterfly in natural (Hadamard)
/// order followed by the bit-reversal permutation that realizes the
/// LSB-of-j / MSB-of-k pairing.
WalshSpectrum forward_wht(const SampledFunction& f);

/// f_k = sum_j a_j w_{jk}; exact inverse of forward_wht up to round-off.
SampledFunction inverse_wht(const WalshSpectrum& a, const Domain& domain = {});

/// Reflected binary Gray code over n-bit strings with the all-zeros
/// string dropped; adjacent entries differ in exactly one bit.
std::vector<std::uint64_t> gray_code_sequence(int n);

/// CSV I/O.  Sampled functions use columns (k, x_k, f_k); spectra use
/// columns (j, a_j).  A single header line is written and tolerated on
/// input.
std::string to_csv(const SampledFunction& f);
std::string to_csv(const WalshSpectrum& a);
SampledFunction sampled_from_csv(const std::string& text);
WalshSpectrum spectrum_from_csv(const std::string& text);

}  // namespace walsh
