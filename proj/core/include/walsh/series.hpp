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
 * Sparse Walsh series selected against a sup-norm error budget, and the
 * associated error bounds and qubit requirements.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walsh/transform.hpp"

namespace walsh {

struct SeriesTerm {
    std::uint64_t index = 0;  // Paley index
    double coeff = 0.0;

    bool operator==(const SeriesTerm&) const = default;
};

/// Sparse set of (Paley index, coefficient) pairs, sorted by descending
/// |coeff| with ties broken by ascending index.
struct WalshSeries {
    std::vector<SeriesTerm> terms;
    int source_n = 0;   // width of the spectrum the series was drawn from
    int n_required = 1; // minimal register width hosting all indices
};

/// Per-propagator error budget for a Trotter evolution.
struct ErrorBudget {
    double epsilon = 0.0;
    double epsilon_v = 0.0;
    double epsilon_k = 0.0;
    double delta_t = 0.0;
    std::optional<double> alpha;  // commutator-norm constant, if known
};

/// Coefficients with |a_j| below this fraction of the largest magnitude
/// are treated as exact zeros.
inline constexpr double kCoeffDustRel = 1e-14;

/// All terms with index j < 2^k; equivalent to resampling at 2^k points.
WalshSeries partial_series(const WalshSpectrum& a, int k);

/// Greedy-by-magnitude prefix: terms are added in descending |a_j| order
/// (ties by ascending index) until the sup-norm reconstruction error on
/// the source grid drops to epsilon or below.
WalshSeries threshold_series(const WalshSpectrum& a, double epsilon);

/// sup over grid points of |sum_terms a_j w_j(x_k) - f_k|.
double reconstruction_error(const WalshSeries& s, const SampledFunction& f);

/// Finite-difference form of the bound eps_k <= sup|f'|/2^k, with the
/// derivative taken with respect to the normalized coordinate in [0,1).
/// Applies to partial_series output at resolution k.
double smoothness_bound(const SampledFunction& f, int k);

/// Max over terms of the MSB position of the index; 1 for a
/// constant-only series.
int required_qubits(const WalshSeries& s);

/// Eq-style total error: alpha*t*dt + eps_V*t + eps_K*t.  Throws if the
/// commutator constant is unavailable (it must not default to zero).
double total_error_bound(const ErrorBudget& b, double t);

/// Dense spectrum with the series terms placed at their indices (width
/// chosen as max(n_required, min_n)).
WalshSpectrum to_spectrum(const WalshSeries& s, int min_n = 0);

/// JSON round-trip: {"source_n":int,"n_required":int,"terms":[{"j":..,"a":..}]}.
std::string to_json(const WalshSeries& s);
WalshSeries series_from_json(const std::string& text);

}  // namespace walsh
