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

#include "walsh/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "walsh/bits.hpp"

namespace walsh {

namespace {

void sort_terms(std::vector<SeriesTerm>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const SeriesTerm& a, const SeriesTerm& b) {
                  const double ma = std::abs(a.coeff);
                  const double mb = std::abs(b.coeff);
                  if (ma != mb) return ma > mb;
                  return a.index < b.index;
              });
}

int terms_required_qubits(const std::vector<SeriesTerm>& terms) {
    int n = 1;
    for (const auto& t : terms) n = std::max(n, msb_position(t.index));
    return n;
}

double dust_cutoff(const std::vector<double>& coeffs) {
    double sup = 0.0;
    for (double c : coeffs) sup = std::max(sup, std::abs(c));
    return kCoeffDustRel * sup;
}

}  // namespace

WalshSeries partial_series(const WalshSpectrum& a, int k) {
    if (k < 0 || k > a.n) {
        throw std::invalid_argument("partial_series: resolution exponent out of range");
    }
    const double dust = dust_cutoff(a.coeffs);
    WalshSeries s;
    s.source_n = a.n;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << k); ++j) {
        const double c = a.coeffs[j];
        if (std::abs(c) > dust) s.terms.push_back({j, c});
    }
    sort_terms(s.terms);
    s.n_required = terms_required_qubits(s.terms);
    return s;
}

WalshSeries threshold_series(const WalshSpectrum& a, double epsilon) {
    if (epsilon < 0.0) {
        throw std::invalid_argument("threshold_series: negative tolerance");
    }
    const std::size_t N = a.coeffs.size();
    const int n = a.n;
    const double dust = dust_cutoff(a.coeffs);

    std::vector<std::uint64_t> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint64_t x, std::uint64_t y) {
        const double mx = std::abs(a.coeffs[x]);
        const double my = std::abs(a.coeffs[y]);
        if (mx != my) return mx > my;
        return x < y;
    });

    // Residual f_k minus the running reconstruction; adding term j
    // subtracts a_j w_j(x_k) in O(N) so the whole greedy pass stays
    // O(N * terms).
    std::vector<double> residual = inverse_wht(a).values;

    WalshSeries s;
    s.source_n = n;
    double sup = 0.0;
    for (double r : residual) sup = std::max(sup, std::abs(r));
    if (sup <= epsilon) {
        s.n_required = 1;
        return s;
    }
    for (std::uint64_t j : order) {
        const double c = a.coeffs[j];
        if (std::abs(c) <= dust) break;  // only dust left
        s.terms.push_back({j, c});
        sup = 0.0;
        for (std::size_t k = 0; k < N; ++k) {
            residual[k] -= c * walsh_sign(j, k, n);
            sup = std::max(sup, std::abs(residual[k]));
        }
        if (sup <= epsilon) break;
    }
    sort_terms(s.terms);
    s.n_required = terms_required_qubits(s.terms);
    return s;
}

double reconstruction_error(const WalshSeries& s, const SampledFunction& f) {
    const std::size_t N = f.values.size();
    const int n = f.n;
    if (s.n_required > n) {
        throw std::invalid_argument("reconstruction_error: series needs a wider register than f");
    }
    // Zero-padded sparse spectrum through the inverse transform keeps
    // this the same code path the synthesis verifier uses.
    WalshSpectrum padded;
    padded.n = n;
    padded.coeffs.assign(N, 0.0);
    for (const auto& t : s.terms) padded.coeffs[t.index] = t.coeff;
    const SampledFunction rec = inverse_wht(padded, f.domain);
    double sup = 0.0;
    for (std::size_t k = 0; k < N; ++k) {
        sup = std::max(sup, std::abs(rec.values[k] - f.values[k]));
    }
    return sup;
}

double smoothness_bound(const SampledFunction& f, int k) {
    if (f.values.size() < 2) {
        throw std::invalid_argument("smoothness_bound: need at least 2 samples");
    }
    if (k < 0 || k > f.n) {
        throw std::invalid_argument("smoothness_bound: resolution exponent out of range");
    }
    // sup|f'| by forward differences in the normalized coordinate
    // x/L in [0,1), where adjacent samples are 1/N apart.
    const std::size_t N = f.values.size();
    double sup_deriv = 0.0;
    for (std::size_t i = 0; i + 1 < N; ++i) {
        sup_deriv = std::max(
            sup_deriv, std::abs(f.values[i + 1] - f.values[i]) * static_cast<double>(N));
    }
    return sup_deriv / static_cast<double>(std::uint64_t{1} << k);
}

int required_qubits(const WalshSeries& s) {
    return terms_required_qubits(s.terms);
}

double total_error_bound(const ErrorBudget& b, double t) {
    if (t < 0.0) throw std::invalid_argument("total_error_bound: negative time");
    if (b.delta_t <= 0.0) {
        throw std::invalid_argument("total_error_bound: delta_t must be positive");
    }
    if (!b.alpha.has_value()) {
        throw std::invalid_argument(
            "total_error_bound: commutator constant alpha unavailable");
    }
    return *b.alpha * t * b.delta_t + b.epsilon_v * t + b.epsilon_k * t;
}

WalshSpectrum to_spectrum(const WalshSeries& s, int min_n) {
    const int n = std::max(s.n_required, std::max(min_n, 1));
    WalshSpectrum a;
    a.n = n;
    a.coeffs.assign(std::size_t{1} << n, 0.0);
    for (const auto& t : s.terms) {
        if (msb_position(t.index) > n) {
            throw std::invalid_argument("to_spectrum: index exceeds width");
        }
        a.coeffs[t.index] = t.coeff;
    }
    return a;
}

std::string to_json(const WalshSeries& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : s.terms) {
        terms.push_back({{"j", t.index}, {"a", t.coeff}});
    }
    const nlohmann::json j = {
        {"source_n", s.source_n},
        {"n_required", s.n_required},
        {"terms", terms},
    };
    return j.dump(2);
}

WalshSeries series_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    WalshSeries s;
    s.source_n = j.at("source_n").get<int>();
    s.n_required = j.at("n_required").get<int>();
    for (const auto& t : j.at("terms")) {
        s.terms.push_back({t.at("j").get<std::uint64_t>(), t.at("a").get<double>()});
    }
    sort_terms(s.terms);
    if (s.n_required < terms_required_qubits(s.terms)) {
        throw std::invalid_argument("series_from_json: n_required below index widths");
    }
    return s;
}

}  // namespace walsh
