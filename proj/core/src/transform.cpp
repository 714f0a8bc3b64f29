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

#include "walsh/transform.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "walsh/bits.hpp"

namespace walsh {

namespace {

int width_of(std::size_t size) {
    if (size == 0 || (size & (size - 1)) != 0) {
        throw std::invalid_argument("sample count must be a power of two");
    }
    int n = 0;
    while ((std::size_t{1} << n) < size) ++n;
    return n;
}

// Unnormalized in-place butterfly producing natural (Hadamard) order.
void fwht_natural(std::vector<double>& a) {
    const std::size_t N = a.size();
    for (std::size_t h = 1; h < N; h <<= 1) {
        for (std::size_t i = 0; i < N; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                const double x = a[j];
                const double y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
        }
    }
}

void append_double(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

}  // namespace

WalshSpectrum forward_wht(const SampledFunction& f) {
    const int n = width_of(f.values.size());
    if (f.n != 0 && f.n != n) {
        throw std::invalid_argument("forward_wht: width does not match sample count");
    }
    const std::size_t N = f.values.size();
    std::vector<double> g = f.values;
    fwht_natural(g);
    WalshSpectrum out;
    out.n = n;
    out.coeffs.resize(N);
    // The natural-order butterfly pairs bit i of j with bit i of k; the
    // Paley pairing uses the reversed k bits, so entry j lives at the
    // bit-reversed position.
    const double inv = 1.0 / static_cast<double>(N);
    for (std::size_t j = 0; j < N; ++j) {
        out.coeffs[j] = g[reverse_bits(j, n)] * inv;
    }
    return out;
}

SampledFunction inverse_wht(const WalshSpectrum& a, const Domain& domain) {
    const int n = width_of(a.coeffs.size());
    if (a.n != 0 && a.n != n) {
        throw std::invalid_argument("inverse_wht: width does not match coefficient count");
    }
    const std::size_t N = a.coeffs.size();
    SampledFunction out;
    out.n = n;
    out.domain = domain;
    out.values.resize(N);
    for (std::size_t m = 0; m < N; ++m) {
        out.values[m] = a.coeffs[reverse_bits(m, n)];
    }
    fwht_natural(out.values);
    return out;
}

std::vector<std::uint64_t> gray_code_sequence(int n) {
    if (n < 1 || n > 62) {
        throw std::invalid_argument("gray_code_sequence: width out of range");
    }
    std::vector<std::uint64_t> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
        out.push_back(i ^ (i >> 1));
    }
    return out;
}

std::string to_csv(const SampledFunction& f) {
    std::string out = "k,x,f\n";
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        out += std::to_string(k);
        out += ',';
        append_double(out, f.x(k));
        out += ',';
        append_double(out, f.values[k]);
        out += '\n';
    }
    return out;
}

std::string to_csv(const WalshSpectrum& a) {
    std::string out = "j,a\n";
    for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
        out += std::to_string(j);
        out += ',';
        append_double(out, a.coeffs[j]);
        out += '\n';
    }
    return out;
}

namespace {

// Splits non-empty lines, skipping a header row whose first field is
// not numeric.
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (rows.empty() && !fields.empty()) {
            try {
                (void)std::stod(fields[0]);
            } catch (const std::exception&) {
                continue;  // header
            }
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

SampledFunction sampled_from_csv(const std::string& text) {
    const auto rows = parse_csv(text);
    SampledFunction f;
    f.values.reserve(rows.size());
    std::vector<double> xs;
    for (const auto& r : rows) {
        if (r.size() < 3) {
            throw std::invalid_argument("sampled_from_csv: need columns k,x,f");
        }
        xs.push_back(std::stod(r[1]));
        f.values.push_back(std::stod(r[2]));
    }
    f.n = width_of(f.values.size());
    if (xs.size() >= 2) {
        f.domain.x_min = xs.front();
        f.domain.length = (xs[1] - xs[0]) * static_cast<double>(xs.size());
    }
    return f;
}

WalshSpectrum spectrum_from_csv(const std::string& text) {
    const auto rows = parse_csv(text);
    WalshSpectrum a;
    a.coeffs.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() < 2) {
            throw std::invalid_argument("spectrum_from_csv: need columns j,a");
        }
        a.coeffs.push_back(std::stod(r.back()));
    }
    a.n = width_of(a.coeffs.size());
    return a;
}

}  // namespace walsh
