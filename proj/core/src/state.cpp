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

#include "walsh/state.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>
#include <json.hpp>

#include "walsh/series.hpp"

namespace walsh {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_width(const StateVector& psi) {
    if (psi.n < 1 || psi.amps.size() != (std::size_t{1} << psi.n)) {
        throw std::invalid_argument("state width does not match amplitude count");
    }
}

// FFTW plans are cached per (size, sign).  Plan creation is not
// thread-safe, execution on caller-owned arrays is.
fftw_plan plan_for(std::size_t N, int sign) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{N, sign}];
    if (slot == nullptr) {
        std::vector<cdouble> scratch(N);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        slot = fftw_plan_dft_1d(static_cast<int>(N), buf, buf, sign,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (slot == nullptr) {
            throw std::runtime_error("fftw plan creation failed");
        }
    }
    return slot;
}

}  // namespace

double norm(const StateVector& psi) {
    double s = 0.0;
    for (const auto& c : psi.amps) s += std::norm(c);
    return std::sqrt(s);
}

StateVector apply_gate(const StateVector& psi, const Gate& g) {
    check_width(psi);
    const int n = psi.n;
    if (g.qubit < 1 || g.qubit > n ||
        (g.kind == GateKind::CNOT && (g.control < 1 || g.control > n))) {
        throw std::invalid_argument("apply_gate: qubit index outside register");
    }
    StateVector out = psi;
    const std::size_t N = psi.amps.size();
    // Qubit q reads bit (n - q) of the basis label.
    const std::size_t qbit = std::size_t{1} << (n - g.qubit);
    switch (g.kind) {
        case GateKind::PauliZ:
            for (std::size_t k = 0; k < N; ++k) {
                if (k & qbit) out.amps[k] = -out.amps[k];
            }
            break;
        case GateKind::RotationZ: {
            const cdouble lo = std::polar(1.0, -g.angle / 2.0);
            const cdouble hi = std::polar(1.0, g.angle / 2.0);
            for (std::size_t k = 0; k < N; ++k) {
                out.amps[k] *= (k & qbit) ? hi : lo;
            }
            break;
        }
        case GateKind::CNOT: {
            const std::size_t cbit = std::size_t{1} << (n - g.control);
            for (std::size_t k = 0; k < N; ++k) {
                if ((k & cbit) && !(k & qbit)) {
                    std::swap(out.amps[k], out.amps[k | qbit]);
                }
            }
            break;
        }
    }
    return out;
}

StateVector apply_sequence(const StateVector& psi, const GateSequence& g) {
    if (g.n != psi.n) {
        throw std::invalid_argument("apply_sequence: width mismatch");
    }
    StateVector out = psi;
    for (const auto& gate : g.gates) out = apply_gate(out, gate);
    if (g.global_phase != 0.0) {
        const cdouble ph = std::polar(1.0, g.global_phase);
        for (auto& c : out.amps) c *= ph;
    }
    return out;
}

StateVector apply_diagonal(const StateVector& psi,
                           const std::vector<double>& phases) {
    check_width(psi);
    if (phases.size() != psi.amps.size()) {
        throw std::invalid_argument("apply_diagonal: phase vector length mismatch");
    }
    StateVector out = psi;
    for (std::size_t k = 0; k < phases.size(); ++k) {
        out.amps[k] *= std::polar(1.0, phases[k]);
    }
    return out;
}

StateVector momentum_transform(const StateVector& psi, TransformDirection dir) {
    check_width(psi);
    const std::size_t N = psi.amps.size();
    StateVector out = psi;
    const int sign = dir == TransformDirection::ToMomentum ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan plan = plan_for(N, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(out.amps.data());
    fftw_execute_dft(plan, buf, buf);
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    for (auto& c : out.amps) c *= scale;
    return out;
}

double momentum_at(const StateVector& psi, std::size_t k) {
    check_width(psi);
    const std::size_t N = psi.amps.size();
    if (k >= N) throw std::invalid_argument("momentum_at: bin out of range");
    // Wrap-around: bins [0, N/2) are non-negative frequencies,
    // [N/2, N) negative.
    const double m = k < N / 2 ? static_cast<double>(k)
                               : static_cast<double>(k) - static_cast<double>(N);
    return 2.0 * kPi * m / psi.grid.length;
}

StateVector trotter_step(const StateVector& psi,
                         const std::vector<double>& v_phases,
                         const std::vector<double>& k_phases) {
    StateVector out = apply_diagonal(psi, v_phases);
    out = momentum_transform(out, TransformDirection::ToMomentum);
    out = apply_diagonal(out, k_phases);
    return momentum_transform(out, TransformDirection::ToPosition);
}

Trajectory evolve(const SimulationConfig& config, const StateVector& psi0) {
    if (config.n < 1 || config.steps < 0 || config.total_time < 0.0) {
        throw std::invalid_argument("evolve: invalid configuration");
    }
    if (psi0.n != config.n ||
        config.potential.size() != (std::size_t{1} << config.n)) {
        throw std::invalid_argument("evolve: width mismatch");
    }
    const std::size_t N = psi0.amps.size();

    Trajectory traj;
    traj.step_index.push_back(0);
    traj.snapshots.push_back(psi0);
    if (config.steps == 0) return traj;

    const double dt = config.total_time / config.steps;
    std::vector<double> v_phases(N);
    for (std::size_t k = 0; k < N; ++k) v_phases[k] = -config.potential[k] * dt;

    std::vector<double> k_phases(N);
    for (std::size_t k = 0; k < N; ++k) {
        const double p = momentum_at(psi0, k);
        k_phases[k] = -0.5 * p * p * dt;
    }
    if (config.kinetic_mode == KineticMode::WalshSeries) {
        // Round-trip through the full Walsh spectrum of the kinetic
        // phase function: demonstrates the series representation of
        // the propagator without giving up resolution.
        SampledFunction kf;
        kf.n = config.n;
        kf.values = k_phases;
        k_phases = inverse_wht(forward_wht(kf)).values;
    }

    StateVector psi = psi0;
    for (int s = 1; s <= config.steps; ++s) {
        psi = trotter_step(psi, v_phases, k_phases);
        const bool snap = (config.snapshot_stride > 0 && s % config.snapshot_stride == 0) ||
                          s == config.steps;
        if (snap) {
            traj.step_index.push_back(s);
            traj.snapshots.push_back(psi);
        }
    }
    return traj;
}

StateVector coarse_grain(const StateVector& psi, int n_out) {
    check_width(psi);
    if (n_out < 1 || n_out > psi.n) {
        throw std::invalid_argument("coarse_grain: target width out of range");
    }
    if (n_out == psi.n) return psi;
    const std::size_t block = std::size_t{1} << (psi.n - n_out);
    const std::size_t M = std::size_t{1} << n_out;
    StateVector out;
    out.n = n_out;
    out.grid = psi.grid;
    out.amps.resize(M);
    const double scale = 1.0 / std::sqrt(static_cast<double>(block));
    for (std::size_t k = 0; k < M; ++k) {
        cdouble s = 0.0;
        for (std::size_t b = 0; b < block; ++b) s += psi.amps[k * block + b];
        out.amps[k] = s * scale;
    }
    return out;
}

double fidelity(const StateVector& a, const StateVector& b) {
    check_width(a);
    check_width(b);
    if (!(a.grid == b.grid)) {
        throw std::invalid_argument("fidelity: states live on different domains");
    }
    const StateVector* fine = &a;
    const StateVector* coarse = &b;
    if (a.n < b.n) std::swap(fine, coarse);
    StateVector aligned = coarse_grain(*fine, coarse->n);
    cdouble ip = 0.0;
    for (std::size_t k = 0; k < aligned.amps.size(); ++k) {
        ip += std::conj(aligned.amps[k]) * coarse->amps[k];
    }
    // Normalize by the fine state's norm before projection: amplitude
    // living in sub-grid structure is genuinely unrepresentable at the
    // coarse resolution and must count against the overlap.
    const double na = norm(*fine);
    const double nb = norm(*coarse);
    if (na == 0.0 || nb == 0.0) return 0.0;
    return std::min(1.0, std::abs(ip) / (na * nb));
}

std::string trajectory_to_csv(const Trajectory& t) {
    std::string out = "step,k,x,prob\n";
    char buf[64];
    for (std::size_t s = 0; s < t.snapshots.size(); ++s) {
        const StateVector& psi = t.snapshots[s];
        for (std::size_t k = 0; k < psi.amps.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%d,%zu,%.17g,%.17g\n", t.step_index[s], k,
                          psi.x(k), std::norm(psi.amps[k]));
            out += buf;
        }
    }
    return out;
}

std::string to_json(const SimulationConfig& c) {
    const nlohmann::json j = {
        {"n", c.n},
        {"x_min", c.grid.x_min},
        {"length", c.grid.length},
        {"potential", c.potential},
        {"total_time", c.total_time},
        {"steps", c.steps},
        {"kinetic_mode",
         c.kinetic_mode == KineticMode::ExactDiagonal ? "exact-diagonal" : "walsh-series"},
        {"snapshot_stride", c.snapshot_stride},
    };
    return j.dump(2);
}

SimulationConfig config_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    SimulationConfig c;
    c.n = j.at("n").get<int>();
    c.grid.x_min = j.at("x_min").get<double>();
    c.grid.length = j.at("length").get<double>();
    c.potential = j.at("potential").get<std::vector<double>>();
    c.total_time = j.at("total_time").get<double>();
    c.steps = j.at("steps").get<int>();
    const std::string mode = j.value("kinetic_mode", std::string("exact-diagonal"));
    if (mode == "exact-diagonal") {
        c.kinetic_mode = KineticMode::ExactDiagonal;
    } else if (mode == "walsh-series") {
        c.kinetic_mode = KineticMode::WalshSeries;
    } else {
        throw std::invalid_argument("unknown kinetic_mode: " + mode);
    }
    c.snapshot_stride = j.value("snapshot_stride", 0);
    if (c.n < 1 || c.steps < 0 || c.total_time < 0.0 ||
        c.potential.size() != (std::size_t{1} << c.n)) {
        throw std::invalid_argument("invalid simulation configuration");
    }
    return c;
}

}  // namespace walsh
