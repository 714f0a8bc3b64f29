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
 * Statevector simulation: gate application, diagonal phases, the
 * position<->momentum unitary Fourier transform, and first-order
 * split-operator Trotter evolution.
 */

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "walsh/circuit.hpp"
#include "walsh/transform.hpp"

namespace walsh {

using cdouble = std::complex<double>;

struct StateVector {
    int n = 0;
    std::vector<cdouble> amps;
    Domain grid;

    double x(std::size_t k) const {
        return grid.x_min + static_cast<double>(k) * grid.length /
                                static_cast<double>(amps.size());
    }
};

enum class TransformDirection { ToMomentum, ToPosition };

/// l2 norm of the amplitudes.
double norm(const StateVector& psi);

/// Standard action under the MSB qubit labeling: PauliZ and RotationZ
/// read bit k_i of the basis label, CNOT swaps amplitude pairs where
/// the control bit is set.
StateVector apply_gate(const StateVector& psi, const Gate& g);

/// Runs the whole sequence and applies exp(i global_phase).
StateVector apply_sequence(const StateVector& psi, const GateSequence& g);

/// c_k <- exp(i phi_k) c_k.
StateVector apply_diagonal(const StateVector& psi,
                           const std::vector<double>& phases);

/// Unitary DFT (1/sqrt(N) normalization) between position and momentum
/// representations.  Momentum bin m carries p_m = 2 pi m / L with
/// m in [-N/2, N/2) in the usual wrap-around (centered) convention.
StateVector momentum_transform(const StateVector& psi,
                               TransformDirection dir);

/// Momentum value of bin k (wrap-around convention above).
double momentum_at(const StateVector& psi, std::size_t k);

/// One first-order split-operator step:
/// psi <- F^dag e^{i K_phases} F e^{i V_phases} psi.
/// Callers pass V_phases = -V(x_k) dt and K_phases = -K(p_m) dt.
StateVector trotter_step(const StateVector& psi,
                         const std::vector<double>& v_phases,
                         const std::vector<double>& k_phases);

enum class KineticMode { ExactDiagonal, WalshSeries };

struct SimulationConfig {
    int n = 0;
    Domain grid;
    std::vector<double> potential;  // V(x_k) on the 2^n grid
    double total_time = 0.0;
    int steps = 1;
    KineticMode kinetic_mode = KineticMode::ExactDiagonal;
    int snapshot_stride = 0;  // 0 = initial and final only
};

struct Trajectory {
    std::vector<int> step_index;
    std::vector<StateVector> snapshots;
};

/// Applies trotter_step `steps` times with dt = total_time / steps.
/// Kinetic phases use K(p) = p^2/2 (hbar = m = 1); in WalshSeries mode
/// they pass through a Walsh-series round trip of the phase function.
Trajectory evolve(const SimulationConfig& config, const StateVector& psi0);

/// |<a|b>| in [0,1].  When widths differ the finer state is
/// coarse-grained first: amplitudes are summed over dyadic blocks and
/// scaled by 1/sqrt(block size), so a state that is uniform within
/// blocks maps to the same state at lower resolution.
double fidelity(const StateVector& a, const StateVector& b);

/// Coarse-grain to width n_out <= psi.n by the block-sum rule above.
StateVector coarse_grain(const StateVector& psi, int n_out);

/// Trajectory export, columns (step, k, x_k, prob).
std::string trajectory_to_csv(const Trajectory& t);

/// SimulationConfig JSON round trip.
std::string to_json(const SimulationConfig& c);
SimulationConfig config_from_json(const std::string& text);

}  // namespace walsh
