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
 * Gate sequences realizing exp(i sum_j a_j w_j) as RZ/CNOT circuits,
 * with the Gray-code (sequency) construction and a peephole optimizer
 * built on exact CNOT rewrite rules.
 *
 * Angle convention: RotationZ(theta) = exp(-i theta Z / 2), and a Walsh
 * term a_j is realized with theta_j = -2 a_j on the qubit of the
 * highest set bit of j (qubit numbering per walsh/bits.hpp).
 */

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "walsh/series.hpp"

namespace walsh {

enum class GateKind { RotationZ, CNOT, PauliZ };

struct Gate {
    GateKind kind = GateKind::RotationZ;
    int qubit = 1;      // target (1-based)
    int control = 0;    // CNOT only
    double angle = 0.0; // RotationZ only

    bool operator==(const Gate&) const = default;
};

inline Gate make_rz(int qubit, double angle) {
    return {GateKind::RotationZ, qubit, 0, angle};
}
inline Gate make_cnot(int control, int target) {
    if (control == target) {
        throw std::invalid_argument("CNOT control equals target");
    }
    return {GateKind::CNOT, target, control, 0.0};
}
inline Gate make_z(int qubit) { return {GateKind::PauliZ, qubit, 0, 0.0}; }

/// Which synthesis path produced a sequence.
enum class Provenance { Paley, Sequency, Optimized };

struct GateSequence {
    int n = 0;
    std::vector<Gate> gates;
    Provenance provenance = Provenance::Paley;
    double global_phase = 0.0;  // contribution of a_0, never synthesized
};

struct GateCounts {
    std::size_t rotations = 0;
    std::size_t cnots = 0;
    std::size_t pauli_z = 0;
    std::size_t total = 0;

    bool operator==(const GateCounts&) const = default;
};

/// Raised when asked to synthesize the j = 0 term, which contributes
/// only a global phase and never needs gates.
class GlobalPhaseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Circuit for a single term exp(i a_j w_j): CNOT flank with ascending
/// control index, RZ(-2 a_j) on the highest-set-bit qubit, mirrored
/// flank.  2(h_j - 1) CNOTs + 1 rotation for Hamming weight h_j.
GateSequence walsh_operator_circuit(std::uint64_t j, double a_j, int n);

/// Concatenation of walsh_operator_circuit per term, ascending Paley
/// index.  Full series on n qubits: 2 - 2^{n+1} + n 2^n CNOTs and
/// 2^n - 1 rotations.
GateSequence synthesize_paley(const WalshSeries& s, int n);

/// Gray-code ordering restricted to the present indices, partitioned by
/// MSB; one rotation per term on the partition's target qubit with CNOT
/// groups realizing the XOR between consecutive indices (wrap XOR split
/// across the partition boundary).  Full series: 2^{n+1} - 3 gates.
GateSequence synthesize_sequency(const WalshSeries& s, int n);

/// Exact rewrite rules to a fixed point under a bounded pass budget:
/// adjacent identical CNOTs cancel, diagonals commute past CNOT
/// controls, CNOTs sharing a target or a control commute, and the
/// three-CNOT identity is applied when it enables a cancellation.
/// Preserves circuit_diagonal exactly, never increases the gate count.
GateSequence peephole_optimize(const GateSequence& g);

GateCounts gate_counts(const GateSequence& g);

/// Diagonal entries of the circuit's unitary, computed by tracking a
/// classical basis label through the CNOTs while accumulating RZ/Z
/// phases.  Entry k equals exp(i sum_j a_j w_j(x_k)) for a synthesized
/// series, up to the recorded global phase.
std::vector<std::complex<double>> circuit_diagonal(const GateSequence& g);

/// Phase angles (arguments) of circuit_diagonal without complex
/// exponentiation; includes global_phase.
std::vector<double> circuit_phases(const GateSequence& g);

/// Text format: header "# qubits <n>", then one gate per line:
/// "RZ <qubit> <angle>" | "CNOT <control> <target>" | "Z <qubit>".
std::string to_text(const GateSequence& g);
GateSequence sequence_from_text(const std::string& text);

/// JSON mirrors of the text format and of GateCounts.
std::string to_json(const GateSequence& g);
GateSequence sequence_from_json(const std::string& text);
std::string to_json(const GateCounts& c);

}  // namespace walsh
