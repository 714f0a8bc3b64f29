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

#include "walsh/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "walsh/bits.hpp"

namespace walsh {

namespace {

void check_width(const WalshSeries& s, int n) {
    if (n < 1 || n > 62) {
        throw std::invalid_argument("register width out of range");
    }
    if (required_qubits(s) > n) {
        throw std::invalid_argument("register too narrow for the series");
    }
}

double constant_term(const WalshSeries& s) {
    for (const auto& t : s.terms) {
        if (t.index == 0) return t.coeff;
    }
    return 0.0;
}

// Appends a CNOT, cancelling it against an identical immediately
// preceding one instead of emitting the pair.
void push_cnot(std::vector<Gate>& gates, int control, int target) {
    const Gate g = make_cnot(control, target);
    if (!gates.empty() && gates.back() == g) {
        gates.pop_back();
    } else {
        gates.push_back(g);
    }
}

// One CNOT per set bit of `mask` (ascending bit position), all
// targeting `target`'s qubit; bit i lives on qubit i.
void push_mask(std::vector<Gate>& gates, std::uint64_t mask, int target) {
    for (int i = 0; mask >> (i); ++i) {
        if ((mask >> i) & 1u) push_cnot(gates, i + 1, target);
    }
}

// True when the pair provably commutes: CNOTs commute unless one's
// target is the other's control; a diagonal commutes with a CNOT
// unless it sits on the CNOT's target; diagonals always commute.
bool commutes(const Gate& a, const Gate& b) {
    if (a.kind == GateKind::CNOT && b.kind == GateKind::CNOT) {
        return a.qubit != b.control && b.qubit != a.control;
    }
    if (a.kind == GateKind::CNOT) return b.qubit != a.qubit;
    if (b.kind == GateKind::CNOT) return a.qubit != b.qubit;
    return true;
}

// Cancels identical CNOT pairs separated only by commuting gates.
// Returns the number of rewrites performed (each cancellation counts
// as one).  Runs until no further cancellation or the budget is spent.
std::size_t cancel_pass(std::vector<Gate>& g, std::size_t budget) {
    std::size_t rewrites = 0;
    bool changed = true;
    while (changed && rewrites < budget) {
        changed = false;
        std::size_t i = 0;
        while (i < g.size()) {
            bool hit = false;
            if (g[i].kind == GateKind::CNOT) {
                for (std::size_t j = i + 1; j < g.size(); ++j) {
                    if (g[j] == g[i]) {
                        g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
                        g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
                        hit = true;
                        changed = true;
                        ++rewrites;
                        break;
                    }
                    if (!commutes(g[i], g[j])) break;
                }
            }
            if (!hit) ++i;  // a hit re-examines the same position
            if (rewrites >= budget) return rewrites;
        }
    }
    return rewrites;
}

constexpr std::size_t kTripleLookahead = 8;

// Tries the three-CNOT identity C_j^i C_k^j = C_k^j C_k^i C_j^i at
// adjacent pairs, keeping a rewrite only when the follow-up
// cancellation pass strictly shrinks the sequence (checked within a
// bounded lookahead, so the identity never grows the output).
bool triple_pass(std::vector<Gate>& g, std::size_t& rewrites, std::size_t budget) {
    for (std::size_t p = 0; p + 1 < g.size() && rewrites < budget; ++p) {
        const Gate& a = g[p];
        const Gate& b = g[p + 1];
        if (a.kind != GateKind::CNOT || b.kind != GateKind::CNOT) continue;
        if (a.qubit != b.control) continue;  // need target(a) == control(b)
        // Candidate products appear only within the lookahead window.
        const Gate cross = make_cnot(a.control, b.qubit);
        bool candidate = false;
        const std::size_t lim = std::min(g.size(), p + 2 + kTripleLookahead);
        for (std::size_t j = p + 2; j < lim; ++j) {
            if (g[j] == cross || g[j] == a || g[j] == b) {
                candidate = true;
                break;
            }
        }
        if (!candidate) continue;
        std::vector<Gate> trial = g;
        trial[p] = b;
        trial[p + 1] = cross;
        trial.insert(trial.begin() + static_cast<std::ptrdiff_t>(p + 2), a);
        const std::size_t used = cancel_pass(trial, budget - rewrites);
        if (trial.size() < g.size()) {
            g = std::move(trial);
            rewrites += used + 1;
            return true;
        }
    }
    return false;
}

void append_double(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

}  // namespace

GateSequence walsh_operator_circuit(std::uint64_t j, double a_j, int n) {
    if (j == 0) {
        throw GlobalPhaseError(
            "index 0 contributes only a global phase; no gates required");
    }
    if (n < 1 || msb_position(j) > n) {
        throw std::invalid_argument("walsh_operator_circuit: index exceeds width");
    }
    GateSequence seq;
    seq.n = n;
    seq.provenance = Provenance::Paley;
    const int target = msb_position(j);
    for (int i = 1; i < target; ++i) {
        if ((j >> (i - 1)) & 1u) seq.gates.push_back(make_cnot(i, target));
    }
    const std::size_t flank = seq.gates.size();
    seq.gates.push_back(make_rz(target, -2.0 * a_j));
    for (std::size_t i = flank; i-- > 0;) seq.gates.push_back(seq.gates[i]);
    return seq;
}

GateSequence synthesize_paley(const WalshSeries& s, int n) {
    check_width(s, n);
    GateSequence seq;
    seq.n = n;
    seq.provenance = Provenance::Paley;
    seq.global_phase = constant_term(s);
    std::vector<SeriesTerm> by_index = s.terms;
    std::sort(by_index.begin(), by_index.end(),
              [](const SeriesTerm& a, const SeriesTerm& b) { return a.index < b.index; });
    for (const auto& t : by_index) {
        if (t.index == 0) continue;
        const GateSequence op = walsh_operator_circuit(t.index, t.coeff, n);
        seq.gates.insert(seq.gates.end(), op.gates.begin(), op.gates.end());
    }
    return seq;
}

GateSequence synthesize_sequency(const WalshSeries& s, int n) {
    check_width(s, n);
    GateSequence seq;
    seq.n = n;
    seq.provenance = Provenance::Sequency;
    seq.global_phase = constant_term(s);

    std::vector<double> coeff_of(std::size_t{1} << n, 0.0);
    std::vector<bool> present(std::size_t{1} << n, false);
    for (const auto& t : s.terms) {
        if (t.index == 0) continue;
        coeff_of[t.index] = t.coeff;
        present[t.index] = true;
    }

    // Gray order restricted to present indices, grouped by MSB.  Each
    // group keeps its rotations on the shared target qubit; the XOR of
    // consecutive indices (with the target bit itself as the anchor at
    // both ends) decides the CNOT controls between rotations.
    const auto gray = gray_code_sequence(n);
    std::size_t pos = 0;
    while (pos < gray.size()) {
        const int msb = msb_position(gray[pos]);
        std::size_t end = pos;
        while (end < gray.size() && msb_position(gray[end]) == msb) ++end;
        const std::uint64_t anchor = std::uint64_t{1} << (msb - 1);
        std::uint64_t prev = anchor;
        bool any = false;
        for (std::size_t i = pos; i < end; ++i) {
            const std::uint64_t idx = gray[i];
            if (!present[idx]) continue;
            push_mask(seq.gates, prev ^ idx, msb);
            seq.gates.push_back(make_rz(msb, -2.0 * coeff_of[idx]));
            prev = idx;
            any = true;
        }
        if (any) push_mask(seq.gates, prev ^ anchor, msb);
        pos = end;
    }
    return seq;
}

GateSequence peephole_optimize(const GateSequence& g) {
    GateSequence out = g;
    out.provenance = Provenance::Optimized;
    if (out.gates.empty()) return out;
    const std::size_t budget = 10 * out.gates.size();
    std::size_t rewrites = cancel_pass(out.gates, budget);
    while (rewrites < budget && triple_pass(out.gates, rewrites, budget)) {
    }
    return out;
}

GateCounts gate_counts(const GateSequence& g) {
    GateCounts c;
    for (const auto& gate : g.gates) {
        switch (gate.kind) {
            case GateKind::RotationZ: ++c.rotations; break;
            case GateKind::CNOT: ++c.cnots; break;
            case GateKind::PauliZ: ++c.pauli_z; break;
        }
    }
    c.total = c.rotations + c.cnots + c.pauli_z;
    return c;
}

std::vector<double> circuit_phases(const GateSequence& g) {
    const int n = g.n;
    if (n < 1 || n > 26) {
        throw std::invalid_argument("circuit_phases: width out of range");
    }
    const std::size_t N = std::size_t{1} << n;
    std::vector<double> phases(N, g.global_phase);
    for (std::size_t k = 0; k < N; ++k) {
        std::uint64_t label = k;
        double phase = 0.0;
        for (const auto& gate : g.gates) {
            // Qubit q holds bit k_q, i.e. bit (n - q) counting from the
            // least significant end of the label.
            switch (gate.kind) {
                case GateKind::CNOT:
                    if ((label >> (n - gate.control)) & 1u) {
                        label ^= std::uint64_t{1} << (n - gate.qubit);
                    }
                    break;
                case GateKind::RotationZ:
                    phase += ((label >> (n - gate.qubit)) & 1u) ? gate.angle / 2.0
                                                                : -gate.angle / 2.0;
                    break;
                case GateKind::PauliZ:
                    if ((label >> (n - gate.qubit)) & 1u) {
                        phase += std::acos(-1.0);
                    }
                    break;
            }
        }
        if (label != k) {
            throw std::invalid_argument("circuit_phases: sequence is not diagonal");
        }
        phases[k] += phase;
    }
    return phases;
}

std::vector<std::complex<double>> circuit_diagonal(const GateSequence& g) {
    const auto phases = circuit_phases(g);
    std::vector<std::complex<double>> d(phases.size());
    for (std::size_t k = 0; k < phases.size(); ++k) {
        d[k] = std::polar(1.0, phases[k]);
    }
    return d;
}

std::string to_text(const GateSequence& g) {
    std::string out = "# qubits " + std::to_string(g.n) + "\n";
    for (const auto& gate : g.gates) {
        switch (gate.kind) {
            case GateKind::RotationZ:
                out += "RZ " + std::to_string(gate.qubit) + ' ';
                append_double(out, gate.angle);
                out += '\n';
                break;
            case GateKind::CNOT:
                out += "CNOT " + std::to_string(gate.control) + ' ' +
                       std::to_string(gate.qubit) + '\n';
                break;
            case GateKind::PauliZ:
                out += "Z " + std::to_string(gate.qubit) + '\n';
                break;
        }
    }
    return out;
}

GateSequence sequence_from_text(const std::string& text) {
    GateSequence g;
    std::istringstream in(text);
    std::string line;
    bool have_n = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "#") {
            std::string key;
            ls >> key;
            if (key == "qubits") {
                ls >> g.n;
                have_n = true;
            }
            continue;
        }
        if (tok == "RZ") {
            int q;
            double th;
            if (!(ls >> q >> th)) throw std::invalid_argument("bad RZ line: " + line);
            g.gates.push_back(make_rz(q, th));
        } else if (tok == "CNOT") {
            int c, t;
            if (!(ls >> c >> t)) throw std::invalid_argument("bad CNOT line: " + line);
            g.gates.push_back(make_cnot(c, t));
        } else if (tok == "Z") {
            int q;
            if (!(ls >> q)) throw std::invalid_argument("bad Z line: " + line);
            g.gates.push_back(make_z(q));
        } else {
            throw std::invalid_argument("unknown gate: " + tok);
        }
    }
    if (!have_n) {
        int n = 1;
        for (const auto& gate : g.gates) {
            n = std::max({n, gate.qubit, gate.control});
        }
        g.n = n;
    }
    for (const auto& gate : g.gates) {
        if (gate.qubit < 1 || gate.qubit > g.n ||
            (gate.kind == GateKind::CNOT && (gate.control < 1 || gate.control > g.n))) {
            throw std::invalid_argument("gate index outside register");
        }
    }
    return g;
}

namespace {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Paley: return "paley";
        case Provenance::Sequency: return "sequency";
        case Provenance::Optimized: return "optimized";
    }
    return "paley";
}

Provenance provenance_from(const std::string& s) {
    if (s == "paley") return Provenance::Paley;
    if (s == "sequency") return Provenance::Sequency;
    if (s == "optimized") return Provenance::Optimized;
    throw std::invalid_argument("unknown provenance: " + s);
}

}  // namespace

std::string to_json(const GateSequence& g) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto& gate : g.gates) {
        switch (gate.kind) {
            case GateKind::RotationZ:
                gates.push_back({{"gate", "RZ"}, {"qubit", gate.qubit}, {"angle", gate.angle}});
                break;
            case GateKind::CNOT:
                gates.push_back(
                    {{"gate", "CNOT"}, {"control", gate.control}, {"target", gate.qubit}});
                break;
            case GateKind::PauliZ:
                gates.push_back({{"gate", "Z"}, {"qubit", gate.qubit}});
                break;
        }
    }
    const nlohmann::json j = {
        {"n", g.n},
        {"provenance", provenance_name(g.provenance)},
        {"global_phase", g.global_phase},
        {"gates", gates},
    };
    return j.dump(2);
}

GateSequence sequence_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    GateSequence g;
    g.n = j.at("n").get<int>();
    g.global_phase = j.value("global_phase", 0.0);
    g.provenance = provenance_from(j.value("provenance", std::string("paley")));
    for (const auto& item : j.at("gates")) {
        const std::string kind = item.at("gate").get<std::string>();
        if (kind == "RZ") {
            g.gates.push_back(make_rz(item.at("qubit").get<int>(),
                                      item.at("angle").get<double>()));
        } else if (kind == "CNOT") {
            g.gates.push_back(make_cnot(item.at("control").get<int>(),
                                        item.at("target").get<int>()));
        } else if (kind == "Z") {
            g.gates.push_back(make_z(item.at("qubit").get<int>()));
        } else {
            throw std::invalid_argument("unknown gate kind: " + kind);
        }
    }
    return g;
}

std::string to_json(const GateCounts& c) {
    const nlohmann::json j = {
        {"rotations", c.rotations},
        {"cnots", c.cnots},
        {"pauli_z", c.pauli_z},
        {"total", c.total},
    };
    return j.dump(2);
}

}  // namespace walsh
