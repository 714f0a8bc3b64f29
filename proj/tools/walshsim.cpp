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

// Command-line front-end.  Subcommands: wht, approx, synth, simulate,
// bench.  Exit codes: 0 success, 2 usage/validation error,
// 3 verification failure.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "walsh/bits.hpp"
#include "walsh/circuit.hpp"
#include "walsh/eckart.hpp"
#include "walsh/series.hpp"
#include "walsh/state.hpp"
#include "walsh/transform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

// Final states round-trip through a small CSV: columns k, re, im.
std::string state_to_csv(const walsh::StateVector& psi) {
    std::string out = "k,re,im\n";
    char buf[80];
    for (std::size_t k = 0; k < psi.amps.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", k, psi.amps[k].real(),
                      psi.amps[k].imag());
        out += buf;
    }
    return out;
}

walsh::StateVector state_from_csv(const std::string& text, const walsh::Domain& grid) {
    walsh::StateVector psi;
    psi.grid = grid;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.rfind("k,", 0) == 0) continue;
        std::istringstream ls(line);
        std::string k, re, im;
        std::getline(ls, k, ',');
        std::getline(ls, re, ',');
        std::getline(ls, im, ',');
        psi.amps.emplace_back(std::stod(re), std::stod(im));
    }
    int n = 0;
    while ((std::size_t{1} << n) < psi.amps.size()) ++n;
    if ((std::size_t{1} << n) != psi.amps.size()) {
        throw std::runtime_error("state CSV length is not a power of two");
    }
    psi.n = n;
    return psi;
}

walsh::WalshSeries load_series(const std::string& path) {
    const auto j = nlohmann::json::parse(slurp(path));
    // Accept both the bare series object and the approx summary that
    // wraps it under "series".
    const nlohmann::json& s = j.contains("series") ? j.at("series") : j;
    return walsh::series_from_json(s.dump());
}

int cmd_wht(const std::string& input, const std::string& output, bool inverse) {
    const std::string text = slurp(input);
    if (inverse) {
        const walsh::WalshSpectrum a = walsh::spectrum_from_csv(text);
        spill(output, walsh::to_csv(walsh::inverse_wht(a)));
    } else {
        const walsh::SampledFunction f = walsh::sampled_from_csv(text);
        spill(output, walsh::to_csv(walsh::forward_wht(f)));
    }
    return kExitOk;
}

int cmd_approx(const std::string& input, const std::string& output, double eps_rel,
               double eps_abs, int k, bool has_rel, bool has_abs, bool has_k) {
    const walsh::SampledFunction f = walsh::sampled_from_csv(slurp(input));
    const walsh::WalshSpectrum a = walsh::forward_wht(f);
    walsh::WalshSeries series;
    if (has_k) {
        series = walsh::partial_series(a, k);
    } else {
        double eps = eps_abs;
        if (has_rel) {
            double sup = 0.0;
            for (double v : f.values) sup = std::max(sup, std::abs(v));
            eps = eps_rel * sup;
        }
        series = walsh::threshold_series(a, eps);
    }
    const double err = walsh::reconstruction_error(series, f);
    nlohmann::json out = {
        {"series", nlohmann::json::parse(walsh::to_json(series))},
        {"achieved_error", err},
        {"required_qubits", walsh::required_qubits(series)},
    };
    spill(output, out.dump(2) + "\n");
    return kExitOk;
}

int cmd_synth(const std::string& input, const std::string& output,
              const std::string& mode, bool verify, int width) {
    const walsh::WalshSeries series = load_series(input);
    const int n = width > 0 ? width : std::max(series.n_required, 1);
    walsh::GateSequence seq;
    if (mode == "paley") {
        seq = walsh::synthesize_paley(series, n);
    } else if (mode == "sequency") {
        seq = walsh::synthesize_sequency(series, n);
    } else if (mode == "optimized") {
        seq = walsh::peephole_optimize(walsh::synthesize_sequency(series, n));
    } else {
        std::cerr << "unknown mode: " << mode << "\n";
        return kExitUsage;
    }
    spill(output, walsh::to_text(seq));
    spill(output + ".json", walsh::to_json(seq) + "\n");
    std::cout << walsh::to_json(walsh::gate_counts(seq)) << "\n";

    if (verify) {
        if (n > 12) {
            std::cerr << "verification limited to 12 qubits\n";
            return kExitUsage;
        }
        const auto phases = walsh::circuit_phases(seq);
        double max_dev = 0.0;
        const std::size_t N = std::size_t{1} << n;
        for (std::size_t k = 0; k < N; ++k) {
            double want = 0.0;
            for (const auto& t : series.terms) {
                want += t.coeff * walsh::walsh_sign(t.index, k, n);
            }
            double d = std::remainder(phases[k] - want, 2.0 * std::acos(-1.0));
            max_dev = std::max(max_dev, std::abs(d));
        }
        std::cerr << "max phase deviation: " << max_dev << "\n";
        if (max_dev > 1e-9) return kExitVerify;
    }
    return kExitOk;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir,
                 const std::string& reference) {
    const walsh::SimulationConfig config = walsh::config_from_json(slurp(config_path));
    // The packet parameters ride along in the same JSON.
    const auto j = nlohmann::json::parse(slurp(config_path));
    const double x0 = j.value("x0", config.grid.x_min + 0.25 * config.grid.length);
    const double p0 = j.value("p0", 0.0);
    const double sigma = j.value("sigma", config.grid.length / 16.0);
    const walsh::StateVector psi0 =
        walsh::gaussian_packet(x0, p0, sigma, config.n, config.grid);
    const walsh::Trajectory traj = walsh::evolve(config, psi0);
    std::filesystem::create_directories(out_dir);
    spill(out_dir + "/trajectory.csv", walsh::trajectory_to_csv(traj));
    const walsh::StateVector& final_state = traj.snapshots.back();
    spill(out_dir + "/final_state.csv", state_to_csv(final_state));

    nlohmann::json summary = {
        {"steps", config.steps},
        {"final_norm", walsh::norm(final_state)},
        {"snapshots", traj.snapshots.size()},
    };
    if (!reference.empty()) {
        const walsh::StateVector ref = state_from_csv(slurp(reference), config.grid);
        summary["fidelity_vs_reference"] = walsh::fidelity(final_state, ref);
    }
    spill(out_dir + "/summary.json", summary.dump(2) + "\n");
    std::cout << summary.dump(2) << "\n";
    return kExitOk;
}

int cmd_bench(const std::string& scenario_path, const std::string& out_dir) {
    walsh::EckartScenario scenario;
    if (!scenario_path.empty()) {
        scenario = walsh::scenario_from_json(slurp(scenario_path));
    }
    const walsh::BenchmarkReport report = walsh::run_benchmark(scenario);
    std::filesystem::create_directories(out_dir);
    spill(out_dir + "/report.json", walsh::to_json(report) + "\n");
    spill(out_dir + "/baseline.trajectory.csv",
          walsh::trajectory_to_csv(report.baseline_trajectory));
    for (const auto& rung : report.rungs) {
        const std::string stem = out_dir + "/rung_n" + std::to_string(rung.n);
        spill(stem + ".circuit.txt", walsh::to_text(rung.circuit));
        spill(stem + ".trajectory.csv", walsh::trajectory_to_csv(rung.trajectory));
    }
    std::cout << walsh::to_json(report) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Walsh-series approximation, diagonal-unitary circuit "
                 "synthesis, and split-operator simulation"};
    app.require_subcommand(1);

    int threads = 1;
    if (const char* env = std::getenv("WALSH_SYNTH_THREADS")) {
        threads = std::max(1, std::atoi(env));
    }
    app.add_option("--threads", threads,
                   "Worker threads for module-internal parallelism (default 1)");

    auto* wht = app.add_subcommand("wht", "Discrete Walsh-Fourier transform of a CSV");
    std::string wht_in, wht_out = "spectrum.csv";
    bool wht_inverse = false;
    wht->add_option("--input", wht_in, "Input CSV")->required();
    wht->add_option("--output", wht_out, "Output CSV");
    wht->add_flag("--inverse", wht_inverse, "Spectrum -> samples instead");

    auto* approx = app.add_subcommand("approx", "Truncate a spectrum under an error budget");
    std::string ap_in, ap_out = "series.json";
    double ap_rel = 0.0, ap_abs = 0.0;
    int ap_k = 0;
    approx->add_option("--input", ap_in, "Input samples CSV")->required();
    approx->add_option("--output", ap_out, "Output series JSON");
    auto* orel = approx->add_option("--epsilon-rel", ap_rel,
                                    "Sup-norm budget as a fraction of sup|f| in [0,1]");
    auto* oabs = approx->add_option("--epsilon-abs", ap_abs, "Absolute sup-norm budget");
    auto* ok = approx->add_option("--k", ap_k, "Partial series resolution exponent");
    orel->excludes(oabs)->excludes(ok);
    oabs->excludes(ok);

    auto* synth = app.add_subcommand("synth", "Synthesize a circuit from a series");
    std::string sy_in, sy_out = "circuit.txt", sy_mode = "optimized";
    bool sy_verify = false;
    int sy_n = 0;
    synth->add_option("--input", sy_in, "Series JSON")->required();
    synth->add_option("--output", sy_out, "Circuit text output");
    synth->add_option("--mode", sy_mode, "paley | sequency | optimized");
    synth->add_option("--n", sy_n, "Register width (default: minimal)");
    synth->add_flag("--verify", sy_verify, "Check the diagonal against the series");

    auto* simulate = app.add_subcommand("simulate", "Split-operator Trotter evolution");
    std::string sim_config, sim_out = "sim_out", sim_ref;
    simulate->add_option("--config", sim_config, "Simulation config JSON")->required();
    simulate->add_option("--out-dir", sim_out, "Output directory");
    simulate->add_option("--reference", sim_ref, "Reference final-state CSV");

    auto* bench = app.add_subcommand("bench", "Barrier-scattering fidelity ladder");
    std::string be_scenario, be_out = "bench_out";
    bench->add_option("--scenario", be_scenario, "Scenario JSON (default built-in)");
    bench->add_option("--out-dir", be_out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    (void)threads;  // synthesis is deterministic; the flag reserves the knob

    try {
        if (*wht) return cmd_wht(wht_in, wht_out, wht_inverse);
        if (*approx) {
            if ((orel->count() ? 1 : 0) + (oabs->count() ? 1 : 0) + (ok->count() ? 1 : 0) != 1) {
                std::cerr << "exactly one of --epsilon-rel, --epsilon-abs, --k required\n";
                return kExitUsage;
            }
            if (orel->count() && (ap_rel < 0.0 || ap_rel > 1.0)) {
                std::cerr << "--epsilon-rel must lie in [0,1]\n";
                return kExitUsage;
            }
            return cmd_approx(ap_in, ap_out, ap_rel, ap_abs, ap_k, orel->count() > 0,
                              oabs->count() > 0, ok->count() > 0);
        }
        if (*synth) return cmd_synth(sy_in, sy_out, sy_mode, sy_verify, sy_n);
        if (*simulate) return cmd_simulate(sim_config, sim_out, sim_ref);
        if (*bench) return cmd_bench(be_scenario, be_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
