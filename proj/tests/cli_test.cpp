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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "walsh/transform.hpp"

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("walshsim_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string operator/(const std::string& name) const {
        return (path / name).string();
    }
};

int run(const std::string& args) {
    const std::string cmd = std::string(WALSHSIM_BIN) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("wht: delta input gives a flat spectrum and round trips") {
    TempDir tmp;
    spill(tmp / "delta.csv", "k,x,f\n0,0.0,1\n1,0.25,0\n2,0.5,0\n3,0.75,0\n");
    REQUIRE(run("wht --input " + (tmp / "delta.csv") + " --output " +
                (tmp / "spec.csv")) == 0);
    const auto a = walsh::spectrum_from_csv(slurp(tmp / "spec.csv"));
    REQUIRE(a.coeffs.size() == 4);
    for (double c : a.coeffs) CHECK(c == doctest::Approx(0.25));

    REQUIRE(run("wht --inverse --input " + (tmp / "spec.csv") + " --output " +
                (tmp / "back.csv")) == 0);
    const auto f = walsh::sampled_from_csv(slurp(tmp / "back.csv"));
    CHECK(f.values[0] == doctest::Approx(1.0));
    CHECK(f.values[1] == doctest::Approx(0.0));
}

TEST_CASE("wht: non-power-of-two input exits 2") {
    TempDir tmp;
    spill(tmp / "bad.csv", "k,x,f\n0,0.0,1\n1,0.33,2\n2,0.67,3\n");
    CHECK(run("wht --input " + (tmp / "bad.csv") + " --output " +
              (tmp / "out.csv")) == 2);
}

TEST_CASE("approx: flag validation and output") {
    TempDir tmp;
    // Barrier samples on 2^10 points.
    walsh::SampledFunction f;
    f.n = 10;
    f.domain = {-5.0, 10.0};
    f.values.resize(1024);
    for (std::size_t k = 0; k < 1024; ++k) {
        f.values[k] = 100.0 / std::cosh(0.5 * f.x(k));
    }
    spill(tmp / "v.csv", walsh::to_csv(f));

    CHECK(run("approx --input " + (tmp / "v.csv") + " --output " + (tmp / "s.json")) ==
          2);  // no truncation mode
    CHECK(run("approx --input " + (tmp / "v.csv") +
              " --epsilon-rel 0.1 --k 3 --output " + (tmp / "s.json")) ==
          2);  // conflicting modes (rejected by the parser)

    REQUIRE(run("approx --input " + (tmp / "v.csv") + " --epsilon-rel 0.10 --output " +
                (tmp / "s.json")) == 0);
    const auto j = nlohmann::json::parse(slurp(tmp / "s.json"));
    CHECK(j.at("achieved_error").get<double>() <= 10.0 + 1e-9);
    CHECK(j.at("required_qubits").get<int>() <= 10);
    CHECK(j.at("series").at("terms").size() >= 1);

    REQUIRE(run("approx --input " + (tmp / "v.csv") + " --k 0 --output " +
                (tmp / "k0.json")) == 0);
    const auto j0 = nlohmann::json::parse(slurp(tmp / "k0.json"));
    CHECK(j0.at("series").at("terms").size() == 1);
}

TEST_CASE("synth: counts, verification, and failure signalling") {
    TempDir tmp;
    // Full series on 3 qubits.
    nlohmann::json terms = nlohmann::json::array();
    for (int j = 1; j < 8; ++j) {
        terms.push_back({{"j", j}, {"a", 0.1 * j}});
    }
    spill(tmp / "full.json",
          nlohmann::json{{"source_n", 3}, {"n_required", 3}, {"terms", terms}}.dump());

    REQUIRE(run("synth --input " + (tmp / "full.json") +
                " --mode sequency --verify --output " + (tmp / "c.txt")) == 0);
    std::string text = slurp(tmp / "c.txt");
    CHECK(text.rfind("# qubits 3", 0) == 0);
    std::size_t lines = 0;
    for (char ch : text) {
        if (ch == '\n') ++lines;
    }
    CHECK(lines == 1 + 13);  // header + 2^{n+1}-3 gates

    REQUIRE(run("synth --input " + (tmp / "full.json") +
                " --mode paley --output " + (tmp / "p.txt")) == 0);
    std::string ptext = slurp(tmp / "p.txt");
    lines = 0;
    for (char ch : ptext) {
        if (ch == '\n') ++lines;
    }
    CHECK(lines == 1 + 17);

    CHECK(run("synth --input " + (tmp / "full.json") + " --mode nonsense --output " +
              (tmp / "x.txt")) == 2);
}

TEST_CASE("simulate: zero steps returns the initial state") {
    TempDir tmp;
    nlohmann::json cfg = {
        {"n", 6},         {"x_min", -5.0},  {"length", 10.0},
        {"total_time", 0.0}, {"steps", 0},  {"x0", -3.0},
        {"p0", 15.0},     {"sigma", 0.5},
    };
    cfg["potential"] = std::vector<double>(64, 0.0);
    spill(tmp / "cfg.json", cfg.dump());
    REQUIRE(run("simulate --config " + (tmp / "cfg.json") + " --out-dir " +
                (tmp / "out")) == 0);
    const auto summary = nlohmann::json::parse(slurp(tmp / "out/summary.json"));
    CHECK(summary.at("snapshots").get<int>() == 1);
    CHECK(summary.at("final_norm").get<double>() == doctest::Approx(1.0));

    // Self-fidelity through the --reference path.
    REQUIRE(run("simulate --config " + (tmp / "cfg.json") + " --out-dir " +
                (tmp / "out2") + " --reference " + (tmp / "out/final_state.csv")) == 0);
    const auto s2 = nlohmann::json::parse(slurp(tmp / "out2/summary.json"));
    CHECK(s2.at("fidelity_vs_reference").get<double>() == doctest::Approx(1.0));
}

TEST_CASE("simulate: invalid config exits 2") {
    TempDir tmp;
    spill(tmp / "bad.json", "{\"n\": 3, \"steps\": 5}");
    CHECK(run("simulate --config " + (tmp / "bad.json") + " --out-dir " +
              (tmp / "out")) == 2);
}

TEST_CASE("bench: tiny scenario produces report and artifacts") {
    TempDir tmp;
    nlohmann::json scenario = {
        {"baseline_n", 7}, {"steps", 50},      {"total_time", 0.05},
        {"snapshot_stride", 25},
        {"rungs", nlohmann::json::array({{{"n", 6}, {"eps_v_rel", 0.15}},
                                         {{"n", 5}, {"eps_v_rel", 0.15}}})},
    };
    spill(tmp / "scenario.json", scenario.dump());
    REQUIRE(run("bench --scenario " + (tmp / "scenario.json") + " --out-dir " +
                (tmp / "bench")) == 0);
    const auto report = nlohmann::json::parse(slurp(tmp / "bench/report.json"));
    REQUIRE(report.at("rungs").size() == 2);
    CHECK(report.at("rungs")[0].at("n").get<int>() == 6);
    CHECK(report.at("rungs")[1].at("n").get<int>() == 5);
    CHECK(fs::exists(tmp.path / "bench/rung_n6.circuit.txt"));
    CHECK(fs::exists(tmp.path / "bench/rung_n6.trajectory.csv"));
    CHECK(fs::exists(tmp.path / "bench/baseline.trajectory.csv"));
}

TEST_SUITE_END();
