// Copyright 2026 The blochsim authors
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

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "blochsim/json_io.hpp"
#include "helpers.hpp"

namespace fs = std::filesystem;
using namespace blochsim;
using Catch::Approx;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("blochsim_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

int run_cli(const std::string& args) {
  const std::string cmd = std::string(BLOCHSIM_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

// Parses a CSV with a header row into column -> values.
std::map<std::string, std::vector<std::string>> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  REQUIRE(std::getline(in, line));
  std::vector<std::string> columns;
  std::istringstream header(line);
  std::string cell;
  while (std::getline(header, cell, ',')) columns.push_back(cell);
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& c : columns) out[c];
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    for (const auto& c : columns) {
      REQUIRE(std::getline(row, cell, ','));
      out[c].push_back(cell);
    }
  }
  return out;
}

const std::string kExamples = BLOCHSIM_EXAMPLES_DIR;

}  // namespace

TEST_CASE("run subcommand", "[cli]") {
  TempDir tmp;
  SECTION("an empty circuit echoes the input state") {
    spit(tmp.path / "in.json", R"({
      "n_qubits": 2, "stages": [],
      "initial_state": {"state": "basis", "bits": "10"},
      "observables": [{"name": "z1", "terms": [["ZI", 1.0]]}]
    })");
    REQUIRE(run_cli("run --input " + (tmp.path / "in.json").string() + " --output " +
                    (tmp.path / "out").string()) == 0);
    const BlochVector state = io::state_from_json(slurp(tmp.path / "out" / "state.json"));
    REQUIRE(test_helpers::max_abs_diff(state, BlochVector::basis_state(2, 0b10)) == 0.0);
    const auto csv = parse_csv(slurp(tmp.path / "out" / "expectations.csv"));
    REQUIRE(std::stod(csv.at("value").at(0)) == Approx(-1.0));
  }
  SECTION("the bundled phase-gate example maps |+> to |+i>") {
    REQUIRE(run_cli("run --input " + kExamples + "/s_gate_run.json --output " +
                    (tmp.path / "s").string()) == 0);
    const auto csv = parse_csv(slurp(tmp.path / "s" / "expectations.csv"));
    REQUIRE(csv.at("observable") == std::vector<std::string>{"x", "y", "z"});
    REQUIRE(std::stod(csv.at("value").at(0)) == Approx(0.0).margin(1e-14));
    REQUIRE(std::stod(csv.at("value").at(1)) == Approx(1.0));
    REQUIRE(std::stod(csv.at("value").at(2)) == Approx(0.0).margin(1e-14));
  }
  SECTION("output equals the library forward pass") {
    const std::string circuit = R"({
      "n_qubits": 2,
      "stages": [
        {"name": "H", "params": [], "targets": [0]},
        {"controls": [0], "gate": {"name": "X", "params": [], "targets": [1]}},
        {"channel": "phase_damping", "p": 0.2, "targets": [1]}
      ]
    })";
    spit(tmp.path / "c.json", circuit);
    REQUIRE(run_cli("run --input " + (tmp.path / "c.json").string() + " --output " +
                    (tmp.path / "fwd").string()) == 0);
    const BlochVector got = io::state_from_json(slurp(tmp.path / "fwd" / "state.json"));
    const Circuit c = io::circuit_from_json(circuit);
    const BlochVector expected = forward(c, BlochVector::zero_state(2)).output;
    REQUIRE(test_helpers::max_abs_diff(got, expected) == 0.0);
  }
  SECTION("schema violations exit nonzero") {
    spit(tmp.path / "bad.json", R"({"n_qubits": 1, "stages": [{"name": "Nope"}]})");
    REQUIRE(run_cli("run --input " + (tmp.path / "bad.json").string() + " --output " +
                    (tmp.path / "x").string()) != 0);
    REQUIRE(run_cli("run --input /nonexistent.json --output " + (tmp.path / "x").string()) !=
            0);
  }
}

TEST_CASE("grad subcommand", "[cli]") {
  TempDir tmp;
  SECTION("a parameter-free circuit reports no gradients") {
    spit(tmp.path / "in.json", R"({
      "n_qubits": 1,
      "stages": [{"name": "H", "params": [], "targets": [0]}],
      "observable": [["Z", 1.0]]
    })");
    REQUIRE(run_cli("grad --input " + (tmp.path / "in.json").string() + " --output " +
                    (tmp.path / "g").string()) == 0);
    const std::string out = slurp(tmp.path / "g" / "gradients.json");
    REQUIRE(out.find("\"gradients\": {}") != std::string::npos);
  }
  SECTION("the bundled rotation sample matches -sin(theta) and the fd check") {
    REQUIRE(run_cli("grad --check-fd --input " + kExamples + "/rx_grad.json --output " +
                    (tmp.path / "g2").string()) == 0);
    const std::string out = slurp(tmp.path / "g2" / "gradients.json");
    // theta = 0.4 in the sample
    const double expected = -std::sin(0.4);
    const auto pos = out.find("\"theta\": ");
    REQUIRE(pos != std::string::npos);
    REQUIRE(std::stod(out.substr(pos + 9)) == Approx(expected).margin(1e-12));
    const auto fd_pos = out.find("\"max_relative_error\": ");
    REQUIRE(fd_pos != std::string::npos);
    REQUIRE(std::stod(out.substr(fd_pos + 22)) < 1e-6);
  }
}

TEST_CASE("lindblad subcommand", "[cli]") {
  TempDir tmp;
  SECTION("a free evolution produces constant columns") {
    spit(tmp.path / "free.json", R"({
      "n_qubits": 1, "hamiltonian": [], "jumps": [],
      "t_final": 1.0, "method": "rk4", "dt": 0.125,
      "initial_state": {"state": "plus"},
      "observables": [{"name": "x", "terms": [["X", 1.0]]}]
    })");
    REQUIRE(run_cli("lindblad --input " + (tmp.path / "free.json").string() + " --output " +
                    (tmp.path / "free").string()) == 0);
    const auto csv = parse_csv(slurp(tmp.path / "free" / "trajectory.csv"));
    REQUIRE(csv.at("time").size() == 9);
    for (const auto& v : csv.at("x")) REQUIRE(std::stod(v) == Approx(1.0).margin(1e-12));
  }
  SECTION("amplitude damping reproduces the closed-form <Z> profile") {
    REQUIRE(run_cli("lindblad --input " + kExamples + "/damping_lindblad.json --output " +
                    (tmp.path / "amp").string() + " --store-states") == 0);
    const auto csv = parse_csv(slurp(tmp.path / "amp" / "trajectory.csv"));
    const double gamma = 0.8;
    for (std::size_t i = 0; i < csv.at("time").size(); i += 250) {
      const double t = std::stod(csv.at("time")[i]);
      const double z = std::stod(csv.at("z")[i]);
      REQUIRE(z == Approx(1.0 - 2.0 * std::exp(-gamma * t)).margin(1e-8));
    }
    REQUIRE(fs::exists(tmp.path / "amp" / "states.csv"));
  }
  SECTION("expm and rk4 agree at the final time") {
    for (const char* method : {"expm", "rk4"}) {
      REQUIRE(run_cli("lindblad --input " + kExamples + "/damping_lindblad.json --method " +
                      method + " --output " + (tmp.path / method).string()) == 0);
    }
    const auto expm_csv = parse_csv(slurp(tmp.path / "expm" / "trajectory.csv"));
    const auto rk4_csv = parse_csv(slurp(tmp.path / "rk4" / "trajectory.csv"));
    REQUIRE(std::stod(expm_csv.at("z").back()) ==
            Approx(std::stod(rk4_csv.at("z").back())).margin(1e-6));
  }
}

TEST_CASE("vqt subcommand", "[cli]") {
  TempDir tmp;
  SECTION("the infinite-temperature sample converges to the mixed target") {
    REQUIRE(run_cli("vqt --input " + kExamples + "/vqt_beta0.json --output " +
                    (tmp.path / "v").string()) == 0);
    const auto csv = parse_csv(slurp(tmp.path / "v" / "metrics.csv"));
    REQUIRE(csv.at("beta").size() == 1);
    REQUIRE(std::stod(csv.at("fidelity").at(0)) >= 0.999);
    const auto traces = parse_csv(slurp(tmp.path / "v" / "traces.csv"));
    REQUIRE(traces.at("iteration").size() == 200);
  }
  SECTION("identical seeds give identical outputs, regardless of threads") {
    spit(tmp.path / "cfg.json", R"({
      "model": "heisenberg_1d", "n": 2, "J": -1.0, "g": 0.3, "h": 0.2,
      "betas": [0.5, 2.0], "num_seeds": 2, "iterations": 30
    })");
    REQUIRE(run_cli("vqt --input " + (tmp.path / "cfg.json").string() + " --seed 9 --output " +
                    (tmp.path / "a").string() + " --threads 1") == 0);
    REQUIRE(run_cli("vqt --input " + (tmp.path / "cfg.json").string() + " --seed 9 --output " +
                    (tmp.path / "b").string() + " --threads 4") == 0);
    REQUIRE(slurp(tmp.path / "a" / "metrics.csv") == slurp(tmp.path / "b" / "metrics.csv"));
    REQUIRE(slurp(tmp.path / "a" / "traces.csv") == slurp(tmp.path / "b" / "traces.csv"));

    // thread count may also come from the environment
    const std::string env_cmd = "BLOCHSIM_THREADS=3 " + std::string(BLOCHSIM_CLI_PATH) +
                                " vqt --input " + (tmp.path / "cfg.json").string() +
                                " --seed 9 --output " + (tmp.path / "c").string() +
                                " 2>/dev/null";
    REQUIRE(WEXITSTATUS(std::system(env_cmd.c_str())) == 0);
    REQUIRE(slurp(tmp.path / "a" / "metrics.csv") == slurp(tmp.path / "c" / "metrics.csv"));

    // metric ranges
    const auto csv = parse_csv(slurp(tmp.path / "a" / "metrics.csv"));
    for (const auto& v : csv.at("fidelity")) {
      REQUIRE(std::stod(v) >= 0.0);
      REQUIRE(std::stod(v) <= 1.0 + 1e-9);
    }
    for (const auto& v : csv.at("trace_distance")) {
      REQUIRE(std::stod(v) >= 0.0);
      REQUIRE(std::stod(v) <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("bench subcommand", "[cli][bench]") {
  TempDir tmp;
  REQUIRE(run_cli("bench --input " + kExamples + "/bench_small.json --output " +
                  (tmp.path / "b1").string()) == 0);
  const std::string text = slurp(tmp.path / "b1" / "bench.csv");
  REQUIRE(text.rfind("gate,n,impl,median_ns,reps\n", 0) == 0);
  const auto csv = parse_csv(text);
  // 7 gates x 2 sizes x 2 implementations
  REQUIRE(csv.at("gate").size() == 28);

  SECTION("bloch kernels beat the dense baseline for local gates") {
    std::map<std::string, double> bloch, dense;
    for (std::size_t i = 0; i < csv.at("gate").size(); ++i) {
      const std::string key = csv.at("gate")[i] + "@" + csv.at("n")[i];
      const double ns = std::stod(csv.at("median_ns")[i]);
      (csv.at("impl")[i] == "bloch" ? bloch : dense)[key] = ns;
    }
    for (const auto& [key, ns] : bloch) {
      if (key.rfind("CNOT", 0) == 0 || key.rfind("Rzz", 0) == 0) continue;
      REQUIRE(ns <= dense.at(key));
    }
  }
  SECTION("medians are stable across runs within a 3x band") {
    REQUIRE(run_cli("bench --input " + kExamples + "/bench_small.json --output " +
                    (tmp.path / "b2").string()) == 0);
    const auto csv2 = parse_csv(slurp(tmp.path / "b2" / "bench.csv"));
    for (std::size_t i = 0; i < csv.at("gate").size(); ++i) {
      const double a = std::stod(csv.at("median_ns")[i]);
      const double b = std::stod(csv2.at("median_ns")[i]);
      REQUIRE(std::max(a, b) / std::min(a, b) < 3.0);
    }
  }
}
