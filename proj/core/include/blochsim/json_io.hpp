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

#pragma once

#include <string>
#include <vector>

#include "blochsim/circuit.hpp"
#include "blochsim/lindblad.hpp"
#include "blochsim/vqt.hpp"

// JSON schemas shared between the library and the CLI. Parse errors are
// reported as std::invalid_argument with the position information from the
// JSON parser attached.
namespace blochsim::io {

struct ParseOptions {
  /// Validation tolerance for Hermiticity/trace checks on embedded matrices.
  double tolerance = kDefaultTolerance;
};

struct NamedObservable {
  std::string name;
  PauliObservable observable;
};

/// {"n_qubits": n, "stages": [...], "parameters": {...}}. Stage objects are
/// discriminated by key: "name" (gate), "controls" + "gate" (controlled),
/// "channel" (builtin channel or explicit "kraus" operators). Parameter
/// slots take a number, a parameter name, or {"param": name, "scale": s}.
Circuit circuit_from_json(const std::string& text, const ParseOptions& options = {});

/// Circuit plus optional "initial_state" (default |0...0>) and
/// "observables" (named or bare term arrays).
struct RunInput {
  Circuit circuit;
  BlochVector initial_state;
  std::vector<NamedObservable> observables;
};
RunInput run_input_from_json(const std::string& text, const ParseOptions& options = {});

/// Circuit plus a single "observable" defining the scalar cost.
struct GradInput {
  Circuit circuit;
  BlochVector initial_state;
  PauliObservable observable;
};
GradInput grad_input_from_json(const std::string& text, const ParseOptions& options = {});

struct LindbladInput {
  int n_qubits = 0;
  PauliObservable hamiltonian;
  std::vector<JumpOperator> jumps;
  double t_final = 0.0;
  EvolveMethod method = EvolveMethod::Rk4;
  double dt = 0.0;
  BlochVector initial_state;
  std::vector<NamedObservable> observables;
  bool store_states = false;
};
LindbladInput lindblad_input_from_json(const std::string& text, const ParseOptions& options = {});

/// Experiment config: either "model": "heisenberg_1d" (n, J, g, h) /
/// "heisenberg_2d" (rows, cols, J_h, J_v) or an explicit "hamiltonian".
VqtExperimentConfig vqt_input_from_json(const std::string& text, const ParseOptions& options = {});

struct BenchInput {
  std::vector<std::string> gates;
  std::vector<int> n_values;
  int reps = 25;
  int warmup = 3;
};
BenchInput bench_input_from_json(const std::string& text, const ParseOptions& options = {});

std::string state_to_json(const BlochVector& r);
BlochVector state_from_json(const std::string& text);

}  // namespace blochsim::io
