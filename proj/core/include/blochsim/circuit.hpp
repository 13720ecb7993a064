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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blochsim/channels.hpp"
#include "blochsim/controlled.hpp"
#include "blochsim/gates.hpp"

namespace blochsim {

/// Ties a parameter slot of a stage to a named circuit parameter; the
/// effective slot value is scale * parameters[name].
struct ParamBinding {
  int slot = 0;
  std::string name;
  double scale = 1.0;
};

/// Parametrized unitary supplied as closures: `unitary(params)` returns the
/// dense matrix, `derivative(params, slot)` its analytic parameter
/// derivative.
struct CustomGate {
  int arity = 1;
  int param_count = 0;
  std::function<Eigen::MatrixXcd(std::span<const double>)> unitary;
  std::function<Eigen::MatrixXcd(std::span<const double>, int)> derivative;
};

/// One circuit stage: a builtin gate, a controlled gate, a Kraus channel, or
/// a custom parametrized unitary.
struct Stage {
  enum class Kind { Gate, Controlled, Channel, Custom };
  Kind kind = Kind::Gate;
  GateSpec gate;                     // Gate and Controlled (targets in gate.targets)
  std::vector<int> controls;         // Controlled only
  KrausChannel channel;              // Channel only
  CustomGate custom;                 // Custom only
  std::vector<double> custom_params; // Custom base parameter values
  std::vector<int> targets;          // Channel and Custom targets
  std::vector<ParamBinding> bindings;

  /// Channels cannot be inverted, so their input state is cached during the
  /// forward pass; unitary stages are recomputed backwards instead.
  bool requires_cache() const { return kind == Kind::Channel; }
};

Stage gate_stage(GateSpec spec, std::vector<ParamBinding> bindings = {});
Stage controlled_stage(std::vector<int> controls, GateSpec target,
                       std::vector<ParamBinding> bindings = {});
Stage channel_stage(KrausChannel channel, std::vector<int> targets,
                    std::vector<ParamBinding> bindings = {});
Stage custom_stage(CustomGate gate, std::vector<int> targets, std::vector<double> base_params,
                   std::vector<ParamBinding> bindings = {});

/// Ordered stages over an n-qubit register plus the named parameter table.
struct Circuit {
  int n_qubits = 0;
  std::vector<Stage> stages;
  std::map<std::string, double> parameters;
};

/// Qubits of the stage's superop block, in superop axis order. For
/// controlled stages this is the union [gate targets..., controls...], the
/// block on which the full controlled-gate superop acts.
std::vector<int> stage_block(const Stage& stage);

/// Resolved per-slot parameter values for a stage (base values with bound
/// slots replaced by scale * parameters[name]).
std::vector<double> resolve_stage_params(const Stage& stage,
                                         const std::map<std::string, double>& parameters);

struct ForwardRun {
  BlochVector output;
  /// Input state per stage, populated only for stages that require caching.
  std::vector<std::optional<BlochVector>> channel_cache;
  int cached_states = 0;
};

ForwardRun forward(const Circuit& circuit, const BlochVector& r_in);

struct GradientReport {
  /// Accumulated gradient per bound parameter name.
  std::map<std::string, double> parameter_gradients;
  /// Cotangent propagated to the circuit input.
  BlochVector input_cotangent;
  /// Per-stage superop gradients (Ubar blocks), retained on request.
  std::vector<Eigen::MatrixXd> stage_superop_gradients;
};

/// Reverse-mode pass: walks the stages backwards, recomputing unitary-stage
/// inputs via the transposed superop and reading channel-stage inputs from
/// the forward cache, accumulating parameter gradients along the way.
GradientReport backward(const Circuit& circuit, const ForwardRun& run,
                        const BlochVector& rbar_out, bool keep_stage_superop_gradients = false);

/// Superop-shaped gradient of an m-qubit block: the partial trace of the
/// outer product rbar' (x) r over the qubits outside `block`, formed on the
/// fly without materializing the outer product.
Eigen::MatrixXd grad_gate(const BlochVector& rbar_prime, const BlochVector& r,
                          std::span<const int> block);

/// Cotangent of C = sum_J m_J r_J: a co-vector holding each term's
/// coefficient at its flat Pauli index.
BlochVector cost_expectation_cotangent(const PauliObservable& obs);

}  // namespace blochsim
