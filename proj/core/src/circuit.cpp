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

#include "blochsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blochsim {

namespace {

GateSpec with_params(const GateSpec& gate, const std::vector<double>& params) {
  GateSpec out = gate;
  out.params = params;
  return out;
}

KrausChannel channel_with(const KrausChannel& ch, double parameter) {
  if (!is_builtin_channel(ch.name)) return ch;
  return builtin_channel(ch.name, parameter);
}

// Dense matrix of the controlled gate on its block: identity except the
// all-controls-one target slot.
Eigen::MatrixXcd controlled_block_matrix(int num_controls, const Eigen::MatrixXcd& u) {
  const Eigen::Index m_dim = u.rows();
  const Eigen::Index dim = m_dim << num_controls;
  Eigen::MatrixXcd cu = Eigen::MatrixXcd::Identity(dim, dim);
  cu.block(dim - m_dim, dim - m_dim, m_dim, m_dim) = u;
  return cu;
}

void stage_apply(const Stage& stage, const std::vector<double>& params, BlochVector& r) {
  switch (stage.kind) {
    case Stage::Kind::Gate:
      apply_superop_inplace(r, builtin_superop(with_params(stage.gate, params)),
                            stage.gate.targets);
      break;
    case Stage::Kind::Controlled: {
      r = apply_controlled(r, make_controlled(stage.controls, with_params(stage.gate, params)));
      break;
    }
    case Stage::Kind::Channel:
      apply_superop_inplace(r, channel_superop(channel_with(stage.channel, params[0])),
                            stage.targets);
      break;
    case Stage::Kind::Custom:
      apply_superop_inplace(r, superop_from_unitary(stage.custom.unitary(params)), stage.targets);
      break;
  }
}

// Applies the transposed stage superop; for unitary stages this is the
// inverse map, used both to recompute inputs and to propagate cotangents.
void stage_apply_transpose(const Stage& stage, const std::vector<double>& params, BlochVector& r) {
  switch (stage.kind) {
    case Stage::Kind::Gate:
      apply_superop_inplace(r, transpose_superop(builtin_superop(with_params(stage.gate, params))),
                            stage.gate.targets);
      break;
    case Stage::Kind::Controlled: {
      const GateSpec inverse = adjoint_gate(with_params(stage.gate, params));
      r = apply_controlled(r, make_controlled(stage.controls, inverse));
      break;
    }
    case Stage::Kind::Channel:
      apply_superop_inplace(
          r, transpose_superop(channel_superop(channel_with(stage.channel, params[0]))),
          stage.targets);
      break;
    case Stage::Kind::Custom:
      apply_superop_inplace(
          r, transpose_superop(superop_from_unitary(stage.custom.unitary(params))),
          stage.targets);
      break;
  }
}

GateSuperop stage_superop_derivative(const Stage& stage, const std::vector<double>& params,
                                     int slot) {
  switch (stage.kind) {
    case Stage::Kind::Gate:
      return builtin_superop_derivative(with_params(stage.gate, params), slot);
    case Stage::Kind::Controlled: {
      const GateSpec target = with_params(stage.gate, params);
      const Eigen::MatrixXcd u = dense_gate_matrix(target);
      const Eigen::MatrixXcd du = dense_gate_derivative(target, slot);
      const int k = static_cast<int>(stage.controls.size());
      const Eigen::MatrixXcd cu = controlled_block_matrix(k, u);
      Eigen::MatrixXcd dcu = Eigen::MatrixXcd::Zero(cu.rows(), cu.cols());
      dcu.block(cu.rows() - du.rows(), cu.cols() - du.cols(), du.rows(), du.cols()) = du;
      return conjugation_superop_derivative(cu, dcu);
    }
    case Stage::Kind::Channel:
      if (!is_builtin_channel(stage.channel.name))
        throw std::invalid_argument("custom channels have no parameter derivatives");
      return builtin_channel_superop_derivative(stage.channel.name, params[0]);
    case Stage::Kind::Custom: {
      if (!stage.custom.derivative)
        throw std::invalid_argument("custom gate is missing its derivative closure");
      std::span<const double> p(params);
      return conjugation_superop_derivative(stage.custom.unitary(p),
                                            stage.custom.derivative(p, slot));
    }
  }
  throw std::logic_error("unreachable");
}

int stage_param_count(const Stage& stage) {
  switch (stage.kind) {
    case Stage::Kind::Gate:
    case Stage::Kind::Controlled:
      return stage.gate.name == "Custom" ? 0 : builtin_param_count(stage.gate.name);
    case Stage::Kind::Channel: return 1;
    case Stage::Kind::Custom: return stage.custom.param_count;
  }
  return 0;
}

void validate_stage(const Stage& stage, int n_qubits) {
  const auto block = stage_block(stage);
  if (block.empty()) throw std::invalid_argument("stage has no target qubits");
  std::vector<int> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("stage qubit indices overlap");
  for (int q : block)
    if (q < 0 || q >= n_qubits) throw std::invalid_argument("stage qubit index out of range");
  const int np = stage_param_count(stage);
  for (const auto& b : stage.bindings)
    if (b.slot < 0 || b.slot >= np)
      throw std::invalid_argument("parameter binding slot out of range for stage");
}

}  // namespace

Stage gate_stage(GateSpec spec, std::vector<ParamBinding> bindings) {
  Stage s;
  s.kind = Stage::Kind::Gate;
  s.gate = std::move(spec);
  s.bindings = std::move(bindings);
  return s;
}

Stage controlled_stage(std::vector<int> controls, GateSpec target,
                       std::vector<ParamBinding> bindings) {
  Stage s;
  s.kind = Stage::Kind::Controlled;
  s.controls = std::move(controls);
  s.gate = std::move(target);
  s.bindings = std::move(bindings);
  return s;
}

Stage channel_stage(KrausChannel channel, std::vector<int> targets,
                    std::vector<ParamBinding> bindings) {
  Stage s;
  s.kind = Stage::Kind::Channel;
  s.channel = std::move(channel);
  s.targets = std::move(targets);
  s.bindings = std::move(bindings);
  return s;
}

Stage custom_stage(CustomGate gate, std::vector<int> targets, std::vector<double> base_params,
                   std::vector<ParamBinding> bindings) {
  if (static_cast<int>(base_params.size()) != gate.param_count)
    throw std::invalid_argument("custom stage base parameter count mismatch");
  Stage s;
  s.kind = Stage::Kind::Custom;
  s.custom = std::move(gate);
  s.targets = std::move(targets);
  s.custom_params = std::move(base_params);
  s.bindings = std::move(bindings);
  return s;
}

std::vector<int> stage_block(const Stage& stage) {
  switch (stage.kind) {
    case Stage::Kind::Gate: return stage.gate.targets;
    case Stage::Kind::Controlled: {
      std::vector<int> block = stage.gate.targets;
      block.insert(block.end(), stage.controls.begin(), stage.controls.end());
      return block;
    }
    case Stage::Kind::Channel:
    case Stage::Kind::Custom:
      return stage.targets;
  }
  return {};
}

std::vector<double> resolve_stage_params(const Stage& stage,
                                         const std::map<std::string, double>& parameters) {
  std::vector<double> params;
  switch (stage.kind) {
    case Stage::Kind::Gate:
    case Stage::Kind::Controlled:
      params = stage.gate.params;
      break;
    case Stage::Kind::Channel:
      params = {stage.channel.parameter};
      break;
    case Stage::Kind::Custom:
      params = stage.custom_params;
      break;
  }
  for (const auto& binding : stage.bindings) {
    const auto it = parameters.find(binding.name);
    if (it == parameters.end())
      throw std::invalid_argument("unresolved circuit parameter '" + binding.name + "'");
    if (binding.slot < 0 || binding.slot >= static_cast<int>(params.size()))
      throw std::invalid_argument("parameter binding slot out of range");
    params[binding.slot] = binding.scale * it->second;
  }
  return params;
}

ForwardRun forward(const Circuit& circuit, const BlochVector& r_in) {
  if (r_in.n_qubits != circuit.n_qubits)
    throw std::invalid_argument("forward: state qubit count does not match circuit");
  ForwardRun run;
  run.channel_cache.resize(circuit.stages.size());
  run.output = r_in;
  for (std::size_t i = 0; i < circuit.stages.size(); ++i) {
    const Stage& stage = circuit.stages[i];
    validate_stage(stage, circuit.n_qubits);
    const auto params = resolve_stage_params(stage, circuit.parameters);
    if (stage.requires_cache()) {
      run.channel_cache[i] = run.output;
      ++run.cached_states;
    }
    stage_apply(stage, params, run.output);
  }
  return run;
}

GradientReport backward(const Circuit& circuit, const ForwardRun& run,
                        const BlochVector& rbar_out, bool keep_stage_superop_gradients) {
  if (rbar_out.n_qubits != circuit.n_qubits)
    throw std::invalid_argument("backward: cotangent qubit count does not match circuit");
  for (double v : rbar_out.data)
    if (!std::isfinite(v)) throw std::invalid_argument("backward: non-finite cotangent");
  if (run.channel_cache.size() != circuit.stages.size())
    throw std::invalid_argument("backward: forward run does not match circuit");

  GradientReport report;
  for (const auto& stage : circuit.stages)
    for (const auto& binding : stage.bindings) report.parameter_gradients[binding.name] = 0.0;
  if (keep_stage_superop_gradients)
    report.stage_superop_gradients.resize(circuit.stages.size());

  BlochVector r_prime = run.output;  // state after the current stage
  BlochVector rbar = rbar_out;       // cotangent after the current stage
  rbar.covector = true;

  for (int i = static_cast<int>(circuit.stages.size()) - 1; i >= 0; --i) {
    const Stage& stage = circuit.stages[i];
    const auto params = resolve_stage_params(stage, circuit.parameters);

    // recover the stage input: r = U^T r' for invertible stages, cache
    // lookup for channels
    BlochVector r_in;
    if (stage.requires_cache()) {
      if (!run.channel_cache[i])
        throw std::invalid_argument("backward: missing channel cache for stage " +
                                    std::to_string(i));
      r_in = *run.channel_cache[i];
    } else {
      r_in = r_prime;
      stage_apply_transpose(stage, params, r_in);
    }

    if (!stage.bindings.empty() || keep_stage_superop_gradients) {
      const auto block = stage_block(stage);
      const Eigen::MatrixXd ubar = grad_gate(rbar, r_in, block);
      for (const auto& binding : stage.bindings) {
        const GateSuperop dsup = stage_superop_derivative(stage, params, binding.slot);
        double g = 0.0;
        for (const auto& e : dsup.nonzeros) g += ubar(e.row, e.col) * e.value;
        report.parameter_gradients[binding.name] += binding.scale * g;
      }
      if (keep_stage_superop_gradients) report.stage_superop_gradients[i] = ubar;
    }

    stage_apply_transpose(stage, params, rbar);
    r_prime = std::move(r_in);
  }

  report.input_cotangent = std::move(rbar);
  return report;
}

Eigen::MatrixXd grad_gate(const BlochVector& rbar_prime, const BlochVector& r,
                          std::span<const int> block) {
  if (rbar_prime.n_qubits != r.n_qubits)
    throw std::invalid_argument("grad_gate: qubit count mismatch");
  const int n = r.n_qubits;
  const int m = static_cast<int>(block.size());
  if (m == 0 || m > n) throw std::invalid_argument("grad_gate: invalid block");
  std::vector<bool> is_block(n, false);
  for (int q : block) {
    if (q < 0 || q >= n) throw std::invalid_argument("grad_gate: block qubit out of range");
    if (is_block[q]) throw std::invalid_argument("grad_gate: duplicate block qubits");
    is_block[q] = true;
  }
  const std::size_t gdim = dim4(m);
  std::vector<std::size_t> offset(gdim);
  for (std::size_t g = 0; g < gdim; ++g) {
    std::size_t off = 0;
    for (int i = 0; i < m; ++i) off += ((g >> (2 * i)) & 3) << (2 * block[i]);
    offset[g] = off;
  }
  std::vector<std::size_t> rest;
  for (int q = 0; q < n; ++q)
    if (!is_block[q]) rest.push_back(dim4(q));

  Eigen::MatrixXd ubar = Eigen::MatrixXd::Zero(gdim, gdim);
  Eigen::VectorXd rb(gdim), rr(gdim);
  const std::size_t sites = r.size() / gdim;
  for (std::size_t s = 0; s < sites; ++s) {
    std::size_t base = 0, c = s;
    for (std::size_t stride : rest) {
      base += (c & 3) * stride;
      c >>= 2;
    }
    for (std::size_t g = 0; g < gdim; ++g) {
      rb(g) = rbar_prime.data[base + offset[g]];
      rr(g) = r.data[base + offset[g]];
    }
    ubar.noalias() += rb * rr.transpose();
  }
  return ubar;
}

BlochVector cost_expectation_cotangent(const PauliObservable& obs) {
  BlochVector out = BlochVector::make_covector(obs.n_qubits);
  for (const auto& term : obs.terms) out.data[pauli_flat_index(term.word)] += term.coefficient;
  return out;
}

}  // namespace blochsim
