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

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "blochsim/gates.hpp"
#include "blochsim/kernels.hpp"

namespace blochsim {

/// Quantum channel as a list of Kraus operators, sum_k E_k^dagger E_k = I.
/// Builtin noise channels carry their name and probability parameter:
/// bit_flip(p), phase_flip(p), depolarizing(p), amplitude_damping(gamma),
/// phase_damping(lambda). Note the table convention: bit/phase flip act
/// trivially at p = 1.
struct KrausChannel {
  std::string name = "custom";
  double parameter = 0.0;
  int arity = 1;
  std::vector<Eigen::MatrixXcd> operators;
};

bool is_builtin_channel(const std::string& name);

/// Builds a builtin channel; the parameter must lie in [0, 1].
KrausChannel builtin_channel(const std::string& name, double parameter);

/// Wraps explicit Kraus operators; checks completeness to `tol`.
KrausChannel custom_channel(std::vector<Eigen::MatrixXcd> operators, double tol = 1e-10);

/// Generic projection E_{jk} = 2^-m sum_kappa Tr[sigma_j E_kappa sigma_k
/// E_kappa^dagger]; checks completeness to `tol`.
GateSuperop kraus_superop(std::span<const Eigen::MatrixXcd> operators, double tol = 1e-10);

/// Channel superop; closed form for builtins, Kraus projection otherwise.
GateSuperop channel_superop(const KrausChannel& ch, double tol = 1e-10);

/// Closed-form d(superop)/dparameter of a builtin channel.
GateSuperop builtin_channel_superop_derivative(const std::string& name, double parameter);

/// True for the builtin channels mapping I to I (everything except
/// amplitude damping); these never increase purity.
bool is_unital_builtin(const std::string& name);

BlochVector apply_channel(const BlochVector& r, const KrausChannel& ch,
                          std::span<const int> targets);

/// A channel placed on specific qubits, for pipeline composition.
struct ChannelOp {
  KrausChannel channel;
  std::vector<int> targets;
};

using PipelineOp = std::variant<GateSpec, ChannelOp>;

struct PipelineStage {
  GateSuperop superop;
  std::vector<int> targets;
  /// Channels are not invertible in general; backward passes must cache the
  /// stage input instead of reconstructing it.
  bool requires_cache = false;
};

struct Pipeline {
  int n_qubits = 0;
  std::vector<PipelineStage> stages;
};

/// Sequential composition of gates and channels.
Pipeline compose_channels(int n_qubits, const std::vector<PipelineOp>& ops);

BlochVector apply_pipeline(const Pipeline& pipeline, const BlochVector& r);

}  // namespace blochsim
