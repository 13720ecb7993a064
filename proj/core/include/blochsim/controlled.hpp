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

#include <cstdint>
#include <utility>
#include <vector>

#include "blochsim/gates.hpp"
#include "blochsim/kernels.hpp"

namespace blochsim {

/// One term of the 2^k-term expansion of S_{|1><1|^k (x) (U-I)}: per control
/// qubit a symmetric (j=0) or antisymmetric (j=1) projector factor, a target
/// factor whose kind is the bit-pattern parity, and an overall sign
/// (-1)^ceil(sum j / 2).
struct SATerm {
  std::uint32_t bits = 0;
  int sign = 1;
  int target_kind = 0;  // 0 -> S_{U-I}, 1 -> A_{U-I} = A_U

  bool control_kind(int i) const { return (bits >> i) & 1; }
};

std::vector<SATerm> enumerate_sa_terms(int num_controls);

/// k-controlled unitary gate, with the derived superop pieces cached.
struct ControlledGateSpec {
  std::vector<int> controls;
  GateSpec gate;
  GateSuperop target_superop;    // U
  GateSuperop target_sym;        // S_U
  GateSuperop target_antisym;    // A_U
  GateSuperop term_target_sym;   // S_{U-I} = S_U - id
  GateSuperop final_target;      // U - 2 S_U + id
};

/// Validates (controls non-empty, disjoint from the gate targets, unitary
/// target gate) and caches the derived pieces.
ControlledGateSpec make_controlled(std::vector<int> controls, GateSpec gate);

/// Conjugation by the controlled gate, expanded so that every factor acts on
/// one qubit slot at a time: r' = r + 2 sum_terms sign * (chain of factors)
/// + (|1><1| conjugations on the controls) o (U - 2 S_U + id on the target).
BlochVector apply_controlled(const BlochVector& r, const ControlledGateSpec& spec);

/// (S, A) Bloch matrices of the tensor product G_{n-1} (x) ... (x) G_0,
/// factor j acting on qubit slot j, evaluated by the bond-dimension-2
/// recursion that mirrors complex multiplication with S and A as real and
/// imaginary parts.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> sa_tensor_mpo(
    const std::vector<Eigen::MatrixXcd>& factors);

}  // namespace blochsim
