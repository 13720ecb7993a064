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
#include <vector>

#include <Eigen/Dense>

#include "blochsim/bloch.hpp"

// Dense-matrix reference implementations used for differential testing and
// as the conventional baseline in benchmarks. These deliberately share no
// kernels with the Bloch-vector code paths.
namespace blochsim::oracle {

/// Embeds an operator acting on `targets` (targets[i] = qubit mapped to the
/// i-th, fastest-varying factor of op's index) into the full 2^n space.
Eigen::MatrixXcd embed_operator(const Eigen::MatrixXcd& op, std::span<const int> targets,
                                int n_qubits);

/// rho' = U rho U^dagger with U embedded at `targets`.
DenseHermitian conjugate(const DenseHermitian& rho, const Eigen::MatrixXcd& u,
                         std::span<const int> targets);

/// rho' = sum_k E_k rho E_k^dagger with every Kraus operator embedded at
/// `targets`.
DenseHermitian kraus_apply(const DenseHermitian& rho, std::span<const Eigen::MatrixXcd> ops,
                           std::span<const int> targets);

/// Dense matrix of the k-controlled gate I + |1..1><1..1| (x) (U - I) on the
/// (k + m)-qubit block, with the target factor fastest-varying.
Eigen::MatrixXcd controlled_matrix(int num_controls, const Eigen::MatrixXcd& u);

struct DenseJump {
  Eigen::MatrixXcd matrix;
  std::vector<int> targets;
};

/// Right-hand side of the Lindblad master equation:
/// -i[H, rho] + sum_q (L_q rho L_q^dagger - {L_q^dagger L_q, rho}/2).
Eigen::MatrixXcd lindblad_rhs(const DenseHermitian& rho, const Eigen::MatrixXcd& h_dense,
                              std::span<const DenseJump> jumps);

/// Matrix exponential (scaling-and-squaring).
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

/// In-place gate application exploiting the Kronecker structure of the
/// embedded gate: strided multiplication from the left by U and from the
/// right by U^dagger, linear in the number of matrix entries. This is the
/// timed dense baseline for the kernel benchmarks.
void apply_gate_dense_inplace(Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& u,
                              std::span<const int> targets);

}  // namespace blochsim::oracle
