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

#include <Eigen/Dense>

#include "blochsim/bloch.hpp"

namespace blochsim {

enum class SuperopKind { Unitary, Sym, Antisym, Channel };

struct SuperopEntry {
  int row;
  int col;
  double value;
};

/// Real 4^m x 4^m matrix acting on the m-qubit slots of a Bloch vector:
/// conjugation by a unitary, a channel, or one of the (anti-)symmetric
/// sandwich operators. `nonzeros` lists the structurally nonzero entries and
/// drives the matrix-free apply kernels.
struct GateSuperop {
  int arity = 1;
  SuperopKind kind = SuperopKind::Unitary;
  Eigen::MatrixXd matrix;
  std::vector<SuperopEntry> nonzeros;
};

/// Wraps a matrix; rebuilds the nonzero list and (for Unitary kind) checks
/// orthogonality and the trace-preservation row.
GateSuperop make_superop(int arity, SuperopKind kind, Eigen::MatrixXd matrix,
                         double tol = kDefaultTolerance);

/// Transposed superop (adjoint map in the Bloch inner product).
GateSuperop transpose_superop(const GateSuperop& k);

/// Named gate with parameter values and target qubits. Supported names:
/// X, Y, Z, H, S, PhaseShift(phi), Rx/Ry/Rz(theta), Rn(theta, nx, ny, nz),
/// Rxx/Ryy/Rzz(theta), Proj1 (the |1><1| projector, used by controlled
/// gates), and Custom with an explicit matrix.
struct GateSpec {
  std::string name;
  std::vector<double> params;
  std::vector<int> targets;
  Eigen::MatrixXcd custom_matrix;
};

int builtin_arity(const std::string& name);
int builtin_param_count(const std::string& name);
bool builtin_is_unitary(const std::string& name);

/// Dense 2^m x 2^m matrix of the gate (unitary for all names except Proj1).
Eigen::MatrixXcd dense_gate_matrix(const GateSpec& spec);

/// Analytic d/dparam of the dense gate matrix.
Eigen::MatrixXcd dense_gate_derivative(const GateSpec& spec, int slot);

/// Inverse gate as a spec (rotations negate their angle, S maps to
/// PhaseShift(-pi/2), Custom takes the adjoint matrix).
GateSpec adjoint_gate(const GateSpec& spec);

/// Generic construction U_{jk} = 2^-m Tr[sigma_j U sigma_k U^dagger].
/// Validates unitarity of U to `tol`.
GateSuperop superop_from_unitary(const Eigen::MatrixXcd& u, double tol = 1e-10);

/// Same projection without the unitarity requirement (conjugation by an
/// arbitrary complex matrix, e.g. a projector or a single Kraus operator).
GateSuperop conjugation_superop(const Eigen::MatrixXcd& g);

/// Bloch matrices of S_G(rho) = (G rho + rho G^dagger)/2 and
/// A_G(rho) = i(G rho - rho G^dagger)/2.
GateSuperop sym_superop(const Eigen::MatrixXcd& g);
GateSuperop antisym_superop(const Eigen::MatrixXcd& g);

/// Bloch matrix of rho -> M' rho M^dagger + M rho M'^dagger, the derivative
/// of a conjugation superop when M depends on a parameter with dM/dtheta = M'.
GateSuperop conjugation_superop_derivative(const Eigen::MatrixXcd& m,
                                           const Eigen::MatrixXcd& dm);

/// Closed-form superop per the gate tables; matches superop_from_unitary of
/// the corresponding dense matrix.
GateSuperop builtin_superop(const GateSpec& spec);

/// Closed-form S_U and A_U columns of the single-qubit gate table.
GateSuperop builtin_sym_superop(const GateSpec& spec);
GateSuperop builtin_antisym_superop(const GateSpec& spec);

/// Closed-form d(superop)/dparam for parametrized builtins.
GateSuperop builtin_superop_derivative(const GateSpec& spec, int slot);

}  // namespace blochsim
