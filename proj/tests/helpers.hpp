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

#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "blochsim/bloch.hpp"
#include "blochsim/circuit.hpp"
#include "blochsim/lindblad.hpp"

// Brute-force reference constructions kept deliberately independent of the
// library's Bloch code paths: Pauli matrices assembled by explicit Kronecker
// products, traces taken as matrix products.
namespace test_helpers {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

Eigen::Matrix2cd pauli_ref(char axis);

/// sigma_word via Kronecker products; word[0] acts on the highest qubit.
Eigen::MatrixXcd pauli_string_ref(const std::string& word);

Eigen::MatrixXcd random_complex(int dim, std::mt19937_64& rng);

/// Ginibre density matrix A A^dagger / Tr.
Eigen::MatrixXcd random_density(int n_qubits, std::mt19937_64& rng);
blochsim::DenseHermitian random_density_h(int n_qubits, std::mt19937_64& rng);
blochsim::BlochVector random_state(int n_qubits, std::mt19937_64& rng);

/// Haar-ish unitary from the QR decomposition of a Ginibre matrix.
Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng);

double max_abs_diff(const blochsim::BlochVector& a, const blochsim::BlochVector& b);

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.derived().cwiseAbs().maxCoeff();
}

/// Reduced density matrix over `keep` (ascending), brute force.
Eigen::MatrixXcd dense_partial_trace(const Eigen::MatrixXcd& rho, const std::vector<int>& keep,
                                     int n_qubits);

/// Column-stacking vectorization of the Lindblad generator acting on dense
/// density matrices (an independent route to the dynamics).
Eigen::MatrixXcd vectorized_lindblad(const Eigen::MatrixXcd& h_dense,
                                     const std::vector<blochsim::JumpOperator>& jumps,
                                     int n_qubits);

/// Uhlmann fidelity via the eigenvalues of the (non-Hermitian) product
/// rho sigma: (sum_i sqrt(lambda_i))^2.
double fidelity_ref(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma);

/// Ten-parameter mixed circuit: six single-qubit rotations, two two-qubit
/// rotations, a parametrized controlled rotation, a CNOT, and a depolarizing
/// channel with a bound probability.
blochsim::Circuit random_mixed_circuit(int n_qubits, std::mt19937_64& rng);

}  // namespace test_helpers
