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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace blochsim {

inline constexpr double kDefaultTolerance = 1e-12;

/// 4^n as a flat size.
constexpr std::size_t dim4(int n_qubits) {
  return std::size_t{1} << (2 * n_qubits);
}

/// 2^n as a flat size.
constexpr std::size_t dim2(int n_qubits) {
  return std::size_t{1} << n_qubits;
}

/// Real coefficient vector of an n-qubit density operator expanded in the
/// tensor-product Pauli basis. The coefficient of
/// sigma_{j_{n-1}} (x) ... (x) sigma_{j_0} lives at flat index
/// sum_l j_l 4^l, so qubit 0 is the fastest-varying axis. Pauli axes are
/// enumerated (I, X, Y, Z) = (0, 1, 2, 3).
///
/// For a valid state, data[0] == 1 (unit trace). Gradient co-vectors share
/// the layout but suspend that invariant; they are tagged `covector`.
struct BlochVector {
  int n_qubits = 0;
  std::vector<double> data;
  bool covector = false;

  /// All-zeros co-vector of matching size.
  static BlochVector make_covector(int n_qubits);
  /// Bloch vector of |0...0><0...0|.
  static BlochVector zero_state(int n_qubits);
  /// Bloch vector of I / 2^n.
  static BlochVector maximally_mixed(int n_qubits);
  /// Bloch vector of |b><b| for a computational basis state. `bits[l]` is
  /// the value of qubit l.
  static BlochVector basis_state(int n_qubits, std::uint64_t bits);
  /// Tensor product of single-qubit Bloch factors; factors[l] = (r0,rx,ry,rz)
  /// for qubit l.
  static BlochVector product_state(const std::vector<std::array<double, 4>>& factors);

  std::size_t size() const { return data.size(); }
  double& operator[](std::size_t i) { return data[i]; }
  double operator[](std::size_t i) const { return data[i]; }
};

/// Dense 2^n x 2^n Hermitian matrix; the conventional representation used by
/// the oracle code paths and for conversions.
struct DenseHermitian {
  int n_qubits = 0;
  Eigen::MatrixXcd matrix;
};

/// Validating constructor: checks the dimension is a power of two and that
/// max_ij |M - M^dagger| <= tol.
DenseHermitian make_dense_hermitian(Eigen::MatrixXcd matrix,
                                    double tol = kDefaultTolerance);

/// One weighted Pauli string, e.g. {0.5, "XIZ"}. The rightmost character of
/// the word acts on qubit 0.
struct PauliTerm {
  double coefficient = 0.0;
  std::string word;
};

/// Weighted sum of Pauli strings. Terms are canonicalized on construction:
/// words validated, duplicates merged.
struct PauliObservable {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;
};

PauliObservable make_observable(int n_qubits, std::vector<PauliTerm> terms);

/// Flat Pauli-basis index of a word over {I,X,Y,Z}: sum_l j_l 4^l with the
/// rightmost character mapped to qubit 0.
std::size_t pauli_flat_index(const std::string& word);

/// Inverse of pauli_flat_index.
std::string pauli_word(std::size_t index, int n_qubits);

/// Dense matrix of the Pauli string with the given flat index (n small).
Eigen::MatrixXcd pauli_string_matrix(int n_qubits, std::size_t index);

/// Dense 2^n x 2^n matrix of a Pauli-string sum.
Eigen::MatrixXcd dense_observable(const PauliObservable& obs);

/// Projects a dense operator onto the Pauli basis: result[J] = Tr[sigma_J A].
/// A need not be Hermitian; the imaginary parts of the traces are discarded
/// (they vanish for Hermitian A).
std::vector<double> pauli_project(const Eigen::MatrixXcd& a);

/// r_J = Tr[sigma_J rho]. Validates Hermiticity to `tol`.
BlochVector bloch_from_density(const DenseHermitian& rho,
                               double tol = kDefaultTolerance);

/// rho = 2^-n sum_J r_J sigma_J. Exact inverse of bloch_from_density.
DenseHermitian density_from_bloch(const BlochVector& r);

/// sum_t coeff_t * r[flat_index(word_t)], using Tr[sigma_J rho] = r_J.
double expectation(const BlochVector& r, const PauliObservable& obs);

/// Tr[rho^2] = 2^-n ||r||^2.
double purity(const BlochVector& r);

/// Reduced state over `keep` (deduplicated, ascending order in the result).
/// In this basis the partial trace is the slice of r with index 0 on every
/// traced-out qubit axis.
BlochVector partial_trace(const BlochVector& r, std::vector<int> keep);

}  // namespace blochsim
