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

#include "helpers.hpp"

#include <numbers>

#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "blochsim/circuit.hpp"
#include "blochsim/oracle.hpp"

namespace test_helpers {

using namespace blochsim;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigen::Matrix2cd pauli_ref(char axis) {
  const std::complex<double> im{0.0, 1.0};
  Eigen::Matrix2cd m;
  switch (axis) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -im, im, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("bad axis");
  }
  return m;
}

Eigen::MatrixXcd pauli_string_ref(const std::string& word) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (char c : word) out = kron(out, pauli_ref(c));
  return out;
}

Eigen::MatrixXcd random_complex(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = std::complex<double>(dist(rng), dist(rng));
  return m;
}

Eigen::MatrixXcd random_density(int n_qubits, std::mt19937_64& rng) {
  const int dim = static_cast<int>(blochsim::dim2(n_qubits));
  const Eigen::MatrixXcd a = random_complex(dim, rng);
  Eigen::MatrixXcd rho = a * a.adjoint();
  rho /= rho.trace();
  // symmetrize away the last bits of roundoff
  return 0.5 * (rho + Eigen::MatrixXcd(rho.adjoint()));
}

DenseHermitian random_density_h(int n_qubits, std::mt19937_64& rng) {
  return DenseHermitian{n_qubits, random_density(n_qubits, rng)};
}

BlochVector random_state(int n_qubits, std::mt19937_64& rng) {
  return blochsim::bloch_from_density(random_density_h(n_qubits, rng));
}

Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng) {
  const Eigen::MatrixXcd a = random_complex(dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

double max_abs_diff(const BlochVector& a, const BlochVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    out = std::max(out, std::abs(a.data[i] - b.data[i]));
  return out;
}

Eigen::MatrixXcd dense_partial_trace(const Eigen::MatrixXcd& rho, const std::vector<int>& keep,
                                     int n_qubits) {
  const int k = static_cast<int>(keep.size());
  const std::size_t out_dim = blochsim::dim2(k);
  std::vector<int> traced;
  for (int q = 0; q < n_qubits; ++q)
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  auto place = [&](std::size_t a, std::size_t b) {
    std::size_t out = 0;
    for (int i = 0; i < k; ++i) out |= ((a >> i) & 1) << keep[i];
    for (std::size_t i = 0; i < traced.size(); ++i) out |= ((b >> i) & 1) << traced[i];
    return out;
  };
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_dim, out_dim);
  const std::size_t traced_dim = blochsim::dim2(static_cast<int>(traced.size()));
  for (std::size_t a = 0; a < out_dim; ++a)
    for (std::size_t ap = 0; ap < out_dim; ++ap)
      for (std::size_t b = 0; b < traced_dim; ++b) out(a, ap) += rho(place(a, b), place(ap, b));
  return out;
}

Eigen::MatrixXcd vectorized_lindblad(const Eigen::MatrixXcd& h_dense,
                                     const std::vector<blochsim::JumpOperator>& jumps,
                                     int n_qubits) {
  const std::complex<double> im{0.0, 1.0};
  const Eigen::Index dim = h_dense.rows();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  // column-stacking convention: vec(A X B) = (B^T kron A) vec(X)
  Eigen::MatrixXcd gen = -im * (kron(id, h_dense) - kron(h_dense.transpose(), id));
  for (const auto& jump : jumps) {
    const Eigen::MatrixXcd l =
        blochsim::oracle::embed_operator(jump.matrix, jump.targets, n_qubits);
    const Eigen::MatrixXcd ldl = l.adjoint() * l;
    gen += kron(l.conjugate(), l) -
           0.5 * (kron(id, ldl) + kron(ldl.transpose(), id));
  }
  return gen;
}

double fidelity_ref(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(rho * sigma);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double re = es.eigenvalues()(i).real();
    if (re > 0.0) acc += std::sqrt(re);
  }
  return acc * acc;
}

// A mixed 10-parameter circuit: rotations, two-qubit rotations, a
// parametrized controlled rotation, a CNOT, and a depolarizing channel with
// a bound probability.
Circuit random_mixed_circuit(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_int_distribution<int> qubit(0, n - 1);
  std::uniform_real_distribution<double> prob(0.05, 0.3);
  auto distinct_pair = [&](int& a, int& b) {
    a = qubit(rng);
    do { b = qubit(rng); } while (b == a);
  };
  Circuit c;
  c.n_qubits = n;
  const char* rot_names[] = {"Rx", "Ry", "Rz", "PhaseShift"};
  for (int i = 0; i < 6; ++i) {
    const std::string p = "p" + std::to_string(i);
    c.parameters[p] = angle(rng);
    c.stages.push_back(
        gate_stage(GateSpec{rot_names[i % 4], {0.0}, {qubit(rng)}, {}}, {{0, p, 1.0}}));
  }
  const char* two_names[] = {"Rxx", "Ryy", "Rzz"};
  for (int i = 6; i < 8; ++i) {
    const std::string p = "p" + std::to_string(i);
    c.parameters[p] = angle(rng);
    int a, b;
    distinct_pair(a, b);
    c.stages.push_back(
        gate_stage(GateSpec{two_names[i % 3], {0.0}, {a, b}, {}}, {{0, p, 1.0}}));
  }
  {
    c.parameters["p8"] = angle(rng);
    int a, b;
    distinct_pair(a, b);
    c.stages.push_back(
        controlled_stage({a}, GateSpec{"Rz", {0.0}, {b}, {}}, {{0, "p8", 1.0}}));
  }
  {
    int a, b;
    distinct_pair(a, b);
    c.stages.push_back(controlled_stage({a}, GateSpec{"X", {}, {b}, {}}));
  }
  {
    c.parameters["p9"] = prob(rng);
    c.stages.push_back(
        channel_stage(builtin_channel("depolarizing", 0.0), {qubit(rng)}, {{0, "p9", 1.0}}));
  }
  return c;
}

}  // namespace test_helpers
