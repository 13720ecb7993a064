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

#include "blochsim/oracle.hpp"

#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace blochsim::oracle {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void check_targets(std::span<const int> targets, int n_qubits, Eigen::Index op_dim) {
  if (op_dim != static_cast<Eigen::Index>(dim2(static_cast<int>(targets.size()))))
    throw std::invalid_argument("operator dimension does not match target count");
  std::vector<bool> seen(n_qubits, false);
  for (int t : targets) {
    if (t < 0 || t >= n_qubits) throw std::invalid_argument("target qubit out of range");
    if (seen[t]) throw std::invalid_argument("duplicate target qubits");
    seen[t] = true;
  }
}

// Bit masks of the qubits not covered by `targets`, ascending.
std::vector<std::size_t> rest_strides(std::span<const int> targets, int n_qubits) {
  std::vector<bool> is_target(n_qubits, false);
  for (int t : targets) is_target[t] = true;
  std::vector<std::size_t> rest;
  for (int q = 0; q < n_qubits; ++q)
    if (!is_target[q]) rest.push_back(std::size_t{1} << q);
  return rest;
}

}  // namespace

Eigen::MatrixXcd embed_operator(const Eigen::MatrixXcd& op, std::span<const int> targets,
                                int n_qubits) {
  check_targets(targets, n_qubits, op.rows());
  const int m = static_cast<int>(targets.size());
  const std::size_t dim = dim2(n_qubits);
  const std::size_t op_dim = dim2(m);
  const auto rest = rest_strides(targets, n_qubits);

  auto place = [&](std::size_t bits) {
    std::size_t out = 0;
    for (int i = 0; i < m; ++i) out |= ((bits >> i) & 1) << targets[i];
    return out;
  };

  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
  const std::size_t sites = dim >> m;
  for (std::size_t s = 0; s < sites; ++s) {
    std::size_t base = 0, c = s;
    for (std::size_t stride : rest) {
      base |= (c & 1) * stride;
      c >>= 1;
    }
    for (std::size_t r_ = 0; r_ < op_dim; ++r_)
      for (std::size_t c_ = 0; c_ < op_dim; ++c_)
        full(base | place(r_), base | place(c_)) = op(r_, c_);
  }
  return full;
}

DenseHermitian conjugate(const DenseHermitian& rho, const Eigen::MatrixXcd& u,
                         std::span<const int> targets) {
  const Eigen::MatrixXcd full = embed_operator(u, targets, rho.n_qubits);
  return DenseHermitian{rho.n_qubits, full * rho.matrix * full.adjoint()};
}

DenseHermitian kraus_apply(const DenseHermitian& rho, std::span<const Eigen::MatrixXcd> ops,
                           std::span<const int> targets) {
  if (ops.empty()) throw std::invalid_argument("kraus_apply: no Kraus operators");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.matrix.rows(), rho.matrix.cols());
  for (const auto& e : ops) {
    const Eigen::MatrixXcd full = embed_operator(e, targets, rho.n_qubits);
    out += full * rho.matrix * full.adjoint();
  }
  return DenseHermitian{rho.n_qubits, std::move(out)};
}

Eigen::MatrixXcd controlled_matrix(int num_controls, const Eigen::MatrixXcd& u) {
  if (num_controls < 1) throw std::invalid_argument("controlled_matrix: need at least one control");
  const Eigen::Index m_dim = u.rows();
  if (m_dim != u.cols()) throw std::invalid_argument("controlled_matrix: gate is not square");
  const std::size_t dim = m_dim << num_controls;
  Eigen::MatrixXcd cu = Eigen::MatrixXcd::Identity(dim, dim);
  // |1..1><1..1| (x) (U - I) touches only the last diagonal target block
  const std::size_t offset = dim - m_dim;
  cu.block(offset, offset, m_dim, m_dim) = u;
  return cu;
}

Eigen::MatrixXcd lindblad_rhs(const DenseHermitian& rho, const Eigen::MatrixXcd& h_dense,
                              std::span<const DenseJump> jumps) {
  if (h_dense.rows() != rho.matrix.rows())
    throw std::invalid_argument("lindblad_rhs: Hamiltonian dimension mismatch");
  Eigen::MatrixXcd out = -kI * (h_dense * rho.matrix - rho.matrix * h_dense);
  for (const auto& jump : jumps) {
    const Eigen::MatrixXcd l = embed_operator(jump.matrix, jump.targets, rho.n_qubits);
    const Eigen::MatrixXcd ldl = l.adjoint() * l;
    out += l * rho.matrix * l.adjoint() - 0.5 * (ldl * rho.matrix + rho.matrix * ldl);
  }
  return out;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) { return a.exp(); }

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) { return a.exp(); }

void apply_gate_dense_inplace(Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& u,
                              std::span<const int> targets) {
  const int m = static_cast<int>(targets.size());
  const std::size_t dim = static_cast<std::size_t>(rho.rows());
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  check_targets(targets, n, u.rows());
  const std::size_t op_dim = dim2(m);
  const auto rest = rest_strides(targets, n);
  std::vector<std::size_t> place(op_dim);
  for (std::size_t b = 0; b < op_dim; ++b) {
    std::size_t out = 0;
    for (int i = 0; i < m; ++i) out |= ((b >> i) & 1) << targets[i];
    place[b] = out;
  }
  const std::size_t sites = dim >> m;
  std::vector<std::complex<double>> buf(op_dim);

  // left pass: rho <- (I (x) U (x) I) rho, column by column
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t s = 0; s < sites; ++s) {
      std::size_t base = 0, c = s;
      for (std::size_t stride : rest) {
        base |= (c & 1) * stride;
        c >>= 1;
      }
      for (std::size_t k = 0; k < op_dim; ++k) buf[k] = rho(base | place[k], col);
      for (std::size_t r_ = 0; r_ < op_dim; ++r_) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < op_dim; ++k) acc += u(r_, k) * buf[k];
        rho(base | place[r_], col) = acc;
      }
    }
  }
  // right pass: rho <- rho (I (x) U^dagger (x) I), row by row
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t s = 0; s < sites; ++s) {
      std::size_t base = 0, c = s;
      for (std::size_t stride : rest) {
        base |= (c & 1) * stride;
        c >>= 1;
      }
      for (std::size_t k = 0; k < op_dim; ++k) buf[k] = rho(row, base | place[k]);
      for (std::size_t c_ = 0; c_ < op_dim; ++c_) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < op_dim; ++k) acc += std::conj(u(c_, k)) * buf[k];
        rho(row, base | place[c_]) = acc;
      }
    }
  }
}

}  // namespace blochsim::oracle
