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

#include "blochsim/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blochsim {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  Eigen::Matrix2cd m;
  m << 0, -kI, kI, 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::MatrixXcd kron2(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void require_params(const GateSpec& spec, int count) {
  if (static_cast<int>(spec.params.size()) != count)
    throw std::invalid_argument("gate '" + spec.name + "' expects " + std::to_string(count) +
                                " parameter(s), got " + std::to_string(spec.params.size()));
}

std::array<double, 3> unit_axis(const GateSpec& spec) {
  const double nx = spec.params[1], ny = spec.params[2], nz = spec.params[3];
  const double nrm = std::sqrt(nx * nx + ny * ny + nz * nz);
  if (std::abs(nrm - 1.0) > kDefaultTolerance)
    throw std::invalid_argument("Rn axis is not unit norm");
  return {nx, ny, nz};
}

// Sparsity pattern shared by the two-qubit rotation superops: identity,
// except cos(theta) on eight diagonal slots and +/-sin(theta) couplings.
struct TwoQubitRotationPattern {
  std::array<int, 8> diag;
  std::array<std::pair<int, int>, 4> plus_s;
  std::array<std::pair<int, int>, 4> minus_s;
};

const TwoQubitRotationPattern& two_qubit_pattern(const std::string& name) {
  static const TwoQubitRotationPattern rxx{
      {2, 3, 6, 7, 8, 9, 12, 13},
      {{{3, 6}, {12, 9}, {7, 2}, {13, 8}}},
      {{{6, 3}, {9, 12}, {2, 7}, {8, 13}}}};
  static const TwoQubitRotationPattern ryy{
      {1, 3, 4, 6, 9, 11, 12, 14},
      {{{1, 11}, {4, 14}, {6, 12}, {9, 3}}},
      {{{11, 1}, {14, 4}, {12, 6}, {3, 9}}}};
  static const TwoQubitRotationPattern rzz{
      {1, 2, 4, 7, 8, 11, 13, 14},
      {{{2, 13}, {8, 7}, {11, 4}, {14, 1}}},
      {{{13, 2}, {7, 8}, {4, 11}, {1, 14}}}};
  if (name == "Rxx") return rxx;
  if (name == "Ryy") return ryy;
  if (name == "Rzz") return rzz;
  throw std::invalid_argument("not a two-qubit rotation: " + name);
}

Eigen::MatrixXd two_qubit_rotation_matrix(const std::string& name, double theta) {
  const auto& p = two_qubit_pattern(name);
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(16, 16);
  for (int d : p.diag) m(d, d) = c;
  for (auto [r, cidx] : p.plus_s) m(r, cidx) = s;
  for (auto [r, cidx] : p.minus_s) m(r, cidx) = -s;
  return m;
}

Eigen::Matrix3d cross_matrix(const std::array<double, 3>& n) {
  Eigen::Matrix3d k;
  k << 0, -n[2], n[1], n[2], 0, -n[0], -n[1], n[0], 0;
  return k;
}

Eigen::Matrix3d rodrigues(const std::array<double, 3>& n, double theta) {
  const Eigen::Vector3d v(n[0], n[1], n[2]);
  return std::cos(theta) * Eigen::Matrix3d::Identity() + std::sin(theta) * cross_matrix(n) +
         (1.0 - std::cos(theta)) * (v * v.transpose());
}

// Projection core: column k of the result is 2^-m * pauli_project(map(sigma_k)).
template <typename MapFn>
GateSuperop project_map(int arity, SuperopKind kind, MapFn&& map, double tol) {
  const std::size_t dim = dim4(arity);
  const double scale = 1.0 / static_cast<double>(dim2(arity));
  Eigen::MatrixXd m(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const Eigen::MatrixXcd image = map(pauli_string_matrix(arity, k));
    const std::vector<double> col = pauli_project(image);
    for (std::size_t j = 0; j < dim; ++j) m(j, k) = scale * col[j];
  }
  return make_superop(arity, kind, std::move(m), tol);
}

int arity_of_matrix(const Eigen::MatrixXcd& g) {
  int n = 0;
  Eigen::Index d = g.rows();
  if (d != g.cols() || d < 2) throw std::invalid_argument("operator matrix must be square");
  while (d > 1) {
    if (d % 2 != 0) throw std::invalid_argument("operator dimension is not a power of two");
    d /= 2;
    ++n;
  }
  return n;
}

}  // namespace

GateSuperop make_superop(int arity, SuperopKind kind, Eigen::MatrixXd matrix, double tol) {
  const Eigen::Index dim = static_cast<Eigen::Index>(dim4(arity));
  if (matrix.rows() != dim || matrix.cols() != dim)
    throw std::invalid_argument("make_superop: matrix size does not match arity");
  if (kind == SuperopKind::Unitary) {
    const double orth_err =
        (matrix.transpose() * matrix - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (orth_err > tol)
      throw std::invalid_argument("make_superop: unitary-kind matrix is not orthogonal");
    for (Eigen::Index k = 0; k < dim; ++k) {
      const double want = (k == 0) ? 1.0 : 0.0;
      if (std::abs(matrix(0, k) - want) > tol)
        throw std::invalid_argument("make_superop: unitary-kind matrix does not preserve the trace row");
    }
  }
  GateSuperop out;
  out.arity = arity;
  out.kind = kind;
  out.matrix = std::move(matrix);
  out.nonzeros.reserve(16);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      if (out.matrix(r, c) != 0.0)
        out.nonzeros.push_back({static_cast<int>(r), static_cast<int>(c), out.matrix(r, c)});
  return out;
}

GateSuperop transpose_superop(const GateSuperop& k) {
  GateSuperop out;
  out.arity = k.arity;
  out.kind = k.kind;
  out.matrix = k.matrix.transpose();
  out.nonzeros.reserve(k.nonzeros.size());
  for (const auto& e : k.nonzeros) out.nonzeros.push_back({e.col, e.row, e.value});
  return out;
}

int builtin_arity(const std::string& name) {
  if (name == "Rxx" || name == "Ryy" || name == "Rzz") return 2;
  if (name == "X" || name == "Y" || name == "Z" || name == "H" || name == "S" ||
      name == "PhaseShift" || name == "Rx" || name == "Ry" || name == "Rz" || name == "Rn" ||
      name == "Proj1")
    return 1;
  throw std::invalid_argument("unknown gate name: " + name);
}

int builtin_param_count(const std::string& name) {
  if (name == "PhaseShift" || name == "Rx" || name == "Ry" || name == "Rz" || name == "Rxx" ||
      name == "Ryy" || name == "Rzz")
    return 1;
  if (name == "Rn") return 4;  // theta, nx, ny, nz
  builtin_arity(name);         // validates the name
  return 0;
}

bool builtin_is_unitary(const std::string& name) {
  builtin_arity(name);
  return name != "Proj1";
}

Eigen::MatrixXcd dense_gate_matrix(const GateSpec& spec) {
  if (spec.name == "Custom") {
    if (spec.custom_matrix.rows() == 0) throw std::invalid_argument("Custom gate has no matrix");
    return spec.custom_matrix;
  }
  require_params(spec, builtin_param_count(spec.name));
  if (spec.name == "X") return pauli_x();
  if (spec.name == "Y") return pauli_y();
  if (spec.name == "Z") return pauli_z();
  if (spec.name == "H") {
    Eigen::Matrix2cd m;
    m << 1, 1, 1, -1;
    return m / std::numbers::sqrt2;
  }
  if (spec.name == "S") {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, kI;
    return m;
  }
  if (spec.name == "Proj1") {
    Eigen::Matrix2cd m;
    m << 0, 0, 0, 1;
    return m;
  }
  if (spec.name == "PhaseShift") {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, std::exp(kI * spec.params[0]);
    return m;
  }
  const double half = 0.5 * spec.params[0];
  const double c = std::cos(half), s = std::sin(half);
  if (spec.name == "Rx") return c * Eigen::Matrix2cd::Identity() - kI * s * pauli_x();
  if (spec.name == "Ry") return c * Eigen::Matrix2cd::Identity() - kI * s * pauli_y();
  if (spec.name == "Rz") return c * Eigen::Matrix2cd::Identity() - kI * s * pauli_z();
  if (spec.name == "Rn") {
    const auto n = unit_axis(spec);
    const Eigen::Matrix2cd ns = n[0] * pauli_x() + n[1] * pauli_y() + n[2] * pauli_z();
    return c * Eigen::Matrix2cd::Identity() - kI * s * ns;
  }
  if (spec.name == "Rxx") return c * Eigen::MatrixXcd::Identity(4, 4) - kI * s * kron2(pauli_x(), pauli_x());
  if (spec.name == "Ryy") return c * Eigen::MatrixXcd::Identity(4, 4) - kI * s * kron2(pauli_y(), pauli_y());
  if (spec.name == "Rzz") return c * Eigen::MatrixXcd::Identity(4, 4) - kI * s * kron2(pauli_z(), pauli_z());
  throw std::invalid_argument("unknown gate name: " + spec.name);
}

Eigen::MatrixXcd dense_gate_derivative(const GateSpec& spec, int slot) {
  if (builtin_param_count(spec.name) == 0)
    throw std::invalid_argument("gate '" + spec.name + "' has no parameters");
  if (slot != 0)
    throw std::invalid_argument("gate '" + spec.name + "' is differentiable in slot 0 only");
  if (spec.name == "PhaseShift") {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(1, 1) = kI * std::exp(kI * spec.params[0]);
    return m;
  }
  const double half = 0.5 * spec.params[0];
  const double c = std::cos(half), s = std::sin(half);
  if (spec.name == "Rx") return -0.5 * (s * Eigen::Matrix2cd::Identity() + kI * c * pauli_x());
  if (spec.name == "Ry") return -0.5 * (s * Eigen::Matrix2cd::Identity() + kI * c * pauli_y());
  if (spec.name == "Rz") return -0.5 * (s * Eigen::Matrix2cd::Identity() + kI * c * pauli_z());
  if (spec.name == "Rn") {
    const auto n = unit_axis(spec);
    const Eigen::Matrix2cd ns = n[0] * pauli_x() + n[1] * pauli_y() + n[2] * pauli_z();
    return -0.5 * (s * Eigen::Matrix2cd::Identity() + kI * c * ns);
  }
  if (spec.name == "Rxx")
    return -0.5 * (s * Eigen::MatrixXcd::Identity(4, 4) + kI * c * kron2(pauli_x(), pauli_x()));
  if (spec.name == "Ryy")
    return -0.5 * (s * Eigen::MatrixXcd::Identity(4, 4) + kI * c * kron2(pauli_y(), pauli_y()));
  if (spec.name == "Rzz")
    return -0.5 * (s * Eigen::MatrixXcd::Identity(4, 4) + kI * c * kron2(pauli_z(), pauli_z()));
  throw std::invalid_argument("unknown gate name: " + spec.name);
}

GateSpec adjoint_gate(const GateSpec& spec) {
  GateSpec out = spec;
  if (spec.name == "Custom") {
    out.custom_matrix = spec.custom_matrix.adjoint();
    return out;
  }
  if (spec.name == "S") {
    out.name = "PhaseShift";
    out.params = {-std::numbers::pi / 2};
    return out;
  }
  if (spec.name == "Proj1") return out;  // self-adjoint (though not unitary)
  const int np = builtin_param_count(spec.name);
  if (np > 0) {
    require_params(spec, np);
    out.params[0] = -spec.params[0];  // angle negation inverts every rotation/phase
  }
  return out;  // X, Y, Z, H are self-inverse
}

GateSuperop superop_from_unitary(const Eigen::MatrixXcd& u, double tol) {
  const int arity = arity_of_matrix(u);
  const double unit_err =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (unit_err > tol)
    throw std::invalid_argument("superop_from_unitary: input is not unitary, max |U^dagger U - I| = " +
                                std::to_string(unit_err));
  const Eigen::MatrixXcd udag = u.adjoint();
  return project_map(
      arity, SuperopKind::Unitary,
      [&](const Eigen::MatrixXcd& sigma) -> Eigen::MatrixXcd { return u * sigma * udag; }, 1e-10);
}

GateSuperop conjugation_superop(const Eigen::MatrixXcd& g) {
  const int arity = arity_of_matrix(g);
  const Eigen::MatrixXcd gdag = g.adjoint();
  return project_map(
      arity, SuperopKind::Channel,
      [&](const Eigen::MatrixXcd& sigma) -> Eigen::MatrixXcd { return g * sigma * gdag; },
      kDefaultTolerance);
}

GateSuperop sym_superop(const Eigen::MatrixXcd& g) {
  const int arity = arity_of_matrix(g);
  const Eigen::MatrixXcd gdag = g.adjoint();
  return project_map(
      arity, SuperopKind::Sym,
      [&](const Eigen::MatrixXcd& sigma) -> Eigen::MatrixXcd {
        return 0.5 * (g * sigma + sigma * gdag);
      },
      kDefaultTolerance);
}

GateSuperop antisym_superop(const Eigen::MatrixXcd& g) {
  const int arity = arity_of_matrix(g);
  const Eigen::MatrixXcd gdag = g.adjoint();
  return project_map(
      arity, SuperopKind::Antisym,
      [&](const Eigen::MatrixXcd& sigma) -> Eigen::MatrixXcd {
        return 0.5 * kI * (g * sigma - sigma * gdag);
      },
      kDefaultTolerance);
}

GateSuperop conjugation_superop_derivative(const Eigen::MatrixXcd& m, const Eigen::MatrixXcd& dm) {
  const int arity = arity_of_matrix(m);
  const Eigen::MatrixXcd mdag = m.adjoint();
  const Eigen::MatrixXcd dmdag = dm.adjoint();
  return project_map(
      arity, SuperopKind::Channel,
      [&](const Eigen::MatrixXcd& sigma) -> Eigen::MatrixXcd {
        return dm * sigma * mdag + m * sigma * dmdag;
      },
      kDefaultTolerance);
}

GateSuperop builtin_superop(const GateSpec& spec) {
  if (spec.name == "Custom") return superop_from_unitary(spec.custom_matrix);
  require_params(spec, builtin_param_count(spec.name));
  const int arity = builtin_arity(spec.name);
  if (arity == 2)
    return make_superop(2, SuperopKind::Unitary, two_qubit_rotation_matrix(spec.name, spec.params[0]));

  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(4, 4);
  if (spec.name == "X") {
    m(2, 2) = m(3, 3) = -1;
  } else if (spec.name == "Y") {
    m(1, 1) = m(3, 3) = -1;
  } else if (spec.name == "Z") {
    m(1, 1) = m(2, 2) = -1;
  } else if (spec.name == "H") {
    m(1, 1) = m(2, 2) = m(3, 3) = 0;
    m(1, 3) = 1;
    m(2, 2) = -1;
    m(3, 1) = 1;
  } else if (spec.name == "S") {
    m(1, 1) = m(2, 2) = 0;
    m(1, 2) = -1;
    m(2, 1) = 1;
  } else if (spec.name == "PhaseShift" || spec.name == "Rz") {
    const double c = std::cos(spec.params[0]), s = std::sin(spec.params[0]);
    m(1, 1) = c;
    m(1, 2) = -s;
    m(2, 1) = s;
    m(2, 2) = c;
  } else if (spec.name == "Rx") {
    const double c = std::cos(spec.params[0]), s = std::sin(spec.params[0]);
    m(2, 2) = c;
    m(2, 3) = -s;
    m(3, 2) = s;
    m(3, 3) = c;
  } else if (spec.name == "Ry") {
    const double c = std::cos(spec.params[0]), s = std::sin(spec.params[0]);
    m(1, 1) = c;
    m(1, 3) = s;
    m(3, 1) = -s;
    m(3, 3) = c;
  } else if (spec.name == "Rn") {
    m.block<3, 3>(1, 1) = rodrigues(unit_axis(spec), spec.params[0]);
  } else if (spec.name == "Proj1") {
    m.setZero();
    m(0, 0) = m(3, 3) = 0.5;
    m(0, 3) = m(3, 0) = -0.5;
    return make_superop(1, SuperopKind::Channel, std::move(m));
  } else {
    throw std::invalid_argument("unknown gate name: " + spec.name);
  }
  return make_superop(1, SuperopKind::Unitary, std::move(m));
}

GateSuperop builtin_sym_superop(const GateSpec& spec) {
  if (spec.name == "Custom" || builtin_arity(spec.name) != 1)
    return sym_superop(dense_gate_matrix(spec));
  require_params(spec, builtin_param_count(spec.name));
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  if (spec.name == "X") {
    m(0, 1) = m(1, 0) = 1;
  } else if (spec.name == "Y") {
    m(0, 2) = m(2, 0) = 1;
  } else if (spec.name == "Z") {
    m(0, 3) = m(3, 0) = 1;
  } else if (spec.name == "H") {
    m(0, 1) = m(0, 3) = m(1, 0) = m(3, 0) = 1.0 / std::numbers::sqrt2;
  } else if (spec.name == "S") {
    m << 1, 0, 0, 1, 0, 1, -1, 0, 0, 1, 1, 0, 1, 0, 0, 1;
    m *= 0.5;
  } else if (spec.name == "Proj1") {
    m = 0.5 * Eigen::MatrixXd::Identity(4, 4);
    m(0, 0) = m(3, 3) = 0.5;
    m(0, 3) = m(3, 0) = -0.5;
  } else if (spec.name == "PhaseShift") {
    const double c = std::cos(0.5 * spec.params[0]), s = std::sin(0.5 * spec.params[0]);
    m << c * c, 0, 0, s * s, 0, c * c, -c * s, 0, 0, c * s, c * c, 0, s * s, 0, 0, c * c;
  } else {
    const double c = std::cos(0.5 * spec.params[0]), s = std::sin(0.5 * spec.params[0]);
    if (spec.name == "Rx") {
      m = c * Eigen::MatrixXd::Identity(4, 4);
      m(2, 3) = -s;
      m(3, 2) = s;
    } else if (spec.name == "Ry") {
      m = c * Eigen::MatrixXd::Identity(4, 4);
      m(1, 3) = s;
      m(3, 1) = -s;
    } else if (spec.name == "Rz") {
      m = c * Eigen::MatrixXd::Identity(4, 4);
      m(1, 2) = -s;
      m(2, 1) = s;
    } else if (spec.name == "Rn") {
      const auto n = unit_axis(spec);
      m = c * Eigen::MatrixXd::Identity(4, 4);
      m.block<3, 3>(1, 1) += s * cross_matrix(n);
    } else {
      throw std::invalid_argument("unknown gate name: " + spec.name);
    }
  }
  return make_superop(1, SuperopKind::Sym, std::move(m));
}

GateSuperop builtin_antisym_superop(const GateSpec& spec) {
  if (spec.name == "Custom" || builtin_arity(spec.name) != 1)
    return antisym_superop(dense_gate_matrix(spec));
  require_params(spec, builtin_param_count(spec.name));
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  if (spec.name == "X") {
    m(2, 3) = 1;
    m(3, 2) = -1;
  } else if (spec.name == "Y") {
    m(1, 3) = -1;
    m(3, 1) = 1;
  } else if (spec.name == "Z") {
    m(1, 2) = 1;
    m(2, 1) = -1;
  } else if (spec.name == "H") {
    const double r = 1.0 / std::numbers::sqrt2;
    m(1, 2) = r;
    m(2, 1) = -r;
    m(2, 3) = r;
    m(3, 2) = -r;
  } else if (spec.name == "S") {
    m << -1, 0, 0, 1, 0, -1, 1, 0, 0, -1, -1, 0, 1, 0, 0, -1;
    m *= 0.5;
  } else if (spec.name == "Proj1") {
    m(1, 2) = -0.5;
    m(2, 1) = 0.5;
  } else if (spec.name == "PhaseShift") {
    const double c = std::cos(0.5 * spec.params[0]), s = std::sin(0.5 * spec.params[0]);
    m << -c * s, 0, 0, c * s, 0, -c * s, s * s, 0, 0, -s * s, -c * s, 0, c * s, 0, 0, -c * s;
  } else {
    const double s = std::sin(0.5 * spec.params[0]);
    if (spec.name == "Rx") {
      m(0, 1) = m(1, 0) = s;
    } else if (spec.name == "Ry") {
      m(0, 2) = m(2, 0) = s;
    } else if (spec.name == "Rz") {
      m(0, 3) = m(3, 0) = s;
    } else if (spec.name == "Rn") {
      const auto n = unit_axis(spec);
      for (int i = 0; i < 3; ++i) m(0, 1 + i) = m(1 + i, 0) = s * n[i];
    } else {
      throw std::invalid_argument("unknown gate name: " + spec.name);
    }
  }
  return make_superop(1, SuperopKind::Antisym, std::move(m));
}

GateSuperop builtin_superop_derivative(const GateSpec& spec, int slot) {
  if (spec.name == "Custom")
    throw std::invalid_argument("Custom gates carry their own derivative closures");
  if (builtin_param_count(spec.name) == 0)
    throw std::invalid_argument("gate '" + spec.name + "' has no parameters");
  if (slot != 0)
    throw std::invalid_argument("gate '" + spec.name + "' is differentiable in slot 0 only");
  require_params(spec, builtin_param_count(spec.name));

  if (builtin_arity(spec.name) == 2) {
    const auto& p = two_qubit_pattern(spec.name);
    const double c = std::cos(spec.params[0]), s = std::sin(spec.params[0]);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(16, 16);
    for (int d : p.diag) m(d, d) = -s;
    for (auto [r, cidx] : p.plus_s) m(r, cidx) = c;
    for (auto [r, cidx] : p.minus_s) m(r, cidx) = -c;
    return make_superop(2, SuperopKind::Channel, std::move(m));
  }

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  const double c = std::cos(spec.params[0]), s = std::sin(spec.params[0]);
  if (spec.name == "PhaseShift" || spec.name == "Rz") {
    m(1, 1) = -s;
    m(1, 2) = -c;
    m(2, 1) = c;
    m(2, 2) = -s;
  } else if (spec.name == "Rx") {
    m(2, 2) = -s;
    m(2, 3) = -c;
    m(3, 2) = c;
    m(3, 3) = -s;
  } else if (spec.name == "Ry") {
    m(1, 1) = -s;
    m(1, 3) = c;
    m(3, 1) = -c;
    m(3, 3) = -s;
  } else if (spec.name == "Rn") {
    const auto n = unit_axis(spec);
    const Eigen::Vector3d v(n[0], n[1], n[2]);
    m.block<3, 3>(1, 1) = -s * Eigen::Matrix3d::Identity() + c * cross_matrix(n) +
                          s * (v * v.transpose());
  } else {
    throw std::invalid_argument("unknown gate name: " + spec.name);
  }
  return make_superop(1, SuperopKind::Channel, std::move(m));
}

}  // namespace blochsim
