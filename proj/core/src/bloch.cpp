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

#include "blochsim/bloch.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace blochsim {

namespace {

int checked_n_qubits(std::size_t dim, const char* what) {
  int n = 0;
  std::size_t d = dim;
  while (d > 1) {
    if (d % 2 != 0) throw std::invalid_argument(std::string(what) + ": dimension is not a power of two");
    d /= 2;
    ++n;
  }
  if (n == 0) throw std::invalid_argument(std::string(what) + ": empty matrix");
  return n;
}

// Bit masks describing the action of the Pauli string with flat index J:
// sigma_J |c> = i^{n_y} (-1)^{popcount(c & zy_mask)} |c ^ flip_mask>.
struct PauliMasks {
  std::uint64_t flip = 0;  // X and Y axes flip the basis bit
  std::uint64_t zy = 0;    // Z and Y axes contribute (-1)^bit
  int n_y = 0;             // number of Y axes (global i^n_y factor)
};

PauliMasks masks_for(std::size_t index, int n_qubits) {
  PauliMasks m;
  for (int l = 0; l < n_qubits; ++l) {
    switch ((index >> (2 * l)) & 3) {
      case 1: m.flip |= std::uint64_t{1} << l; break;
      case 2:
        m.flip |= std::uint64_t{1} << l;
        m.zy |= std::uint64_t{1} << l;
        ++m.n_y;
        break;
      case 3: m.zy |= std::uint64_t{1} << l; break;
      default: break;
    }
  }
  return m;
}

std::complex<double> i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

int pauli_axis(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default:
      throw std::invalid_argument(std::string("invalid Pauli character '") + c + "'");
  }
}

}  // namespace

BlochVector BlochVector::make_covector(int n_qubits) {
  BlochVector r;
  r.n_qubits = n_qubits;
  r.data.assign(dim4(n_qubits), 0.0);
  r.covector = true;
  return r;
}

BlochVector BlochVector::zero_state(int n_qubits) {
  return basis_state(n_qubits, 0);
}

BlochVector BlochVector::maximally_mixed(int n_qubits) {
  BlochVector r;
  r.n_qubits = n_qubits;
  r.data.assign(dim4(n_qubits), 0.0);
  r.data[0] = 1.0;
  return r;
}

BlochVector BlochVector::basis_state(int n_qubits, std::uint64_t bits) {
  std::vector<std::array<double, 4>> factors(n_qubits);
  for (int l = 0; l < n_qubits; ++l) {
    const double z = ((bits >> l) & 1) ? -1.0 : 1.0;
    factors[l] = {1.0, 0.0, 0.0, z};
  }
  return product_state(factors);
}

BlochVector BlochVector::product_state(const std::vector<std::array<double, 4>>& factors) {
  if (factors.empty()) throw std::invalid_argument("product_state: no factors");
  const int n = static_cast<int>(factors.size());
  std::vector<double> acc{1.0};
  for (int l = n - 1; l >= 0; --l) {
    std::vector<double> next(acc.size() * 4);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (int j = 0; j < 4; ++j) next[i * 4 + j] = acc[i] * factors[l][j];
    acc = std::move(next);
  }
  BlochVector r;
  r.n_qubits = n;
  r.data = std::move(acc);
  return r;
}

DenseHermitian make_dense_hermitian(Eigen::MatrixXcd matrix, double tol) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("make_dense_hermitian: matrix is not square");
  const int n = checked_n_qubits(static_cast<std::size_t>(matrix.rows()), "make_dense_hermitian");
  const double herm_err = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > tol)
    throw std::invalid_argument("make_dense_hermitian: non-Hermitian input, max |M - M^dagger| = " +
                                std::to_string(herm_err));
  return DenseHermitian{n, std::move(matrix)};
}

PauliObservable make_observable(int n_qubits, std::vector<PauliTerm> terms) {
  if (n_qubits <= 0) throw std::invalid_argument("make_observable: n_qubits must be positive");
  PauliObservable obs;
  obs.n_qubits = n_qubits;
  std::unordered_map<std::string, std::size_t> seen;
  for (auto& t : terms) {
    if (static_cast<int>(t.word.size()) != n_qubits)
      throw std::invalid_argument("make_observable: word '" + t.word + "' has wrong length");
    for (char c : t.word) pauli_axis(c);
    auto [it, inserted] = seen.emplace(t.word, obs.terms.size());
    if (inserted) {
      obs.terms.push_back(std::move(t));
    } else {
      obs.terms[it->second].coefficient += t.coefficient;
    }
  }
  return obs;
}

std::size_t pauli_flat_index(const std::string& word) {
  const int n = static_cast<int>(word.size());
  std::size_t index = 0;
  for (int l = 0; l < n; ++l) {
    // qubit l is the (n-1-l)-th character
    index += static_cast<std::size_t>(pauli_axis(word[n - 1 - l])) << (2 * l);
  }
  return index;
}

std::string pauli_word(std::size_t index, int n_qubits) {
  static constexpr char kAxes[] = {'I', 'X', 'Y', 'Z'};
  std::string word(n_qubits, 'I');
  for (int l = 0; l < n_qubits; ++l)
    word[n_qubits - 1 - l] = kAxes[(index >> (2 * l)) & 3];
  return word;
}

Eigen::MatrixXcd pauli_string_matrix(int n_qubits, std::size_t index) {
  const std::size_t dim = dim2(n_qubits);
  const PauliMasks m = masks_for(index, n_qubits);
  const std::complex<double> global = i_power(m.n_y);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const double sign = (std::popcount(c & m.zy) & 1) ? -1.0 : 1.0;
    out(c ^ m.flip, c) = global * sign;
  }
  return out;
}

Eigen::MatrixXcd dense_observable(const PauliObservable& obs) {
  const std::size_t dim = dim2(obs.n_qubits);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : obs.terms) {
    const PauliMasks m = masks_for(pauli_flat_index(t.word), obs.n_qubits);
    const std::complex<double> global = i_power(m.n_y) * t.coefficient;
    for (std::size_t c = 0; c < dim; ++c) {
      const double sign = (std::popcount(c & m.zy) & 1) ? -1.0 : 1.0;
      out(c ^ m.flip, c) += global * sign;
    }
  }
  return out;
}

std::vector<double> pauli_project(const Eigen::MatrixXcd& a) {
  const int n = checked_n_qubits(static_cast<std::size_t>(a.rows()), "pauli_project");
  const std::size_t dim = dim2(n);
  std::vector<double> out(dim4(n));
  for (std::size_t j = 0; j < out.size(); ++j) {
    const PauliMasks m = masks_for(j, n);
    // Tr[sigma_J A] = i^{n_y} sum_c (-1)^{popcount(c & zy)} A(c, c ^ flip)
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t c = 0; c < dim; ++c) {
      const double sign = (std::popcount(c & m.zy) & 1) ? -1.0 : 1.0;
      acc += sign * a(c, c ^ m.flip);
    }
    out[j] = (i_power(m.n_y) * acc).real();
  }
  return out;
}

BlochVector bloch_from_density(const DenseHermitian& rho, double tol) {
  const double herm_err = (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm_err > tol)
    throw std::invalid_argument("bloch_from_density: non-Hermitian input, max |M - M^dagger| = " +
                                std::to_string(herm_err));
  BlochVector r;
  r.n_qubits = rho.n_qubits;
  r.data = pauli_project(rho.matrix);
  return r;
}

DenseHermitian density_from_bloch(const BlochVector& r) {
  const std::size_t dim = dim2(r.n_qubits);
  const double scale = 1.0 / static_cast<double>(dim);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r.data[j] == 0.0) continue;
    const PauliMasks m = masks_for(j, r.n_qubits);
    const std::complex<double> global = i_power(m.n_y) * (scale * r.data[j]);
    for (std::size_t c = 0; c < dim; ++c) {
      const double sign = (std::popcount(c & m.zy) & 1) ? -1.0 : 1.0;
      out(c ^ m.flip, c) += global * sign;
    }
  }
  return DenseHermitian{r.n_qubits, std::move(out)};
}

double expectation(const BlochVector& r, const PauliObservable& obs) {
  if (obs.n_qubits != r.n_qubits)
    throw std::invalid_argument("expectation: observable qubit count does not match state");
  double acc = 0.0;
  for (const auto& t : obs.terms) acc += t.coefficient * r.data[pauli_flat_index(t.word)];
  return acc;
}

double purity(const BlochVector& r) {
  double nrm2 = 0.0;
  for (double v : r.data) nrm2 += v * v;
  return nrm2 / static_cast<double>(dim2(r.n_qubits));
}

BlochVector partial_trace(const BlochVector& r, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  for (int q : keep)
    if (q < 0 || q >= r.n_qubits)
      throw std::invalid_argument("partial_trace: qubit index out of range");
  const int k = static_cast<int>(keep.size());
  BlochVector out;
  out.n_qubits = k;
  out.covector = r.covector;
  out.data.resize(dim4(k));
  for (std::size_t jp = 0; jp < out.data.size(); ++jp) {
    std::size_t flat = 0;
    for (int i = 0; i < k; ++i) flat += ((jp >> (2 * i)) & 3) << (2 * keep[i]);
    out.data[jp] = r.data[flat];
  }
  return out;
}

}  // namespace blochsim
