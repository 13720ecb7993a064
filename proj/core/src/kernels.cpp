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

#include "blochsim/kernels.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace blochsim {

namespace {

void check_qubit(const BlochVector& r, int qubit) {
  if (qubit < 0 || qubit >= r.n_qubits)
    throw std::invalid_argument("qubit index " + std::to_string(qubit) + " out of range for " +
                                std::to_string(r.n_qubits) + " qubits");
}

void check_arity(const GateSuperop& k, int arity) {
  if (k.arity != arity)
    throw std::invalid_argument("superop arity " + std::to_string(k.arity) +
                                " does not match target count " + std::to_string(arity));
}

}  // namespace

void apply_1q_inplace(BlochVector& r, const GateSuperop& k, int qubit) {
  check_qubit(r, qubit);
  check_arity(k, 1);
  const std::size_t stride = dim4(qubit);
  const std::size_t blocks = r.size() / (4 * stride);
  double* data = r.data.data();
  std::array<double, 4> in, out;
  for (std::size_t b = 0; b < blocks; ++b) {
    double* block = data + b * 4 * stride;
    for (std::size_t i = 0; i < stride; ++i) {
      double* p = block + i;
      in = {p[0], p[stride], p[2 * stride], p[3 * stride]};
      out = {0.0, 0.0, 0.0, 0.0};
      for (const auto& e : k.nonzeros) out[e.row] += e.value * in[e.col];
      p[0] = out[0];
      p[stride] = out[1];
      p[2 * stride] = out[2];
      p[3 * stride] = out[3];
    }
  }
}

BlochVector apply_1q(const BlochVector& r, const GateSuperop& k, int qubit) {
  BlochVector out = r;
  apply_1q_inplace(out, k, qubit);
  return out;
}

void apply_2q_inplace(BlochVector& r, const GateSuperop& k, int qa, int qb) {
  check_qubit(r, qa);
  check_qubit(r, qb);
  check_arity(k, 2);
  if (qa == qb) throw std::invalid_argument("two-qubit superop requires distinct qubits");
  if (qa > qb) {
    // swap the superop axes instead of the (exponentially larger) state
    static constexpr int kSwap[2] = {1, 0};
    const GateSuperop swapped = permute_superop_axes(k, kSwap);
    apply_2q_inplace(r, swapped, qb, qa);
    return;
  }
  const std::size_t sa = dim4(qa);
  const std::size_t sb = dim4(qb);
  const std::size_t mid = sb / (4 * sa);
  const std::size_t blocks = r.size() / (4 * sb);
  double* data = r.data.data();
  std::array<double, 16> in, out;
  for (std::size_t o = 0; o < blocks; ++o) {
    for (std::size_t m = 0; m < mid; ++m) {
      double* block = data + o * 4 * sb + m * 4 * sa;
      for (std::size_t i = 0; i < sa; ++i) {
        double* p = block + i;
        for (int kb = 0; kb < 4; ++kb)
          for (int ka = 0; ka < 4; ++ka) in[4 * kb + ka] = p[kb * sb + ka * sa];
        out.fill(0.0);
        for (const auto& e : k.nonzeros) out[e.row] += e.value * in[e.col];
        for (int jb = 0; jb < 4; ++jb)
          for (int ja = 0; ja < 4; ++ja) p[jb * sb + ja * sa] = out[4 * jb + ja];
      }
    }
  }
}

BlochVector apply_2q(const BlochVector& r, const GateSuperop& k, int qa, int qb) {
  BlochVector out = r;
  apply_2q_inplace(out, k, qa, qb);
  return out;
}

void apply_mq_inplace(BlochVector& r, const GateSuperop& k, std::span<const int> targets) {
  const int m = static_cast<int>(targets.size());
  check_arity(k, m);
  for (int t : targets) check_qubit(r, t);
  std::vector<int> sorted(targets.begin(), targets.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate target qubits");
  if (m == 1) {
    apply_1q_inplace(r, k, targets[0]);
    return;
  }
  if (m == 2) {
    apply_2q_inplace(r, k, targets[0], targets[1]);
    return;
  }

  // Reorder superop axes to ascending qubit order.
  const GateSuperop* kp = &k;
  GateSuperop permuted;
  if (!std::equal(sorted.begin(), sorted.end(), targets.begin())) {
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i)
      perm[i] = static_cast<int>(std::find(targets.begin(), targets.end(), sorted[i]) - targets.begin());
    permuted = permute_superop_axes(k, perm);
    kp = &permuted;
  }

  const std::size_t gdim = dim4(m);
  std::vector<std::size_t> offset(gdim);
  for (std::size_t g = 0; g < gdim; ++g) {
    std::size_t off = 0;
    for (int i = 0; i < m; ++i) off += ((g >> (2 * i)) & 3) << (2 * sorted[i]);
    offset[g] = off;
  }
  // strides of the non-target axes
  std::vector<std::size_t> rest;
  rest.reserve(r.n_qubits - m);
  for (int q = 0; q < r.n_qubits; ++q)
    if (!std::binary_search(sorted.begin(), sorted.end(), q)) rest.push_back(dim4(q));

  const std::size_t sites = r.size() / gdim;
  std::vector<double> in(gdim), out(gdim);
  double* data = r.data.data();
  for (std::size_t s = 0; s < sites; ++s) {
    std::size_t base = 0, c = s;
    for (std::size_t stride : rest) {
      base += (c & 3) * stride;
      c >>= 2;
    }
    for (std::size_t g = 0; g < gdim; ++g) in[g] = data[base + offset[g]];
    std::fill(out.begin(), out.end(), 0.0);
    for (const auto& e : kp->nonzeros) out[e.row] += e.value * in[e.col];
    for (std::size_t g = 0; g < gdim; ++g) data[base + offset[g]] = out[g];
  }
}

BlochVector apply_mq(const BlochVector& r, const GateSuperop& k, std::span<const int> targets) {
  BlochVector out = r;
  apply_mq_inplace(out, k, targets);
  return out;
}

void apply_superop_inplace(BlochVector& r, const GateSuperop& k, std::span<const int> targets) {
  switch (targets.size()) {
    case 1: apply_1q_inplace(r, k, targets[0]); break;
    case 2: apply_2q_inplace(r, k, targets[0], targets[1]); break;
    default: apply_mq_inplace(r, k, targets); break;
  }
}

BlochVector apply_superop(const BlochVector& r, const GateSuperop& k, std::span<const int> targets) {
  BlochVector out = r;
  apply_superop_inplace(out, k, targets);
  return out;
}

GateSuperop permute_superop_axes(const GateSuperop& k, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != k.arity)
    throw std::invalid_argument("permutation length does not match superop arity");
  const std::size_t dim = dim4(k.arity);
  auto remap = [&](std::size_t idx) {
    std::size_t out = 0;
    for (int i = 0; i < k.arity; ++i) out |= ((idx >> (2 * perm[i])) & 3) << (2 * i);
    return out;
  };
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& e : k.nonzeros) m(remap(e.row), remap(e.col)) = e.value;
  GateSuperop out;
  out.arity = k.arity;
  out.kind = k.kind;
  out.matrix = std::move(m);
  out.nonzeros.reserve(k.nonzeros.size());
  for (const auto& e : k.nonzeros)
    out.nonzeros.push_back({static_cast<int>(remap(e.row)), static_cast<int>(remap(e.col)), e.value});
  return out;
}

}  // namespace blochsim
