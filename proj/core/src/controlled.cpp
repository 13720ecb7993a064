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

#include "blochsim/controlled.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace blochsim {

namespace {

GateSpec proj1_spec() { return GateSpec{"Proj1", {}, {}, {}}; }

const GateSuperop& proj1_conjugation() {
  static const GateSuperop k = builtin_superop(proj1_spec());
  return k;
}

const GateSuperop& proj1_sym() {
  static const GateSuperop k = builtin_sym_superop(proj1_spec());
  return k;
}

const GateSuperop& proj1_antisym() {
  static const GateSuperop k = builtin_antisym_superop(proj1_spec());
  return k;
}

Eigen::MatrixXd kron_real(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

std::vector<SATerm> enumerate_sa_terms(int num_controls) {
  if (num_controls < 1) throw std::invalid_argument("enumerate_sa_terms: need k >= 1");
  if (num_controls > 31) throw std::invalid_argument("enumerate_sa_terms: k too large");
  std::vector<SATerm> terms;
  terms.reserve(std::size_t{1} << num_controls);
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << num_controls); ++bits) {
    SATerm t;
    t.bits = bits;
    const int total = std::popcount(bits);
    t.sign = ((total + 1) / 2) % 2 ? -1 : 1;  // (-1)^ceil(total/2)
    t.target_kind = total % 2;
    terms.push_back(t);
  }
  return terms;
}

ControlledGateSpec make_controlled(std::vector<int> controls, GateSpec gate) {
  if (controls.empty()) throw std::invalid_argument("controlled gate needs at least one control");
  std::vector<int> all = controls;
  all.insert(all.end(), gate.targets.begin(), gate.targets.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("controls and gate targets must be disjoint");
  if (gate.name != "Custom" && !builtin_is_unitary(gate.name))
    throw std::invalid_argument("controlled target must be a unitary gate");

  ControlledGateSpec spec;
  spec.gate = std::move(gate);
  spec.controls = std::move(controls);
  spec.target_superop = builtin_superop(spec.gate);
  spec.target_sym = builtin_sym_superop(spec.gate);
  spec.target_antisym = builtin_antisym_superop(spec.gate);

  const Eigen::Index dim = spec.target_superop.matrix.rows();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
  spec.term_target_sym =
      make_superop(spec.target_superop.arity, SuperopKind::Sym, spec.target_sym.matrix - id);
  spec.final_target = make_superop(spec.target_superop.arity, SuperopKind::Channel,
                                   spec.target_superop.matrix - 2.0 * spec.target_sym.matrix + id);
  return spec;
}

BlochVector apply_controlled(const BlochVector& r, const ControlledGateSpec& spec) {
  const int k = static_cast<int>(spec.controls.size());
  for (int c : spec.controls)
    if (c < 0 || c >= r.n_qubits) throw std::invalid_argument("control qubit out of range");

  BlochVector acc = r;
  BlochVector work = r;

  // middle term of the expansion: 2 sum over the 2^k sign/kind patterns
  for (const SATerm& term : enumerate_sa_terms(k)) {
    work.data = r.data;
    for (int i = 0; i < k; ++i)
      apply_1q_inplace(work, term.control_kind(i) ? proj1_antisym() : proj1_sym(),
                       spec.controls[i]);
    apply_superop_inplace(work, term.target_kind ? spec.target_antisym : spec.term_target_sym,
                          spec.gate.targets);
    const double w = 2.0 * term.sign;
    for (std::size_t i = 0; i < acc.size(); ++i) acc.data[i] += w * work.data[i];
  }

  // last term: |1><1| conjugations on the controls, (U - 2 S_U + id) on the
  // target; the factors act on different qubits and commute
  work.data = r.data;
  apply_superop_inplace(work, spec.final_target, spec.gate.targets);
  for (int c : spec.controls) apply_1q_inplace(work, proj1_conjugation(), c);
  for (std::size_t i = 0; i < acc.size(); ++i) acc.data[i] += work.data[i];

  return acc;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> sa_tensor_mpo(
    const std::vector<Eigen::MatrixXcd>& factors) {
  if (factors.empty()) throw std::invalid_argument("sa_tensor_mpo: empty factor list");
  Eigen::MatrixXd s = sym_superop(factors[0]).matrix;
  Eigen::MatrixXd a = antisym_superop(factors[0]).matrix;
  for (std::size_t j = 1; j < factors.size(); ++j) {
    const Eigen::MatrixXd sj = sym_superop(factors[j]).matrix;
    const Eigen::MatrixXd aj = antisym_superop(factors[j]).matrix;
    // 2x2 block step of the bond-dimension-2 recursion; factor j is the
    // slower Kronecker index since it sits on a higher qubit slot
    Eigen::MatrixXd s_next = kron_real(sj, s) - kron_real(aj, a);
    Eigen::MatrixXd a_next = kron_real(sj, a) + kron_real(aj, s);
    s = std::move(s_next);
    a = std::move(a_next);
  }
  return {std::move(s), std::move(a)};
}

}  // namespace blochsim
