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

#include "blochsim/lindblad.hpp"

#include <cmath>
#include <stdexcept>

#include "blochsim/controlled.hpp"
#include "blochsim/oracle.hpp"

namespace blochsim {

namespace {

using Vec = Eigen::VectorXd;
using Map = Eigen::Map<Eigen::VectorXd>;
using ConstMap = Eigen::Map<const Eigen::VectorXd>;

// Adds a small superop acting on `targets` to the full-register matrix.
void embed_superop_add(Eigen::MatrixXd& big, const Eigen::MatrixXd& small,
                       std::span<const int> targets, int n_qubits) {
  const int m = static_cast<int>(targets.size());
  const std::size_t small_dim = dim4(m);
  if (small.rows() != static_cast<Eigen::Index>(small_dim))
    throw std::invalid_argument("embedded superop dimension mismatch");
  std::vector<bool> is_target(n_qubits, false);
  for (int t : targets) {
    if (t < 0 || t >= n_qubits) throw std::invalid_argument("jump target out of range");
    if (is_target[t]) throw std::invalid_argument("duplicate jump targets");
    is_target[t] = true;
  }
  std::vector<std::size_t> rest;
  for (int q = 0; q < n_qubits; ++q)
    if (!is_target[q]) rest.push_back(dim4(q));
  std::vector<std::size_t> place(small_dim);
  for (std::size_t g = 0; g < small_dim; ++g) {
    std::size_t out = 0;
    for (int i = 0; i < m; ++i) out += ((g >> (2 * i)) & 3) << (2 * targets[i]);
    place[g] = out;
  }
  const std::size_t sites = dim4(n_qubits) / small_dim;
  for (std::size_t s = 0; s < sites; ++s) {
    std::size_t base = 0, c = s;
    for (std::size_t stride : rest) {
      base += (c & 3) * stride;
      c >>= 2;
    }
    for (std::size_t r_ = 0; r_ < small_dim; ++r_)
      for (std::size_t c_ = 0; c_ < small_dim; ++c_)
        big(base + place[r_], base + place[c_]) += small(r_, c_);
  }
}

Eigen::Matrix2cd single_pauli(char axis) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  const std::complex<double> im{0.0, 1.0};
  switch (axis) {
    case 'I': break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -im, im, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("invalid Pauli axis");
  }
  return m;
}

std::size_t step_count(double t_final, double& dt) {
  if (dt <= 0.0) dt = t_final / 1000.0;
  const std::size_t steps = static_cast<std::size_t>(std::ceil(t_final / dt - 1e-9));
  dt = t_final / static_cast<double>(steps);
  return steps;
}

void check_grids(const EvolutionResult& a, const EvolutionResult& b) {
  if (a.times.size() != b.times.size())
    throw std::invalid_argument("trajectory grid mismatch: different sizes");
  for (std::size_t i = 0; i < a.times.size(); ++i)
    if (std::abs(a.times[i] - b.times[i]) > 1e-9 * (1.0 + std::abs(a.times[i])))
      throw std::invalid_argument("trajectory grid mismatch: different time points");
}

std::vector<double> trapezoid_weights(const std::vector<double>& times) {
  std::vector<double> w(times.size(), 0.0);
  for (std::size_t i = 0; i + 1 < times.size(); ++i) {
    const double h = times[i + 1] - times[i];
    w[i] += 0.5 * h;
    w[i + 1] += 0.5 * h;
  }
  return w;
}

}  // namespace

LindbladGenerator build_generator(const PauliObservable& hamiltonian,
                                  std::vector<JumpOperator> jumps, int max_qubits) {
  const int n = hamiltonian.n_qubits;
  if (n <= 0) throw std::invalid_argument("build_generator: invalid qubit count");
  if (n > max_qubits)
    throw std::invalid_argument("build_generator: dense generator capped at " +
                                std::to_string(max_qubits) + " qubits");
  const std::size_t dim = dim4(n);
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(dim, dim);

  for (const auto& term : hamiltonian.terms) {
    if (term.coefficient == 0.0) continue;
    std::vector<Eigen::MatrixXcd> factors(n);
    for (int q = 0; q < n; ++q) factors[q] = single_pauli(term.word[n - 1 - q]);
    const auto [sym, antisym] = sa_tensor_mpo(factors);
    l -= (2.0 * term.coefficient) * antisym;
  }

  for (const auto& jump : jumps) {
    const GateSuperop conj = conjugation_superop(jump.matrix);
    const GateSuperop sym = sym_superop(Eigen::MatrixXcd(jump.matrix.adjoint() * jump.matrix));
    embed_superop_add(l, Eigen::MatrixXd(conj.matrix - sym.matrix), jump.targets, n);
  }

  // the trace row vanishes analytically; clear the projection roundoff
  l.row(0).setZero();

  LindbladGenerator gen;
  gen.n_qubits = n;
  gen.matrix = std::move(l);
  gen.hamiltonian = hamiltonian;
  gen.jumps = std::move(jumps);
  return gen;
}

EvolutionResult evolve(const BlochVector& r0, const LindbladGenerator& gen, double t_final,
                       EvolveMethod method, double dt) {
  if (r0.n_qubits != gen.n_qubits)
    throw std::invalid_argument("evolve: state and generator qubit count mismatch");
  if (t_final < 0.0) throw std::invalid_argument("evolve: negative final time");

  EvolutionResult out;
  out.method = method;
  if (t_final == 0.0) {
    out.times = {0.0};
    out.states = {r0};
    out.dt = 0.0;
    return out;
  }

  if (method == EvolveMethod::Expm) {
    const Eigen::MatrixXd propagator = oracle::expm(Eigen::MatrixXd(gen.matrix * t_final));
    BlochVector rt = r0;
    ConstMap v0(r0.data.data(), static_cast<Eigen::Index>(r0.size()));
    Map vt(rt.data.data(), static_cast<Eigen::Index>(rt.size()));
    vt = propagator * v0;
    out.times = {0.0, t_final};
    out.states = {r0, std::move(rt)};
    out.dt = t_final;
    return out;
  }
  return evolve_rk4(
      r0, [&gen](double) -> Eigen::MatrixXd { return gen.matrix; }, t_final, dt);
}

EvolutionResult evolve_rk4(const BlochVector& r0, const TimeDependentGenerator& l_of_t,
                           double t_final, double dt) {
  if (t_final < 0.0) throw std::invalid_argument("evolve_rk4: negative final time");
  EvolutionResult out;
  out.method = EvolveMethod::Rk4;
  if (t_final == 0.0) {
    out.times = {0.0};
    out.states = {r0};
    return out;
  }
  const std::size_t steps = step_count(t_final, dt);
  out.dt = dt;
  out.times.reserve(steps + 1);
  out.states.reserve(steps + 1);
  out.times.push_back(0.0);
  out.states.push_back(r0);

  const Eigen::Index dim = static_cast<Eigen::Index>(r0.size());
  Vec y = ConstMap(r0.data.data(), dim);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) * dt;
    const Eigen::MatrixXd l0 = l_of_t(t);
    const Eigen::MatrixXd lh = l_of_t(t + 0.5 * dt);
    const Eigen::MatrixXd l1 = l_of_t(t + dt);
    const Vec k1 = l0 * y;
    const Vec k2 = lh * (y + 0.5 * dt * k1);
    const Vec k3 = lh * (y + 0.5 * dt * k2);
    const Vec k4 = l1 * (y + dt * k3);
    y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    BlochVector state = r0;
    Map(state.data.data(), dim) = y;
    out.times.push_back(static_cast<double>(i + 1) * dt);
    out.states.push_back(std::move(state));
  }
  out.times.back() = t_final;
  return out;
}

EvolutionResult adjoint_evolve(const BlochVector& rbar_final, const LindbladGenerator& gen,
                               double t_final, double dt) {
  return adjoint_evolve_rk4(
      rbar_final, [&gen](double) -> Eigen::MatrixXd { return gen.matrix; }, t_final, dt);
}

EvolutionResult adjoint_evolve_rk4(const BlochVector& rbar_final,
                                   const TimeDependentGenerator& l_of_t, double t_final,
                                   double dt) {
  if (t_final < 0.0) throw std::invalid_argument("adjoint_evolve: negative final time");
  EvolutionResult out;
  out.method = EvolveMethod::Rk4;
  BlochVector terminal = rbar_final;
  terminal.covector = true;
  if (t_final == 0.0) {
    out.times = {0.0};
    out.states = {std::move(terminal)};
    return out;
  }
  const std::size_t steps = step_count(t_final, dt);
  out.dt = dt;
  out.times.resize(steps + 1);
  out.states.resize(steps + 1);
  out.times.back() = t_final;
  out.states.back() = terminal;

  // substituting s = t_final - t turns d rbar/dt = -L^T rbar into
  // d rbar/ds = L(t_final - s)^T rbar, integrated forward in s
  const Eigen::Index dim = static_cast<Eigen::Index>(rbar_final.size());
  Vec y = ConstMap(rbar_final.data.data(), dim);
  for (std::size_t i = 0; i < steps; ++i) {
    const double s = static_cast<double>(i) * dt;
    const Eigen::MatrixXd l0 = l_of_t(t_final - s).transpose();
    const Eigen::MatrixXd lh = l_of_t(t_final - s - 0.5 * dt).transpose();
    const Eigen::MatrixXd l1 = l_of_t(t_final - s - dt).transpose();
    const Vec k1 = l0 * y;
    const Vec k2 = lh * (y + 0.5 * dt * k1);
    const Vec k3 = lh * (y + 0.5 * dt * k2);
    const Vec k4 = l1 * (y + dt * k3);
    y += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    BlochVector state = terminal;
    Map(state.data.data(), dim) = y;
    const std::size_t slot = steps - 1 - i;
    out.times[slot] = t_final - static_cast<double>(i + 1) * dt;
    out.states[slot] = std::move(state);
  }
  out.times.front() = 0.0;
  return out;
}

Eigen::MatrixXd grad_generator(const EvolutionResult& forward, const EvolutionResult& adjoint) {
  check_grids(forward, adjoint);
  const Eigen::Index dim = static_cast<Eigen::Index>(forward.states.front().size());
  Eigen::MatrixXd lbar = Eigen::MatrixXd::Zero(dim, dim);
  const auto w = trapezoid_weights(forward.times);
  for (std::size_t i = 0; i < forward.times.size(); ++i) {
    ConstMap r(forward.states[i].data.data(), dim);
    ConstMap rbar(adjoint.states[i].data.data(), dim);
    lbar.noalias() += w[i] * (rbar * r.transpose());
  }
  return lbar;
}

double grad_parameter(const EvolutionResult& forward, const EvolutionResult& adjoint,
                      const TimeDependentGenerator& dl_dtheta) {
  if (!dl_dtheta) throw std::invalid_argument("grad_parameter: missing derivative closure");
  check_grids(forward, adjoint);
  const Eigen::Index dim = static_cast<Eigen::Index>(forward.states.front().size());
  const auto w = trapezoid_weights(forward.times);
  double acc = 0.0;
  for (std::size_t i = 0; i < forward.times.size(); ++i) {
    ConstMap r(forward.states[i].data.data(), dim);
    ConstMap rbar(adjoint.states[i].data.data(), dim);
    acc += w[i] * rbar.dot(dl_dtheta(forward.times[i]) * r);
  }
  return acc;
}

}  // namespace blochsim
