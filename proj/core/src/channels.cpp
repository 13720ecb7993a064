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

#include "blochsim/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace blochsim {

namespace {

void check_probability(const std::string& name, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("channel '" + name + "' parameter must lie in [0, 1], got " +
                                std::to_string(p));
}

void check_completeness(std::span<const Eigen::MatrixXcd> ops, double tol) {
  if (ops.empty()) throw std::invalid_argument("channel has no Kraus operators");
  const Eigen::Index dim = ops[0].rows();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& e : ops) {
    if (e.rows() != dim || e.cols() != dim)
      throw std::invalid_argument("Kraus operators have inconsistent dimensions");
    sum += e.adjoint() * e;
  }
  const double err = (sum - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (err > tol)
    throw std::invalid_argument("Kraus completeness violated, max |sum E^dagger E - I| = " +
                                std::to_string(err));
}

int arity_from_dim(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim)
    throw std::invalid_argument("Kraus operator dimension is not a power of two");
  return n;
}

Eigen::Matrix2cd mat2(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                      std::complex<double> d) {
  Eigen::Matrix2cd m;
  m << a, b, c, d;
  return m;
}

}  // namespace

bool is_builtin_channel(const std::string& name) {
  return name == "bit_flip" || name == "phase_flip" || name == "depolarizing" ||
         name == "amplitude_damping" || name == "phase_damping";
}

KrausChannel builtin_channel(const std::string& name, double parameter) {
  check_probability(name, parameter);
  KrausChannel ch;
  ch.name = name;
  ch.parameter = parameter;
  ch.arity = 1;
  const double p = parameter;
  if (name == "bit_flip") {
    ch.operators = {std::sqrt(p) * Eigen::Matrix2cd::Identity(),
                    std::sqrt(1.0 - p) * mat2(0, 1, 1, 0)};
  } else if (name == "phase_flip") {
    ch.operators = {std::sqrt(p) * Eigen::Matrix2cd::Identity(),
                    std::sqrt(1.0 - p) * mat2(1, 0, 0, -1)};
  } else if (name == "depolarizing") {
    const std::complex<double> im{0.0, 1.0};
    ch.operators = {std::sqrt(1.0 - 0.75 * p) * Eigen::Matrix2cd::Identity(),
                    0.5 * std::sqrt(p) * mat2(0, 1, 1, 0),
                    0.5 * std::sqrt(p) * mat2(0, -im, im, 0),
                    0.5 * std::sqrt(p) * mat2(1, 0, 0, -1)};
  } else if (name == "amplitude_damping") {
    ch.operators = {mat2(1, 0, 0, std::sqrt(1.0 - p)), mat2(0, std::sqrt(p), 0, 0)};
  } else if (name == "phase_damping") {
    ch.operators = {mat2(1, 0, 0, std::sqrt(1.0 - p)), mat2(0, 0, 0, std::sqrt(p))};
  } else {
    throw std::invalid_argument("unknown builtin channel: " + name);
  }
  return ch;
}

KrausChannel custom_channel(std::vector<Eigen::MatrixXcd> operators, double tol) {
  check_completeness(operators, tol);
  KrausChannel ch;
  ch.name = "custom";
  ch.arity = arity_from_dim(operators[0].rows());
  ch.operators = std::move(operators);
  return ch;
}

GateSuperop kraus_superop(std::span<const Eigen::MatrixXcd> operators, double tol) {
  check_completeness(operators, tol);
  const int arity = arity_from_dim(operators[0].rows());
  const std::size_t dim = dim4(arity);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& e : operators) m += conjugation_superop(e).matrix;
  return make_superop(arity, SuperopKind::Channel, std::move(m));
}

GateSuperop channel_superop(const KrausChannel& ch, double tol) {
  if (!is_builtin_channel(ch.name))
    return kraus_superop(std::span<const Eigen::MatrixXcd>(ch.operators), tol);
  check_probability(ch.name, ch.parameter);
  const double p = ch.parameter;
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(4, 4);
  if (ch.name == "bit_flip") {
    m(2, 2) = m(3, 3) = 2.0 * p - 1.0;
  } else if (ch.name == "phase_flip") {
    m(1, 1) = m(2, 2) = 2.0 * p - 1.0;
  } else if (ch.name == "depolarizing") {
    m(1, 1) = m(2, 2) = m(3, 3) = 1.0 - p;
  } else if (ch.name == "amplitude_damping") {
    m(1, 1) = m(2, 2) = std::sqrt(1.0 - p);
    m(3, 3) = 1.0 - p;
    m(3, 0) = p;
  } else {  // phase_damping
    m(1, 1) = m(2, 2) = std::sqrt(1.0 - p);
  }
  return make_superop(1, SuperopKind::Channel, std::move(m));
}

GateSuperop builtin_channel_superop_derivative(const std::string& name, double parameter) {
  if (!is_builtin_channel(name)) throw std::invalid_argument("unknown builtin channel: " + name);
  check_probability(name, parameter);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  if (name == "bit_flip") {
    m(2, 2) = m(3, 3) = 2.0;
  } else if (name == "phase_flip") {
    m(1, 1) = m(2, 2) = 2.0;
  } else if (name == "depolarizing") {
    m(1, 1) = m(2, 2) = m(3, 3) = -1.0;
  } else if (name == "amplitude_damping") {
    if (parameter >= 1.0)
      throw std::invalid_argument("amplitude_damping derivative is singular at gamma = 1");
    const double d = -0.5 / std::sqrt(1.0 - parameter);
    m(1, 1) = m(2, 2) = d;
    m(3, 3) = -1.0;
    m(3, 0) = 1.0;
  } else {  // phase_damping
    if (parameter >= 1.0)
      throw std::invalid_argument("phase_damping derivative is singular at lambda = 1");
    const double d = -0.5 / std::sqrt(1.0 - parameter);
    m(1, 1) = m(2, 2) = d;
  }
  return make_superop(1, SuperopKind::Channel, std::move(m));
}

bool is_unital_builtin(const std::string& name) {
  return is_builtin_channel(name) && name != "amplitude_damping";
}

BlochVector apply_channel(const BlochVector& r, const KrausChannel& ch,
                          std::span<const int> targets) {
  return apply_superop(r, channel_superop(ch), targets);
}

Pipeline compose_channels(int n_qubits, const std::vector<PipelineOp>& ops) {
  Pipeline out;
  out.n_qubits = n_qubits;
  out.stages.reserve(ops.size());
  for (const auto& op : ops) {
    PipelineStage stage;
    if (const auto* gate = std::get_if<GateSpec>(&op)) {
      stage.superop = builtin_superop(*gate);
      stage.targets = gate->targets;
      stage.requires_cache = false;
    } else {
      const auto& ch = std::get<ChannelOp>(op);
      stage.superop = channel_superop(ch.channel);
      stage.targets = ch.targets;
      stage.requires_cache = true;
    }
    if (static_cast<int>(stage.targets.size()) != stage.superop.arity)
      throw std::invalid_argument("pipeline stage target count does not match operator arity");
    for (int t : stage.targets)
      if (t < 0 || t >= n_qubits) throw std::invalid_argument("pipeline target out of range");
    out.stages.push_back(std::move(stage));
  }
  return out;
}

BlochVector apply_pipeline(const Pipeline& pipeline, const BlochVector& r) {
  if (r.n_qubits != pipeline.n_qubits)
    throw std::invalid_argument("pipeline qubit count does not match state");
  BlochVector out = r;
  for (const auto& stage : pipeline.stages)
    apply_superop_inplace(out, stage.superop, stage.targets);
  return out;
}

}  // namespace blochsim
