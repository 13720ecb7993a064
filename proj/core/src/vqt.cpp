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

#include "blochsim/vqt.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include <Eigen/Eigenvalues>

namespace blochsim {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

Eigen::Matrix2cd sigma_axis(int axis) {
  Eigen::Matrix2cd m;
  switch (axis) {
    case 0: m << 0, 1, 1, 0; break;
    case 1: m << 0, -kI, kI, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

// sin(r)/r and (cos(r) - sinc(r))/r^2 with series fallbacks near zero.
double sinc(double r) {
  if (std::abs(r) < 1e-4) {
    const double r2 = r * r;
    return 1.0 - r2 / 6.0 + r2 * r2 / 120.0;
  }
  return std::sin(r) / r;
}

double sinc_slope(double r) {
  if (std::abs(r) < 1e-4) {
    const double r2 = r * r;
    return -1.0 / 3.0 + r2 / 30.0 - r2 * r2 / 840.0;
  }
  return (std::cos(r) - std::sin(r) / r) / (r * r);
}

double binary_entropy(double p) {
  double acc = 0.0;
  if (p > 0.0) acc -= p * std::log(p);
  if (p < 1.0) acc -= (1.0 - p) * std::log(1.0 - p);
  return acc;
}

std::string word_with(int n_qubits, std::initializer_list<std::pair<int, char>> axes) {
  std::string word(n_qubits, 'I');
  for (auto [q, a] : axes) word[n_qubits - 1 - q] = a;
  return word;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

CustomGate xyz_rotation_gate() {
  CustomGate gate;
  gate.arity = 1;
  gate.param_count = 3;
  gate.unitary = [](std::span<const double> p) -> Eigen::MatrixXcd {
    const double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    Eigen::Matrix2cd m = std::cos(r) * Eigen::Matrix2cd::Identity();
    const double sc = sinc(r);
    for (int a = 0; a < 3; ++a) m += kI * (sc * p[a]) * sigma_axis(a);
    return m;
  };
  gate.derivative = [](std::span<const double> p, int slot) -> Eigen::MatrixXcd {
    const double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    const double sc = sinc(r);
    const double g = sinc_slope(r);
    Eigen::Matrix2cd axes = Eigen::Matrix2cd::Zero();
    for (int a = 0; a < 3; ++a) axes += p[a] * sigma_axis(a);
    return -sc * p[slot] * Eigen::Matrix2cd::Identity() +
           kI * (g * p[slot] * axes + sc * sigma_axis(slot));
  };
  return gate;
}

VqtAnsatz make_vqt_ansatz(int n_qubits, int layers, BrickwallOrder order) {
  if (n_qubits < 1) throw std::invalid_argument("make_vqt_ansatz: need at least one qubit");
  if (layers < 0) throw std::invalid_argument("make_vqt_ansatz: negative layer count");
  VqtAnsatz ansatz;
  ansatz.n_qubits = n_qubits;
  ansatz.layers = layers;
  ansatz.circuit.n_qubits = n_qubits;

  const CustomGate rotation = xyz_rotation_gate();
  static const char* kEntanglers[3] = {"Rxx", "Ryy", "Rzz"};

  for (int layer = 0; layer < layers; ++layer) {
    const std::string prefix = "L" + std::to_string(layer) + "_";
    for (int site = 0; site < n_qubits; ++site) {
      std::vector<ParamBinding> bindings;
      for (int a = 0; a < 3; ++a) {
        std::string name = prefix + "phi_" + std::to_string(site) + "_" + std::to_string(a + 1);
        bindings.push_back({a, name, 1.0});
        ansatz.circuit_param_names.push_back(name);
        ansatz.circuit.parameters[name] = 0.0;
      }
      ansatz.circuit.stages.push_back(
          custom_stage(rotation, {site}, {0.0, 0.0, 0.0}, std::move(bindings)));
    }
    // eta parameters are laid out bond-major regardless of the brick-wall
    // application order
    for (int bond = 0; bond + 1 < n_qubits; ++bond)
      for (int a = 0; a < 3; ++a)
        ansatz.circuit_param_names.push_back(prefix + "eta_" + std::to_string(bond) + "_" +
                                             std::to_string(a + 1));
    std::vector<int> bond_order;
    for (int bond = 0; bond + 1 < n_qubits; bond += 2) bond_order.push_back(bond);
    for (int bond = 1; bond + 1 < n_qubits; bond += 2) bond_order.push_back(bond);
    if (order == BrickwallOrder::TrailingBondsFirst)
      std::rotate(bond_order.begin(),
                  bond_order.begin() + (bond_order.size() + 1) / 2, bond_order.end());
    for (int bond : bond_order) {
      for (int a = 0; a < 3; ++a) {
        const std::string name =
            prefix + "eta_" + std::to_string(bond) + "_" + std::to_string(a + 1);
        ansatz.circuit.parameters[name] = 0.0;
        // exp(i eta P P) = R_pp(-2 eta)
        ansatz.circuit.stages.push_back(gate_stage(
            GateSpec{kEntanglers[a], {0.0}, {bond, bond + 1}, {}}, {{0, name, -2.0}}));
      }
    }
  }
  return ansatz;
}

BlochVector latent_bloch(std::span<const double> theta) {
  if (theta.empty()) throw std::invalid_argument("latent_bloch: empty angle list");
  std::vector<std::array<double, 4>> factors(theta.size());
  for (std::size_t j = 0; j < theta.size(); ++j)
    factors[j] = {1.0, 0.0, 0.0, std::cos(theta[j])};
  return BlochVector::product_state(factors);
}

double latent_entropy(std::span<const double> theta) {
  double acc = 0.0;
  for (double t : theta) acc += binary_entropy(0.5 * (1.0 + std::cos(t)));
  return acc;
}

std::vector<double> latent_entropy_gradient(std::span<const double> theta) {
  std::vector<double> grad(theta.size(), 0.0);
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const double s = std::sin(theta[j]);
    if (s == 0.0) continue;  // stationary at the poles
    double p = 0.5 * (1.0 + std::cos(theta[j]));
    p = std::clamp(p, 1e-18, 1.0 - 1e-18);
    // dS/dtheta = h'(p) dp/dtheta, h'(p) = log((1-p)/p)
    grad[j] = std::log((1.0 - p) / p) * (-0.5 * s);
  }
  return grad;
}

ThermalTarget thermal_target(const PauliObservable& hamiltonian, double beta) {
  if (beta < 0.0) throw std::invalid_argument("thermal_target: beta must be non-negative");
  const Eigen::MatrixXcd h = dense_observable(hamiltonian);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double shift = beta * ev.minCoeff();
  Eigen::VectorXd weights(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) weights(i) = std::exp(-(beta * ev(i) - shift));
  const double z_shifted = weights.sum();
  weights /= z_shifted;

  ThermalTarget target;
  target.hamiltonian = hamiltonian;
  target.beta = beta;
  target.log_z = std::log(z_shifted) - shift;
  Eigen::MatrixXcd sigma =
      es.eigenvectors() * weights.asDiagonal() * es.eigenvectors().adjoint();
  target.sigma_dense = DenseHermitian{hamiltonian.n_qubits, std::move(sigma)};
  target.sigma = bloch_from_density(target.sigma_dense);
  return target;
}

LossValue vqt_loss(VqtAnsatz& ansatz, std::span<const double> flat_params,
                   const ThermalTarget& target) {
  const int n = ansatz.n_qubits;
  if (static_cast<int>(flat_params.size()) != ansatz.parameter_count())
    throw std::invalid_argument("vqt_loss: flat parameter vector has wrong length");
  const std::span<const double> theta = flat_params.subspan(0, n);
  for (std::size_t i = 0; i < ansatz.circuit_param_names.size(); ++i)
    ansatz.circuit.parameters[ansatz.circuit_param_names[i]] = flat_params[n + i];

  const BlochVector r_in = latent_bloch(theta);
  const ForwardRun run = forward(ansatz.circuit, r_in);
  const double energy = expectation(run.output, target.hamiltonian);
  const double entropy = latent_entropy(theta);

  LossValue out;
  out.value = -entropy + target.beta * energy;
  out.gradient.assign(flat_params.size(), 0.0);

  BlochVector cotangent = cost_expectation_cotangent(target.hamiltonian);
  for (double& v : cotangent.data) v *= target.beta;
  const GradientReport report = backward(ansatz.circuit, run, cotangent);

  // theta: analytic entropy term plus the energy cotangent folded through
  // the latent product structure
  const std::vector<double> ds = latent_entropy_gradient(theta);
  for (int j = 0; j < n; ++j) {
    std::vector<std::array<double, 4>> factors(n);
    for (int l = 0; l < n; ++l) factors[l] = {1.0, 0.0, 0.0, std::cos(theta[l])};
    factors[j] = {0.0, 0.0, 0.0, -std::sin(theta[j])};
    const BlochVector dr = BlochVector::product_state(factors);
    double acc = 0.0;
    for (std::size_t i = 0; i < dr.size(); ++i)
      acc += report.input_cotangent.data[i] * dr.data[i];
    out.gradient[j] = -ds[j] + acc;
  }
  for (std::size_t i = 0; i < ansatz.circuit_param_names.size(); ++i)
    out.gradient[n + i] = report.parameter_gradients.at(ansatz.circuit_param_names[i]);
  return out;
}

double fidelity(const BlochVector& r1, const BlochVector& r2) {
  const DenseHermitian rho = density_from_bloch(r1);
  const DenseHermitian sigma = density_from_bloch(r2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -1e-9) throw std::invalid_argument("fidelity: state is not positive semidefinite");
    if (ev(i) < 0.0) {
      if (ev(i) < -1e-12)
        std::cerr << "fidelity: clipping small negative eigenvalue " << ev(i) << "\n";
      ev(i) = 0.0;
    }
  }
  const Eigen::MatrixXcd sqrt_rho =
      es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().adjoint();
  const Eigen::MatrixXcd inner = sqrt_rho * sigma.matrix * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es2(inner);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < es2.eigenvalues().size(); ++i)
    acc += std::sqrt(std::max(0.0, es2.eigenvalues()(i)));
  return acc * acc;
}

double trace_distance(const BlochVector& r1, const BlochVector& r2) {
  const DenseHermitian rho = density_from_bloch(r1);
  const DenseHermitian sigma = density_from_bloch(r2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix - sigma.matrix);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

OptimizeResult adamax_optimize(const LossFunction& loss, std::vector<double> init,
                               const AdamaxOptions& options) {
  const std::size_t dim = init.size();
  std::vector<double> m(dim, 0.0), u(dim, 0.0);
  OptimizeResult result;
  result.params = std::move(init);
  result.loss_trace.reserve(options.iterations);
  for (int t = 1; t <= options.iterations; ++t) {
    const LossValue lv = loss(result.params);
    if (!std::isfinite(lv.value))
      throw std::runtime_error("adamax_optimize: non-finite loss at iteration " +
                               std::to_string(t));
    result.loss_trace.push_back(lv.value);
    const double correction = 1.0 - std::pow(options.beta1, t);
    for (std::size_t i = 0; i < dim; ++i) {
      const double g = lv.gradient[i];
      if (!std::isfinite(g))
        throw std::runtime_error("adamax_optimize: non-finite gradient at iteration " +
                                 std::to_string(t));
      m[i] = options.beta1 * m[i] + (1.0 - options.beta1) * g;
      u[i] = std::max(options.beta2 * u[i], std::abs(g));
      result.params[i] -=
          options.learning_rate / correction * m[i] / (u[i] + options.epsilon);
    }
  }
  return result;
}

PauliObservable heisenberg_1d(int n_qubits, double coupling, double field_x, double field_z) {
  if (n_qubits < 2) throw std::invalid_argument("heisenberg_1d: need at least two sites");
  std::vector<PauliTerm> terms;
  const double bond = -coupling / 4.0;  // S = sigma/2 on each end of the bond
  for (int j = 0; j + 1 < n_qubits; ++j)
    for (char axis : {'X', 'Y', 'Z'})
      terms.push_back({bond, word_with(n_qubits, {{j, axis}, {j + 1, axis}})});
  for (int j = 0; j < n_qubits; ++j) {
    if (field_x != 0.0) terms.push_back({field_x / 2.0, word_with(n_qubits, {{j, 'X'}})});
    if (field_z != 0.0) terms.push_back({field_z / 2.0, word_with(n_qubits, {{j, 'Z'}})});
  }
  return make_observable(n_qubits, std::move(terms));
}

PauliObservable heisenberg_2d(int rows, int cols, double coupling_h, double coupling_v) {
  if (rows < 1 || cols < 1 || rows * cols < 2)
    throw std::invalid_argument("heisenberg_2d: grid must contain at least two sites");
  const int n = rows * cols;
  auto site = [cols](int r, int c) { return r * cols + c; };
  std::vector<PauliTerm> terms;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c)
      for (char axis : {'X', 'Y', 'Z'})
        terms.push_back(
            {coupling_h / 4.0, word_with(n, {{site(r, c), axis}, {site(r, c + 1), axis}})});
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c)
      for (char axis : {'X', 'Y', 'Z'})
        terms.push_back(
            {coupling_v / 4.0, word_with(n, {{site(r, c), axis}, {site(r + 1, c), axis}})});
  return make_observable(n, std::move(terms));
}

std::vector<double> random_vqt_init(const VqtAnsatz& ansatz, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> theta_dist(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> angle_dist(-0.1, 0.1);
  std::vector<double> params(ansatz.parameter_count());
  for (int j = 0; j < ansatz.n_qubits; ++j) params[j] = theta_dist(rng);
  for (std::size_t i = ansatz.n_qubits; i < params.size(); ++i) params[i] = angle_dist(rng);
  return params;
}

std::uint64_t vqt_run_seed(std::uint64_t base_seed, std::size_t beta_index,
                           std::size_t seed_index) {
  return splitmix64(splitmix64(base_seed + 0x1000003ULL * beta_index) + seed_index);
}

std::vector<VqtRunResult> run_vqt_experiment(const VqtExperimentConfig& config) {
  const VqtAnsatz prototype = make_vqt_ansatz(config.hamiltonian.n_qubits, config.layers);
  std::vector<ThermalTarget> targets;
  targets.reserve(config.betas.size());
  for (double beta : config.betas) targets.push_back(thermal_target(config.hamiltonian, beta));

  struct Job {
    std::size_t beta_index;
    std::size_t seed_index;
  };
  std::vector<Job> jobs;
  for (std::size_t b = 0; b < config.betas.size(); ++b)
    for (std::size_t s = 0; s < static_cast<std::size_t>(config.num_seeds); ++s)
      jobs.push_back({b, s});
  std::vector<VqtRunResult> results(jobs.size());

  auto run_one = [&](const Job& job, VqtRunResult& slot) {
    VqtAnsatz ansatz = prototype;
    const ThermalTarget& target = targets[job.beta_index];
    const std::uint64_t seed = vqt_run_seed(config.base_seed, job.beta_index, job.seed_index);
    auto loss = [&](std::span<const double> p) { return vqt_loss(ansatz, p, target); };
    OptimizeResult opt = adamax_optimize(loss, random_vqt_init(ansatz, seed), config.optimizer);

    slot.beta = config.betas[job.beta_index];
    slot.seed = seed;
    slot.final_loss = vqt_loss(ansatz, opt.params, target).value;
    slot.log_z = target.log_z;
    const BlochVector r_final =
        forward(ansatz.circuit,
                latent_bloch(std::span<const double>(opt.params).subspan(0, ansatz.n_qubits)))
            .output;
    slot.fidelity = fidelity(r_final, target.sigma);
    slot.trace_distance = trace_distance(r_final, target.sigma);
    if (config.keep_traces) slot.loss_trace = std::move(opt.loss_trace);
  };

  const int threads = std::max(1, config.threads);
  if (threads == 1 || jobs.size() <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_one(jobs[i], results[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min<std::size_t>(threads, jobs.size());
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
          run_one(jobs[i], results[i]);
      });
    }
    for (auto& t : pool) t.join();
  }
  return results;
}

}  // namespace blochsim
