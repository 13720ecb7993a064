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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "blochsim/circuit.hpp"

namespace blochsim {

/// Which half of the brick-wall bonds a layer applies first: the bonds
/// starting at even sites (0-1, 2-3, ...) or at odd sites (1-2, 3-4, ...).
enum class BrickwallOrder { LeadingBondsFirst, TrailingBondsFirst };

/// Layered variational ansatz: a latent product density (n angles theta)
/// conjugated by `layers` circuit layers, each consisting of a three-angle
/// rotation on every site followed by three-angle entanglers on the chain
/// bonds in brick-wall order, open boundary conditions.
///
/// The flat parameter vector is [theta (n) | per layer: phi (3 per site),
/// eta (3 per bond)]; `circuit_param_names` lists the circuit parameters in
/// that flat order.
struct VqtAnsatz {
  int n_qubits = 0;
  int layers = 3;
  Circuit circuit;
  std::vector<std::string> circuit_param_names;

  int parameter_count() const {
    return n_qubits + static_cast<int>(circuit_param_names.size());
  }
};

VqtAnsatz make_vqt_ansatz(int n_qubits, int layers = 3,
                          BrickwallOrder order = BrickwallOrder::LeadingBondsFirst);

/// Single-site rotation exp(i (p1 X + p2 Y + p3 Z)) with analytic parameter
/// derivatives (series-guarded at zero rotation).
CustomGate xyz_rotation_gate();

/// Bloch vector of the latent density: per-qubit diagonal factors
/// diag((1 + cos t)/2, (1 - cos t)/2), i.e. Bloch factor (1, 0, 0, cos t).
BlochVector latent_bloch(std::span<const double> theta);

/// Von Neumann entropy of the latent density (invariant under the circuit):
/// sum of binary entropies of (1 + cos t)/2, in nats.
double latent_entropy(std::span<const double> theta);
std::vector<double> latent_entropy_gradient(std::span<const double> theta);

struct ThermalTarget {
  PauliObservable hamiltonian;
  double beta = 0.0;
  BlochVector sigma;
  DenseHermitian sigma_dense;
  double log_z = 0.0;
};

/// Gibbs state e^{-beta H} / Z via dense eigendecomposition, with the
/// max-shift trick against overflow; log Z is retained.
ThermalTarget thermal_target(const PauliObservable& hamiltonian, double beta);

struct LossValue {
  double value = 0.0;
  std::vector<double> gradient;
};

/// Free-energy style cost -S(rho) + beta Tr[H rho] with its full analytic
/// gradient. The entropy term uses the latent closed form; the energy term
/// backpropagates through the ansatz circuit. Mutates the ansatz parameter
/// table, so each concurrent run must own its ansatz copy.
LossValue vqt_loss(VqtAnsatz& ansatz, std::span<const double> flat_params,
                   const ThermalTarget& target);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 via dense
/// eigendecompositions. Eigenvalues below -1e-9 raise; small negatives are
/// clipped.
double fidelity(const BlochVector& r1, const BlochVector& r2);

/// Trace distance (1/2) Tr |rho - sigma|.
double trace_distance(const BlochVector& r1, const BlochVector& r2);

struct AdamaxOptions {
  double learning_rate = 0.005;
  int iterations = 500;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct OptimizeResult {
  std::vector<double> params;
  std::vector<double> loss_trace;  // one entry per iteration
};

using LossFunction = std::function<LossValue(std::span<const double>)>;

/// AdaMax with bias-corrected first moment. Throws on non-finite loss.
OptimizeResult adamax_optimize(const LossFunction& loss, std::vector<double> init,
                               const AdamaxOptions& options);

/// -J sum_bonds S.S + sum_j (g S^x_j + h S^z_j) on an open chain, S = sigma/2.
PauliObservable heisenberg_1d(int n_qubits, double coupling, double field_x, double field_z);

/// sum_h J_h S.S + sum_v J_v S.S on a rows x cols grid, row-major qubit order.
PauliObservable heisenberg_2d(int rows, int cols, double coupling_h, double coupling_v);

struct VqtExperimentConfig {
  PauliObservable hamiltonian;
  int layers = 3;
  std::vector<double> betas;
  int num_seeds = 10;
  std::uint64_t base_seed = 1;
  AdamaxOptions optimizer;
  int threads = 1;
  bool keep_traces = true;
};

struct VqtRunResult {
  double beta = 0.0;
  std::uint64_t seed = 0;
  double final_loss = 0.0;
  double fidelity = 0.0;
  double trace_distance = 0.0;
  double log_z = 0.0;
  std::vector<double> loss_trace;
};

/// Initial parameters for one run: theta uniform in [-pi, pi], circuit
/// angles uniform in [-0.1, 0.1] (near-identity circuit).
std::vector<double> random_vqt_init(const VqtAnsatz& ansatz, std::uint64_t seed);

/// Per-run seed derived from (base_seed, beta index, seed index).
std::uint64_t vqt_run_seed(std::uint64_t base_seed, std::size_t beta_index,
                           std::size_t seed_index);

/// Full (beta x seed) sweep; independent runs execute in parallel when
/// threads > 1, results are ordered by (beta index, seed index) regardless.
std::vector<VqtRunResult> run_vqt_experiment(const VqtExperimentConfig& config);

}  // namespace blochsim
