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

#include "blochsim/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "blochsim/controlled.hpp"
#include "blochsim/kernels.hpp"
#include "blochsim/oracle.hpp"

namespace blochsim::bench {

namespace {

using Clock = std::chrono::steady_clock;

double time_once(const std::function<void()>& fn, long inner) {
  const auto start = Clock::now();
  for (long i = 0; i < inner; ++i) fn();
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::nano>(stop - start).count() /
         static_cast<double>(inner);
}

double median_ns(const std::function<void()>& fn, int reps, int warmup) {
  for (int i = 0; i < warmup; ++i) fn();
  // pick an inner count that makes one sample ~0.2 ms
  const double est = std::max(1.0, time_once(fn, 1));
  const long inner = std::clamp<long>(static_cast<long>(2e5 / est), 1, 10'000'000);
  std::vector<double> samples(reps);
  for (int i = 0; i < reps; ++i) samples[i] = time_once(fn, inner);
  std::nth_element(samples.begin(), samples.begin() + reps / 2, samples.end());
  return samples[reps / 2];
}

// Random product state and its dense counterpart, built factor by factor.
struct BenchState {
  BlochVector bloch;
  Eigen::MatrixXcd dense;
};

BenchState random_state(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<std::array<double, 4>> factors(n);
  Eigen::MatrixXcd dense = Eigen::MatrixXcd::Identity(1, 1);
  const std::complex<double> im{0.0, 1.0};
  for (int l = n - 1; l >= 0; --l) {
    double x, y, z;
    do {
      x = dist(rng);
      y = dist(rng);
      z = dist(rng);
    } while (x * x + y * y + z * z > 1.0);
    factors[l] = {1.0, x, y, z};
    Eigen::Matrix2cd rho1;
    rho1 << 0.5 * (1.0 + z), 0.5 * (x - im * y), 0.5 * (x + im * y), 0.5 * (1.0 - z);
    Eigen::MatrixXcd next(dense.rows() * 2, dense.cols() * 2);
    next.block(0, 0, dense.rows(), dense.cols()) = rho1(0, 0) * dense;
    next.block(0, dense.cols(), dense.rows(), dense.cols()) = rho1(0, 1) * dense;
    next.block(dense.rows(), 0, dense.rows(), dense.cols()) = rho1(1, 0) * dense;
    next.block(dense.rows(), dense.cols(), dense.rows(), dense.cols()) = rho1(1, 1) * dense;
    dense = std::move(next);
  }
  return {BlochVector::product_state(factors), std::move(dense)};
}

struct GateSetup {
  std::vector<int> targets;
  std::function<void()> bloch_apply;
  std::function<void()> dense_apply;
};

}  // namespace

std::vector<BenchRow> run_kernel_bench(const KernelBenchConfig& config) {
  std::vector<BenchRow> rows;
  std::mt19937_64 rng(config.seed);
  const double theta = 0.37;

  for (int n : config.n_values) {
    BenchState state = random_state(n, rng);
    for (const auto& name : config.gates) {
      auto bloch = std::make_shared<BlochVector>(state.bloch);
      auto dense = std::make_shared<Eigen::MatrixXcd>(state.dense);
      GateSetup setup;
      const int mid = n / 2;
      if (name == "CNOT") {
        const int control = mid + 1 < n ? mid + 1 : mid - 1;
        GateSpec x{"X", {}, {mid}, {}};
        auto spec = std::make_shared<ControlledGateSpec>(make_controlled({control}, x));
        setup.bloch_apply = [bloch, spec] { *bloch = apply_controlled(*bloch, *spec); };
        const Eigen::MatrixXcd cu =
            oracle::controlled_matrix(1, dense_gate_matrix(GateSpec{"X", {}, {}, {}}));
        const std::vector<int> targets{mid, control};
        setup.dense_apply = [dense, cu, targets] {
          oracle::apply_gate_dense_inplace(*dense, cu, targets);
        };
      } else {
        GateSpec spec{name, {}, {}, {}};
        const int np = builtin_param_count(name);
        if (np == 1) spec.params = {theta};
        if (np == 4) spec.params = {theta, 1.0, 0.0, 0.0};
        const int arity = builtin_arity(name);
        std::vector<int> targets{mid};
        if (arity == 2) targets = {mid, mid + 1 < n ? mid + 1 : mid - 1};
        auto k = std::make_shared<GateSuperop>(builtin_superop(spec));
        setup.bloch_apply = [bloch, k, targets] { apply_superop_inplace(*bloch, *k, targets); };
        const Eigen::MatrixXcd u = dense_gate_matrix(spec);
        setup.dense_apply = [dense, u, targets] {
          oracle::apply_gate_dense_inplace(*dense, u, targets);
        };
      }
      rows.push_back(
          {name, n, "bloch", median_ns(setup.bloch_apply, config.reps, config.warmup),
           config.reps});
      rows.push_back(
          {name, n, "dense", median_ns(setup.dense_apply, config.reps, config.warmup),
           config.reps});
    }
  }
  return rows;
}

std::string bench_rows_to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "gate,n,impl,median_ns,reps\n";
  out.precision(17);
  for (const auto& row : rows)
    out << row.gate << ',' << row.n_qubits << ',' << row.impl << ',' << row.median_ns << ','
        << row.reps << '\n';
  return out.str();
}

}  // namespace blochsim::bench
