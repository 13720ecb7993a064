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

#include <benchmark/benchmark.h>

#include <random>

#include "blochsim/controlled.hpp"
#include "blochsim/kernels.hpp"
#include "blochsim/oracle.hpp"

using namespace blochsim;

namespace {

BlochVector bench_state(int n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-0.5, 0.5);
  std::vector<std::array<double, 4>> factors(n);
  for (auto& f : factors) f = {1.0, dist(rng), dist(rng), dist(rng)};
  return BlochVector::product_state(factors);
}

Eigen::MatrixXcd bench_density(int n) { return density_from_bloch(bench_state(n)).matrix; }

void bm_bloch_1q(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BlochVector r = bench_state(n);
  const GateSuperop k = builtin_superop({"Rz", {0.37}, {}, {}});
  const int target = n / 2;
  for (auto _ : state) {
    apply_1q_inplace(r, k, target);
    benchmark::DoNotOptimize(r.data.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(r.size()));
}

void bm_dense_1q(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Eigen::MatrixXcd rho = bench_density(n);
  const Eigen::MatrixXcd u = dense_gate_matrix({"Rz", {0.37}, {}, {}});
  const std::vector<int> targets{n / 2};
  for (auto _ : state) {
    oracle::apply_gate_dense_inplace(rho, u, targets);
    benchmark::DoNotOptimize(rho.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rho.size()));
}

void bm_bloch_2q(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BlochVector r = bench_state(n);
  const GateSuperop k = builtin_superop({"Rzz", {0.37}, {}, {}});
  const int a = n / 2;
  for (auto _ : state) {
    apply_2q_inplace(r, k, a, a + 1);
    benchmark::DoNotOptimize(r.data.data());
  }
}

void bm_dense_2q(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Eigen::MatrixXcd rho = bench_density(n);
  const Eigen::MatrixXcd u = dense_gate_matrix({"Rzz", {0.37}, {}, {}});
  const std::vector<int> targets{n / 2, n / 2 + 1};
  for (auto _ : state) {
    oracle::apply_gate_dense_inplace(rho, u, targets);
    benchmark::DoNotOptimize(rho.data());
  }
}

void bm_bloch_cnot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BlochVector r = bench_state(n);
  const ControlledGateSpec cnot =
      make_controlled({n / 2 + 1}, GateSpec{"X", {}, {n / 2}, {}});
  for (auto _ : state) {
    r = apply_controlled(r, cnot);
    benchmark::DoNotOptimize(r.data.data());
  }
}

}  // namespace

BENCHMARK(bm_bloch_1q)->DenseRange(4, 10);
BENCHMARK(bm_dense_1q)->DenseRange(4, 10);
BENCHMARK(bm_bloch_2q)->DenseRange(4, 10);
BENCHMARK(bm_dense_2q)->DenseRange(4, 10);
BENCHMARK(bm_bloch_cnot)->DenseRange(4, 10);

BENCHMARK_MAIN();
