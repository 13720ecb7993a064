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
#include <string>
#include <vector>

namespace blochsim::bench {

struct KernelBenchConfig {
  std::vector<std::string> gates = {"X", "Y", "Z", "H", "Rx", "Ry", "Rz"};
  std::vector<int> n_values = {4, 5, 6, 7, 8, 9, 10};
  int reps = 25;
  int warmup = 3;
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::string gate;
  int n_qubits = 0;
  std::string impl;  // "bloch" or "dense"
  double median_ns = 0.0;
  int reps = 0;
};

/// Times each gate's matrix-free Bloch kernel against the strided dense
/// conjugation baseline, single-threaded; median over `reps` samples, each
/// sample averaging enough inner applications to dominate timer resolution.
/// Gate names: the single-qubit builtins, Rxx/Ryy/Rzz, and "CNOT".
std::vector<BenchRow> run_kernel_bench(const KernelBenchConfig& config);

/// bench.csv serialization: header gate,n,impl,median_ns,reps.
std::string bench_rows_to_csv(const std::vector<BenchRow>& rows);

}  // namespace blochsim::bench
