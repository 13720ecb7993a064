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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "blochsim/kernels.hpp"
#include "blochsim/oracle.hpp"
#include "helpers.hpp"

using namespace blochsim;
using Catch::Approx;
namespace th = test_helpers;

namespace {

// Bloch-side application vs dense conjugation, compared in the Bloch basis.
double kernel_vs_oracle(const BlochVector& r, const GateSpec& spec,
                        const std::vector<int>& targets) {
  const GateSuperop k = builtin_superop(spec);
  const BlochVector got = apply_superop(r, k, targets);
  const DenseHermitian rho = density_from_bloch(r);
  const DenseHermitian expected = oracle::conjugate(rho, dense_gate_matrix(spec), targets);
  return th::max_abs_diff(got, bloch_from_density(expected));
}

}  // namespace

TEST_CASE("single-qubit kernel basics", "[kernels]") {
  SECTION("X flips |0> on the addressed qubit") {
    const GateSuperop x = builtin_superop({"X", {}, {}, {}});
    const BlochVector out = apply_1q(BlochVector::zero_state(1), x, 0);
    REQUIRE(out.data == std::vector<double>{1.0, 0.0, 0.0, -1.0});
  }
  SECTION("S maps |+> to |+i>") {
    BlochVector plus{1, {1.0, 1.0, 0.0, 0.0}, false};
    const BlochVector out = apply_1q(plus, builtin_superop({"S", {}, {}, {}}), 0);
    REQUIRE(out.data[0] == Approx(1.0));
    REQUIRE(out.data[1] == Approx(0.0).margin(1e-15));
    REQUIRE(out.data[2] == Approx(1.0));
    REQUIRE(out.data[3] == Approx(0.0).margin(1e-15));
  }
  SECTION("out of range target throws") {
    const GateSuperop x = builtin_superop({"X", {}, {}, {}});
    REQUIRE_THROWS_AS(apply_1q(BlochVector::zero_state(2), x, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_1q(BlochVector::zero_state(2), x, -1), std::invalid_argument);
  }
}

TEST_CASE("every table gate matches dense conjugation on random states", "[kernels]") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  const int n = 4;
  std::vector<GateSpec> specs = {
      {"X", {}, {}, {}},          {"Y", {}, {}, {}},  {"Z", {}, {}, {}},
      {"H", {}, {}, {}},          {"S", {}, {}, {}},  {"PhaseShift", {angle(rng)}, {}, {}},
      {"Rx", {angle(rng)}, {}, {}}, {"Ry", {angle(rng)}, {}, {}},
      {"Rz", {angle(rng)}, {}, {}}, {"Rn", {angle(rng), 0.6, 0.0, 0.8}, {}, {}},
  };
  for (const auto& spec : specs) {
    const BlochVector r = th::random_state(n, rng);
    for (int l = 0; l < n; ++l) REQUIRE(kernel_vs_oracle(r, spec, {l}) < 1e-12);
  }
}

TEST_CASE("two-qubit kernels", "[kernels]") {
  std::mt19937_64 rng(43);
  SECTION("Rxx at zero leaves states untouched") {
    const BlochVector r = th::random_state(3, rng);
    const BlochVector out = apply_2q(r, builtin_superop({"Rxx", {0.0}, {}, {}}), 0, 2);
    REQUIRE(th::max_abs_diff(out, r) == 0.0);
  }
  SECTION("|00> is an Rzz eigenstate") {
    const BlochVector r = BlochVector::zero_state(2);
    const BlochVector out = apply_2q(r, builtin_superop({"Rzz", {0.9}, {}, {}}), 0, 1);
    REQUIRE(th::max_abs_diff(out, r) < 1e-15);
  }
  SECTION("all placements and both orders match the dense oracle") {
    const int n = 4;
    for (const char* name : {"Rxx", "Ryy", "Rzz"}) {
      for (double theta : {0.3, 1.7}) {
        const GateSpec spec{name, {theta}, {}, {}};
        for (int qa = 0; qa < n; ++qa) {
          for (int qb = 0; qb < n; ++qb) {
            if (qa == qb) continue;
            const BlochVector r = th::random_state(n, rng);
            REQUIRE(kernel_vs_oracle(r, spec, {qa, qb}) < 1e-12);
          }
        }
      }
    }
  }
  SECTION("equal indices throw") {
    const GateSuperop k = builtin_superop({"Rzz", {0.4}, {}, {}});
    REQUIRE_THROWS_AS(apply_2q(BlochVector::zero_state(3), k, 1, 1), std::invalid_argument);
  }
}

TEST_CASE("general m-qubit kernel", "[kernels]") {
  std::mt19937_64 rng(44);
  SECTION("agrees with the arity-1 kernel") {
    const GateSuperop k = builtin_superop({"Ry", {1.1}, {}, {}});
    const BlochVector r = th::random_state(3, rng);
    const std::vector<int> targets{1};
    REQUIRE(th::max_abs_diff(apply_mq(r, k, targets), apply_1q(r, k, 1)) == 0.0);
  }
  SECTION("agrees with the arity-2 kernel in both orders") {
    const GateSuperop k = builtin_superop({"Ryy", {0.7}, {}, {}});
    const BlochVector r = th::random_state(4, rng);
    for (auto [qa, qb] : {std::pair{1, 3}, std::pair{3, 1}}) {
      const std::vector<int> targets{qa, qb};
      REQUIRE(th::max_abs_diff(apply_mq(r, k, targets), apply_2q(r, k, qa, qb)) < 1e-15);
    }
  }
  SECTION("arity-3 superop matches the dense oracle on five qubits") {
    const Eigen::MatrixXcd u = th::random_unitary(8, rng);
    const GateSuperop k = superop_from_unitary(u);
    const BlochVector r = th::random_state(5, rng);
    for (const auto& targets : std::vector<std::vector<int>>{{0, 1, 2}, {4, 0, 2}, {3, 1, 4}}) {
      const BlochVector got = apply_mq(r, k, targets);
      const DenseHermitian expected =
          oracle::conjugate(density_from_bloch(r), u, targets);
      REQUIRE(th::max_abs_diff(got, bloch_from_density(expected)) < 1e-12);
      REQUIRE(got.data[0] == Approx(1.0));
    }
  }
  SECTION("identity superop of any arity is a no-op") {
    const GateSuperop id = superop_from_unitary(Eigen::MatrixXcd::Identity(8, 8));
    const BlochVector r = th::random_state(4, rng);
    const std::vector<int> targets{0, 2, 3};
    REQUIRE(th::max_abs_diff(apply_mq(r, id, targets), r) < 1e-14);
  }
  SECTION("duplicate targets throw") {
    const GateSuperop k = superop_from_unitary(Eigen::MatrixXcd::Identity(8, 8));
    const std::vector<int> targets{0, 1, 0};
    REQUIRE_THROWS_AS(apply_mq(BlochVector::zero_state(4), k, targets), std::invalid_argument);
  }
}

TEST_CASE("in-place and out-of-place kernels agree bit for bit", "[kernels]") {
  std::mt19937_64 rng(45);
  const BlochVector r = th::random_state(4, rng);
  const GateSuperop k1 = builtin_superop({"Rx", {0.8}, {}, {}});
  const GateSuperop k2 = builtin_superop({"Rzz", {1.2}, {}, {}});

  BlochVector inplace = r;
  apply_1q_inplace(inplace, k1, 2);
  REQUIRE(apply_1q(r, k1, 2).data == inplace.data);

  inplace = r;
  apply_2q_inplace(inplace, k2, 3, 1);
  REQUIRE(apply_2q(r, k2, 3, 1).data == inplace.data);
}

TEST_CASE("unitary application preserves the trace component and purity", "[kernels]") {
  std::mt19937_64 rng(46);
  const BlochVector r = th::random_state(3, rng);
  BlochVector out = apply_1q(r, builtin_superop({"H", {}, {}, {}}), 1);
  out = apply_2q(out, builtin_superop({"Rxx", {0.9}, {}, {}}), 0, 2);
  REQUIRE(out.data[0] == Approx(1.0));
  REQUIRE(purity(out) == Approx(purity(r)).margin(1e-13));
}
