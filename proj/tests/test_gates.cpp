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

#include <numbers>
#include <random>

#include "blochsim/gates.hpp"
#include "helpers.hpp"

using namespace blochsim;
using Catch::Approx;
namespace th = test_helpers;

namespace {

// All single-qubit table rows, with representative random parameters.
std::vector<GateSpec> single_qubit_specs(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::normal_distribution<double> axis(0.0, 1.0);
  std::vector<GateSpec> specs = {
      {"X", {}, {}, {}}, {"Y", {}, {}, {}}, {"Z", {}, {}, {}},
      {"H", {}, {}, {}}, {"S", {}, {}, {}}, {"Proj1", {}, {}, {}},
  };
  for (int rep = 0; rep < 5; ++rep) {
    specs.push_back({"PhaseShift", {angle(rng)}, {}, {}});
    specs.push_back({"Rx", {angle(rng)}, {}, {}});
    specs.push_back({"Ry", {angle(rng)}, {}, {}});
    specs.push_back({"Rz", {angle(rng)}, {}, {}});
    double nx = axis(rng), ny = axis(rng), nz = axis(rng);
    const double nrm = std::sqrt(nx * nx + ny * ny + nz * nz);
    specs.push_back({"Rn", {angle(rng), nx / nrm, ny / nrm, nz / nrm}, {}, {}});
  }
  return specs;
}

std::vector<GateSpec> two_qubit_specs(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  std::vector<GateSpec> specs;
  for (int rep = 0; rep < 5; ++rep) {
    specs.push_back({"Rxx", {angle(rng)}, {}, {}});
    specs.push_back({"Ryy", {angle(rng)}, {}, {}});
    specs.push_back({"Rzz", {angle(rng)}, {}, {}});
  }
  return specs;
}

}  // namespace

TEST_CASE("phase gate superop has the expected matrix", "[gates]") {
  const GateSuperop s = builtin_superop({"S", {}, {}, {}});
  Eigen::MatrixXd expected(4, 4);
  expected << 1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
  REQUIRE(th::max_abs(s.matrix - expected) == 0.0);
}

TEST_CASE("identity unitary gives the identity superop", "[gates]") {
  const GateSuperop k = superop_from_unitary(Eigen::Matrix2cd::Identity());
  REQUIRE(th::max_abs(k.matrix - Eigen::MatrixXd::Identity(4, 4)) < 1e-14);
}

TEST_CASE("Hadamard superop swaps x and z with a y flip", "[gates]") {
  const GateSuperop h = builtin_superop({"H", {}, {}, {}});
  Eigen::VectorXd r(4);
  r << 1.0, 0.25, -0.5, 0.75;
  const Eigen::VectorXd out = h.matrix * r;
  REQUIRE(out(0) == Approx(1.0));
  REQUIRE(out(1) == Approx(0.75));
  REQUIRE(out(2) == Approx(0.5));
  REQUIRE(out(3) == Approx(0.25));
}

TEST_CASE("closed-form superops match the generic constructions", "[gates]") {
  std::mt19937_64 rng(101);
  for (const auto& spec : single_qubit_specs(rng)) {
    const Eigen::MatrixXcd u = dense_gate_matrix(spec);
    const GateSuperop generic =
        spec.name == "Proj1" ? conjugation_superop(u) : superop_from_unitary(u);
    REQUIRE(th::max_abs(builtin_superop(spec).matrix - generic.matrix) < 1e-12);
    REQUIRE(th::max_abs(builtin_sym_superop(spec).matrix - sym_superop(u).matrix) < 1e-12);
    REQUIRE(th::max_abs(builtin_antisym_superop(spec).matrix - antisym_superop(u).matrix) <
            1e-12);
  }
  for (const auto& spec : two_qubit_specs(rng)) {
    const GateSuperop generic = superop_from_unitary(dense_gate_matrix(spec));
    REQUIRE(th::max_abs(builtin_superop(spec).matrix - generic.matrix) < 1e-12);
  }
}

TEST_CASE("sandwich operator table entries", "[gates]") {
  SECTION("S_Z and A_Z") {
    const Eigen::MatrixXd sz = builtin_sym_superop({"Z", {}, {}, {}}).matrix;
    REQUIRE(sz(0, 3) == 1.0);
    REQUIRE(sz(3, 0) == 1.0);
    REQUIRE(sz.cwiseAbs().sum() == Approx(2.0));
    const Eigen::MatrixXd az = builtin_antisym_superop({"Z", {}, {}, {}}).matrix;
    REQUIRE(az(1, 2) == 1.0);
    REQUIRE(az(2, 1) == -1.0);
    REQUIRE(az.cwiseAbs().sum() == Approx(2.0));
  }
  SECTION("S of the |1><1| projector") {
    Eigen::MatrixXd expected(4, 4);
    expected << 1, 0, 0, -1, 0, 1, 0, 0, 0, 0, 1, 0, -1, 0, 0, 1;
    expected *= 0.5;
    REQUIRE(th::max_abs(builtin_sym_superop({"Proj1", {}, {}, {}}).matrix - expected) == 0.0);
  }
}

TEST_CASE("rotation axis specialization and fixed points", "[gates]") {
  const double theta = 1.234;
  const GateSuperop rn = builtin_superop({"Rn", {theta, 1.0, 0.0, 0.0}, {}, {}});
  const GateSuperop rx = builtin_superop({"Rx", {theta}, {}, {}});
  REQUIRE(th::max_abs(rn.matrix - rx.matrix) < 1e-14);

  const GateSuperop rzz0 = builtin_superop({"Rzz", {0.0}, {}, {}});
  REQUIRE(th::max_abs(rzz0.matrix - Eigen::MatrixXd::Identity(16, 16)) == 0.0);

  REQUIRE_THROWS_AS(builtin_superop({"Rn", {theta, 1.0, 1.0, 0.0}, {}, {}}),
                    std::invalid_argument);
}

TEST_CASE("unitary superops are orthogonal and trace preserving", "[gates]") {
  std::mt19937_64 rng(202);
  for (const auto& spec : single_qubit_specs(rng)) {
    if (spec.name == "Proj1") continue;
    const GateSuperop k = builtin_superop(spec);
    REQUIRE(k.kind == SuperopKind::Unitary);
    const Eigen::MatrixXd gram = k.matrix.transpose() * k.matrix;
    REQUIRE(th::max_abs(gram - Eigen::MatrixXd::Identity(4, 4)) < 1e-12);
    REQUIRE(k.matrix(0, 0) == 1.0);
  }
  for (const auto& spec : two_qubit_specs(rng)) {
    const GateSuperop k = builtin_superop(spec);
    const Eigen::MatrixXd gram = k.matrix.transpose() * k.matrix;
    REQUIRE(th::max_abs(gram - Eigen::MatrixXd::Identity(16, 16)) < 1e-12);
  }
}

TEST_CASE("conjugation superops compose homomorphically", "[gates]") {
  std::mt19937_64 rng(303);
  for (int dim : {2, 4}) {
    const Eigen::MatrixXcd u = th::random_unitary(dim, rng);
    const Eigen::MatrixXcd v = th::random_unitary(dim, rng);
    const Eigen::MatrixXd lhs = superop_from_unitary(Eigen::MatrixXcd(u * v)).matrix;
    const Eigen::MatrixXd rhs =
        superop_from_unitary(u).matrix * superop_from_unitary(v).matrix;
    REQUIRE(th::max_abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("superop_from_unitary validates its input", "[gates]") {
  Eigen::Matrix2cd not_unitary;
  not_unitary << 1, 1, 0, 1;
  REQUIRE_THROWS_AS(superop_from_unitary(not_unitary), std::invalid_argument);
}

TEST_CASE("builtin superop derivatives match finite differences", "[gates]") {
  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> angle(-2.5, 2.5);
  const double h = 1e-6;
  const std::vector<std::string> names = {"PhaseShift", "Rx", "Ry", "Rz", "Rxx", "Ryy", "Rzz"};
  for (const auto& name : names) {
    GateSpec spec{name, {angle(rng)}, {}, {}};
    const Eigen::MatrixXd d = builtin_superop_derivative(spec, 0).matrix;
    GateSpec plus = spec, minus = spec;
    plus.params[0] += h;
    minus.params[0] -= h;
    const Eigen::MatrixXd fd =
        (builtin_superop(plus).matrix - builtin_superop(minus).matrix) / (2.0 * h);
    REQUIRE(th::max_abs(d - fd) < 1e-8);
  }
  SECTION("Rn derivative in theta") {
    GateSpec spec{"Rn", {angle(rng), 0.0, 0.6, 0.8}, {}, {}};
    const Eigen::MatrixXd d = builtin_superop_derivative(spec, 0).matrix;
    GateSpec plus = spec, minus = spec;
    plus.params[0] += h;
    minus.params[0] -= h;
    const Eigen::MatrixXd fd =
        (builtin_superop(plus).matrix - builtin_superop(minus).matrix) / (2.0 * h);
    REQUIRE(th::max_abs(d - fd) < 1e-8);
  }
  SECTION("dense derivatives agree too") {
    for (const auto& name : names) {
      GateSpec spec{name, {angle(rng)}, {}, {}};
      const Eigen::MatrixXcd d = dense_gate_derivative(spec, 0);
      GateSpec plus = spec, minus = spec;
      plus.params[0] += h;
      minus.params[0] -= h;
      const Eigen::MatrixXcd fd =
          (dense_gate_matrix(plus) - dense_gate_matrix(minus)) / (2.0 * h);
      REQUIRE(th::max_abs(Eigen::MatrixXcd(d - fd)) < 1e-8);
    }
  }
  SECTION("conjugation derivative from dense pieces") {
    GateSpec spec{"Rx", {angle(rng)}, {}, {}};
    const GateSuperop d =
        conjugation_superop_derivative(dense_gate_matrix(spec), dense_gate_derivative(spec, 0));
    REQUIRE(th::max_abs(d.matrix - builtin_superop_derivative(spec, 0).matrix) < 1e-12);
  }
  SECTION("parameterless gates refuse derivatives") {
    REQUIRE_THROWS_AS(builtin_superop_derivative({"X", {}, {}, {}}, 0), std::invalid_argument);
  }
}

TEST_CASE("adjoint gates transpose the superop", "[gates]") {
  std::mt19937_64 rng(505);
  for (const auto& spec : single_qubit_specs(rng)) {
    if (spec.name == "Proj1") continue;
    const Eigen::MatrixXd forward = builtin_superop(spec).matrix;
    const Eigen::MatrixXd inverse = builtin_superop(adjoint_gate(spec)).matrix;
    REQUIRE(th::max_abs(inverse - forward.transpose()) < 1e-12);
  }
  for (const auto& spec : two_qubit_specs(rng)) {
    const Eigen::MatrixXd forward = builtin_superop(spec).matrix;
    const Eigen::MatrixXd inverse = builtin_superop(adjoint_gate(spec)).matrix;
    REQUIRE(th::max_abs(inverse - forward.transpose()) < 1e-12);
  }
  SECTION("custom gates take the adjoint matrix") {
    const Eigen::MatrixXcd u = th::random_unitary(4, rng);
    GateSpec spec{"Custom", {}, {0, 1}, u};
    const Eigen::MatrixXd forward = builtin_superop(spec).matrix;
    const Eigen::MatrixXd inverse = builtin_superop(adjoint_gate(spec)).matrix;
    REQUIRE(th::max_abs(inverse - forward.transpose()) < 1e-12);
  }
}
