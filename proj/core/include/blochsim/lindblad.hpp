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

#include <functional>
#include <vector>

#include "blochsim/bloch.hpp"
#include "blochsim/gates.hpp"

namespace blochsim {

struct JumpOperator {
  Eigen::MatrixXcd matrix;
  std::vector<int> targets;
};

/// Bloch-space generator of the Lindblad equation dr/dt = L r, assembled as
/// -2 A_H plus, per jump operator, (conjugation by L_q) - S_{L_q^dagger L_q},
/// each lifted to the full register. Row 0 is identically zero (the trace
/// component is conserved).
struct LindbladGenerator {
  int n_qubits = 0;
  Eigen::MatrixXd matrix;
  PauliObservable hamiltonian;
  std::vector<JumpOperator> jumps;
};

/// Dense 4^n x 4^n assembly; `max_qubits` caps the register size since the
/// generator is stored densely.
LindbladGenerator build_generator(const PauliObservable& hamiltonian,
                                  std::vector<JumpOperator> jumps, int max_qubits = 8);

enum class EvolveMethod { Expm, Rk4 };

/// Trajectory on a uniform grid. The expm path stores only the endpoints;
/// the rk4 path stores every step so adjoint passes and quadratures can run
/// on an aligned grid.
struct EvolutionResult {
  std::vector<double> times;
  std::vector<BlochVector> states;
  EvolveMethod method = EvolveMethod::Rk4;
  double dt = 0.0;
};

/// Integrates r(t) from 0 to t_final. Expm evaluates e^{L t_final} r(0)
/// directly; Rk4 is classical fixed-step fourth order (dt is snapped so the
/// grid lands on t_final; dt <= 0 defaults to t_final / 1000).
EvolutionResult evolve(const BlochVector& r0, const LindbladGenerator& gen, double t_final,
                       EvolveMethod method, double dt = 0.0);

using TimeDependentGenerator = std::function<Eigen::MatrixXd(double)>;

/// Rk4 path for a time-dependent generator L(t).
EvolutionResult evolve_rk4(const BlochVector& r0, const TimeDependentGenerator& l_of_t,
                           double t_final, double dt);

/// Integrates the adjoint equation d rbar/dt = -L^T rbar backwards from the
/// terminal condition rbar(t_final). States are returned in ascending time
/// order, aligned with the forward grid.
EvolutionResult adjoint_evolve(const BlochVector& rbar_final, const LindbladGenerator& gen,
                               double t_final, double dt);

EvolutionResult adjoint_evolve_rk4(const BlochVector& rbar_final,
                                   const TimeDependentGenerator& l_of_t, double t_final,
                                   double dt);

/// Gradient of the cost with respect to every generator entry:
/// Lbar = integral of rbar(t) (outer) r(t) dt, trapezoidal on the stored
/// grid. Both trajectories must share that grid.
Eigen::MatrixXd grad_generator(const EvolutionResult& forward, const EvolutionResult& adjoint);

/// Gradient with respect to a scalar parameter of L(t, theta):
/// integral of rbar(t)^T dL/dtheta(t) r(t) dt on the stored grid.
double grad_parameter(const EvolutionResult& forward, const EvolutionResult& adjoint,
                      const TimeDependentGenerator& dl_dtheta);

}  // namespace blochsim
