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

#include <span>

#include "blochsim/bloch.hpp"
#include "blochsim/gates.hpp"

namespace blochsim {

/// Single-qubit superop applied to qubit l: the Bloch vector is viewed as a
/// 4^(n-1-l) x 4 x 4^l tensor and the middle axis is contracted with K,
/// visiting each entry once and using only K's nonzero entries.
void apply_1q_inplace(BlochVector& r, const GateSuperop& k, int qubit);
BlochVector apply_1q(const BlochVector& r, const GateSuperop& k, int qubit);

/// Two-qubit superop on qubits (qa, qb); the superop row index is
/// 4*j_b + j_a with j_a the axis of qa. Qubits may be passed in either
/// order; for qa > qb the superop is conjugated by the axis-swap permutation
/// rather than permuting the state.
void apply_2q_inplace(BlochVector& r, const GateSuperop& k, int qa, int qb);
BlochVector apply_2q(const BlochVector& r, const GateSuperop& k, int qa, int qb);

/// General m-qubit superop; targets[i] is the qubit mapped to superop axis i
/// (axis 0 fastest-varying). Agrees with the specialized kernels for m <= 2.
void apply_mq_inplace(BlochVector& r, const GateSuperop& k, std::span<const int> targets);
BlochVector apply_mq(const BlochVector& r, const GateSuperop& k, std::span<const int> targets);

/// Dispatches on targets.size() to the specialized kernels.
void apply_superop_inplace(BlochVector& r, const GateSuperop& k, std::span<const int> targets);
BlochVector apply_superop(const BlochVector& r, const GateSuperop& k, std::span<const int> targets);

/// Reorders superop axes: new axis i reads the old axis perm[i].
GateSuperop permute_superop_axes(const GateSuperop& k, std::span<const int> perm);

}  // namespace blochsim
