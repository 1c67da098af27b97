// Copyright 2026 The randmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "randmeas/parties.hpp"
#include "randmeas/qstate.hpp"
#include "randmeas/rng.hpp"

namespace randmeas {

// Haar-random pure state vector on n qubits.
StateVector random_pure_vector(int n, RngStream& rng);

// Full-rank random mixed state, G G^dagger / tr(G G^dagger) with G complex Ginibre.
DensityMatrix random_mixed_state(int n, RngStream& rng);

std::vector<Mat2> random_local_unitaries(int n, RngStream& rng);

// |psi_A> ⊗ |psi_B> with Haar-random block states on a uniformly random
// non-trivial bipartition, mixed with white noise of uniform random weight.
DensityMatrix random_biseparable_state(int n, RngStream& rng);

// Convex mixture of 1..4 random local-unitary rotations of W(n) with random weights.
DensityMatrix random_w_class_mixture(int n, RngStream& rng);

// Pure product of the two blocks, placing block qubits at their labels.
StateVector block_product(int n, Parties block_a, const StateVector& psi_a,
                          const StateVector& psi_b);

}  // namespace randmeas
