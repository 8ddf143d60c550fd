// Copyright 2026 The nosig Authors
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

#include <cstdint>
#include <random>

#include "nosig/linalg.hpp"
#include "nosig/quantum.hpp"
#include "nosig/scenario.hpp"

namespace nosig {

using Rng = std::mt19937_64;

/// Haar-distributed pure state (normalized complex Gaussian vector).
Ket random_ket(Rng &rng, Dims dims);

/// Unitary built as a product of random complex Givens rotations and a
/// random diagonal phase.
CMatrix random_unitary(Rng &rng, std::size_t dim);

/// Hermitian matrix with entries of order `scale`.
CMatrix random_hermitian(Rng &rng, std::size_t dim, double scale = 1.0);

/// Mixture of `rank` random pure states with random weights (rank 0 means full).
DensityMatrix random_density_matrix(Rng &rng, std::size_t dim, std::size_t rank = 0);

/// Uniform point on the Bloch sphere.
BlochAngles random_bloch(Rng &rng);

/// Random parameters for every field the kind uses: bases, not-gate states,
/// phases (hadamard phases stay zero when `zero_hadamard_phases`), memory
/// states of dimension 2 and general_op ancilla states.
ScenarioConfig random_scenario_config(Rng &rng, ScenarioKind kind, bool zero_hadamard_phases = true);

}  // namespace nosig
