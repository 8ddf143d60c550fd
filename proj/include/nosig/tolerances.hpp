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

namespace nosig {

// Entrywise tolerance when checking that a matrix is Hermitian.
inline constexpr double HERMITICITY_TOL = 1e-10;
// Jacobi stops once the off-diagonal Frobenius norm drops below this
// (scaled by max(1, ||A||_F)).
inline constexpr double EIG_TOL = 1e-12;
// Generic equality tolerance for traces, norms and orthonormality.
inline constexpr double EQUALITY_TOL = 1e-10;
// Unit-norm tolerance for kets.
inline constexpr double NORM_TOL = 1e-12;
// Measurement branches with probability below this are dropped.
inline constexpr double ZERO_PROBABILITY = 1e-14;
// Default trace-distance threshold separating numerical zero from signal.
inline constexpr double DEFAULT_SIGNALLING_THRESHOLD = 1e-9;

}  // namespace nosig
