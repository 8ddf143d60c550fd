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

// Reference computations for the acceptance checks. They use plain arrays and
// closed-form algebra only, never the library's eigensolver or partial trace.

#include <array>
#include <complex>
#include <vector>

namespace nosig::oracle {

using C = std::complex<double>;

/// Eigenvalues of [[a, b], [conj(b), d]] (a, d real), ascending.
std::array<double, 2> eigenvalues_2x2(double a, C b, double d);

/// Eigenvalues of a 3x3 Hermitian matrix from the roots of its characteristic
/// polynomial (trigonometric form), ascending.
std::array<double, 3> eigenvalues_3x3(const std::array<std::array<C, 3>, 3> &m);

/// Cloning, basis 1 computational vs basis 2 at (theta, 0): the difference of
/// the two mixtures of |xx><xx| splits into 2x2 blocks on {|00>,|11>} and
/// {|01>,|10>}. Returns its four eigenvalues, ascending.
std::array<double, 4> cloning_difference_spectrum(double theta);

/// Z machine, basis 1 computational vs basis 2 at (theta, phi): Alice's
/// before/after difference has entries only at (0,3) and (1,2) and their
/// mirrors, so the spectrum is +-|x|, +-|y|. Returns it ascending.
std::array<double, 4> z_gate_difference_spectrum(double theta, double phi);

/// NOT-gate remote change for psi = a|0> + b|1>, phi = c|0> + d e^{i t}|1>
/// (a, c >= 0), flip phases mu, nu, trivial memory.
double not_gate_distance(double a, double b, double c, double d, double t, double mu, double nu);

/// Minimum of not_gate_distance over an n x n grid of (mu, nu) in [0, 2 pi).
double not_gate_min_distance(double a, double b, double c, double d, double t, int n);

}  // namespace nosig::oracle
