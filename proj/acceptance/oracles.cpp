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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace nosig::oracle {

namespace {

using Mat3 = std::array<std::array<C, 3>, 3>;
using Vec2 = std::array<C, 2>;

// <x|y>
C braket(const Vec2 &x, const Vec2 &y) {
    return std::conj(x[0]) * y[0] + std::conj(x[1]) * y[1];
}

double trace_norm_half(const std::array<double, 3> &eig) {
    return 0.5 * (std::abs(eig[0]) + std::abs(eig[1]) + std::abs(eig[2]));
}

}  // namespace

std::array<double, 2> eigenvalues_2x2(double a, C b, double d) {
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(b));
    return {mean - radius, mean + radius};
}

std::array<double, 3> eigenvalues_3x3(const Mat3 &m) {
    const double p1 = std::norm(m[0][1]) + std::norm(m[0][2]) + std::norm(m[1][2]);
    const double q = (m[0][0].real() + m[1][1].real() + m[2][2].real()) / 3;
    double p2 = 2 * p1;
    for (int i = 0; i < 3; ++i) {
        p2 += (m[i][i].real() - q) * (m[i][i].real() - q);
    }
    const double p = std::sqrt(p2 / 6);
    if (p < 1e-300) {
        return {q, q, q};
    }
    // B = (A - qI) / p; its characteristic polynomial is x^3 - 3x - det(B).
    Mat3 b;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            b[i][j] = (m[i][j] - (i == j ? C(q) : C(0))) / p;
        }
    }
    const C det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                  b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                  b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const double r = std::clamp(det.real() / 2, -1.0, 1.0);
    const double angle = std::acos(r) / 3;
    const double largest = q + 2 * p * std::cos(angle);
    const double smallest = q + 2 * p * std::cos(angle + 2 * std::numbers::pi / 3);
    std::array<double, 3> out{smallest, 3 * q - largest - smallest, largest};
    std::sort(out.begin(), out.end());
    return out;
}

std::array<double, 4> cloning_difference_spectrum(double theta) {
    // Every state involved lies in the symmetric subspace spanned by
    // |00>, (|01> + |10>)/sqrt(2), |11>; the singlet direction contributes 0.
    const double u = std::cos(theta / 2);
    const double v = std::sin(theta / 2);
    const std::array<double, 3> x{u * u, std::sqrt(2.0) * u * v, v * v};
    const std::array<double, 3> y{v * v, -std::sqrt(2.0) * u * v, u * u};
    Mat3 delta{};
    delta[0][0] += 0.5;
    delta[2][2] += 0.5;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            delta[i][j] -= 0.5 * (x[i] * x[j] + y[i] * y[j]);
        }
    }
    const auto e = eigenvalues_3x3(delta);
    std::array<double, 4> out{e[0], e[1], e[2], 0.0};
    std::sort(out.begin(), out.end());
    return out;
}

std::array<double, 4> z_gate_difference_spectrum(double theta, double phi) {
    const Vec2 psi1{1.0, 0.0};
    const Vec2 bar1{0.0, -1.0};
    const Vec2 psi2{std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
    const Vec2 bar2{std::sin(theta / 2), -std::polar(std::cos(theta / 2), phi)};
    // The machine flips the sign of the barred terms only, so the before/after
    // difference is -1/2 <bar2|psi1> at (0,3) and -1/2 <psi2|bar1> at (1,2).
    const double x = 0.5 * std::abs(braket(bar2, psi1));
    const double y = 0.5 * std::abs(braket(psi2, bar1));
    std::array<double, 4> out{-x, -y, x, y};
    std::sort(out.begin(), out.end());
    return out;
}

double not_gate_distance(double a, double b, double c, double d, double t, double mu, double nu) {
    const Vec2 zero{1.0, 0.0};
    const Vec2 one{0.0, 1.0};
    const Vec2 psi{a, b};
    const Vec2 phi{c, std::polar(d, t)};
    const C e_mu = std::polar(1.0, mu);
    const C e_nu = std::polar(1.0, nu);
    const Vec2 psi_flip{e_mu * b, -e_mu * a};
    const Vec2 phi_flip{e_nu * d, -e_nu * std::polar(c, t)};
    const std::array<Vec2, 3> before{zero, psi, phi};
    const std::array<Vec2, 3> after{one, psi_flip, phi_flip};
    // Alice's reduced state of sum_k |k>|b_k> / sqrt(3) is <b_k|b_j> / 3.
    Mat3 delta{};
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            delta[j][k] = (braket(after[k], after[j]) - braket(before[k], before[j])) / 3.0;
        }
    }
    return trace_norm_half(eigenvalues_3x3(delta));
}

double not_gate_min_distance(double a, double b, double c, double d, double t, int n) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double mu = 2 * std::numbers::pi * i / n;
            const double nu = 2 * std::numbers::pi * j / n;
            best = std::min(best, not_gate_distance(a, b, c, d, t, mu, nu));
        }
    }
    return best;
}

}  // namespace nosig::oracle
