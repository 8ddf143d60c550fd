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

#include "nosig/random.hpp"

#include <cmath>
#include <numbers>

namespace nosig {

namespace {

double uniform(Rng &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double uniform_phase(Rng &rng) {
    return uniform(rng, 0, 2 * std::numbers::pi);
}

CVector gaussian_vector(Rng &rng, std::size_t dim) {
    std::normal_distribution<double> normal;
    CVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        v[i] = Complex(re, im);
    }
    return v;
}

}  // namespace

Ket random_ket(Rng &rng, Dims dims) {
    const std::size_t dim = total_dim(dims);
    while (true) {
        CVector v = gaussian_vector(rng, dim);
        if (v.norm() > 1e-6) {
            return Ket::normalized(std::move(dims), std::move(v));
        }
    }
}

CMatrix random_unitary(Rng &rng, std::size_t dim) {
    CMatrix u(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        u(i, i) = std::polar(1.0, uniform_phase(rng));
    }
    // Two passes over all index pairs mix every entry.
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t p = 0; p < dim; ++p) {
            for (std::size_t q = p + 1; q < dim; ++q) {
                const double angle = uniform(rng, 0, std::numbers::pi / 2);
                const Complex e = std::polar(1.0, uniform_phase(rng));
                const double c = std::cos(angle);
                const double s = std::sin(angle);
                // Rows p, q of u <- [[c, s e], [-s conj(e), c]] applied on the left.
                for (std::size_t k = 0; k < dim; ++k) {
                    const Complex up = u(p, k);
                    const Complex uq = u(q, k);
                    u(p, k) = c * up + s * e * uq;
                    u(q, k) = -s * std::conj(e) * up + c * uq;
                }
            }
        }
    }
    return u;
}

CMatrix random_hermitian(Rng &rng, std::size_t dim, double scale) {
    CMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = uniform(rng, -scale, scale);
        for (std::size_t j = i + 1; j < dim; ++j) {
            m(i, j) = Complex(uniform(rng, -scale, scale), uniform(rng, -scale, scale));
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

DensityMatrix random_density_matrix(Rng &rng, std::size_t dim, std::size_t rank) {
    if (rank == 0 || rank > dim) {
        rank = dim;
    }
    std::vector<double> weights(rank);
    double total = 0;
    for (auto &w : weights) {
        w = uniform(rng, 0.05, 1);
        total += w;
    }
    CMatrix rho(dim, dim);
    for (std::size_t r = 0; r < rank; ++r) {
        const Ket k = random_ket(rng, {dim});
        rho = rho + Complex(weights[r] / total) * outer(k.amplitudes(), k.amplitudes());
    }
    return DensityMatrix({dim}, rho);
}

BlochAngles random_bloch(Rng &rng) {
    const double z = uniform(rng, -1, 1);
    return BlochAngles::wrapped(std::acos(z), uniform_phase(rng));
}

ScenarioConfig random_scenario_config(Rng &rng, ScenarioKind kind, bool zero_hadamard_phases) {
    ScenarioConfig cfg = ScenarioConfig::defaults(kind);
    cfg.basis1 = random_bloch(rng);
    cfg.basis2 = random_bloch(rng);
    if (kind == ScenarioKind::not_gate) {
        const double alpha = uniform(rng, 0, std::numbers::pi / 2);
        const double beta = uniform(rng, 0, std::numbers::pi / 2);
        cfg.not_params = {std::cos(alpha), std::sin(alpha), std::cos(beta), std::sin(beta), uniform(rng, 0, std::numbers::pi),
                          false};
        cfg.machine.mu = uniform_phase(rng);
        cfg.machine.nu = uniform_phase(rng);
    }
    if (kind == ScenarioKind::hadamard && !zero_hadamard_phases) {
        cfg.machine.phi1 = uniform_phase(rng);
        cfg.machine.phi2 = uniform_phase(rng);
    }
    const MachineConfig names_cfg = machine_config(resolve(cfg));
    const MachineKind mk = machine_kind(kind);
    if (kind == ScenarioKind::not_gate || kind == ScenarioKind::hadamard || kind == ScenarioKind::deletion) {
        cfg.machine.memory_dim = 2;
        for (const auto &name : memory_names(mk, names_cfg)) {
            cfg.machine.memory[name] = random_ket(rng, {2}).amplitudes();
        }
    }
    if (kind == ScenarioKind::general_op) {
        for (const auto &name : ancilla_names(mk, names_cfg)) {
            cfg.machine.ancilla[name] = random_ket(rng, {cfg.machine.ancilla_dim}).amplitudes();
        }
    }
    return cfg;
}

}  // namespace nosig
