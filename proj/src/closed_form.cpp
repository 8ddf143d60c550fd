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

// Analytic reduced density matrices of each protocol, written entry by entry
// from state overlaps. These never go through a partial trace, so they check
// the simulation from an independent direction.

#include <cmath>

#include "nosig/errors.hpp"
#include "nosig/scenario.hpp"

namespace nosig {

namespace {

Complex ov(const Ket &bra, const Ket &ket) {
    return overlap(bra, ket);
}

Complex expi(double angle) {
    return std::polar(1.0, angle);
}

// scale * (I + sum of listed off-diagonal terms)
class Expansion {
   public:
    Expansion(std::size_t dim, double scale) : m_(CMatrix::identity(dim)), scale_(scale) {}

    Expansion &add(std::size_t row, std::size_t col, Complex value) {
        m_(row, col) += value;
        return *this;
    }

    CMatrix done() const {
        return scale_ * m_;
    }

   private:
    CMatrix m_;
    double scale_;
};

struct Bases {
    Ket psi1, bar1, psi2, bar2;
};

Bases bases_of(const ScenarioConfig &cfg) {
    const QubitBasis b1 = QubitBasis::from_bloch(cfg.basis1);
    const QubitBasis b2 = QubitBasis::from_bloch(cfg.basis2);
    return {b1.psi(), b1.psi_bar(), b2.psi(), b2.psi_bar()};
}

Ket memory(const ScenarioConfig &cfg, const std::string &name) {
    return Ket({cfg.machine.memory_dim}, cfg.machine.memory.at(name));
}

Ket ancilla(const ScenarioConfig &cfg, const std::string &name) {
    return Ket({cfg.machine.ancilla_dim}, cfg.machine.ancilla.at(name));
}

CMatrix projector(const Ket &k) {
    return outer(k.amplitudes(), k.amplitudes());
}

DensityMatrix cloning(const ScenarioConfig &cfg, Stage stage) {
    const Bases b = bases_of(cfg);
    const Ket &psi = stage == Stage::before ? b.psi1 : b.psi2;
    const Ket &bar = stage == Stage::before ? b.bar1 : b.bar2;
    return DensityMatrix({2, 2}, 0.5 * (projector(tensor_product(psi, psi)) + projector(tensor_product(bar, bar))));
}

DensityMatrix general_op(const ScenarioConfig &cfg, Stage stage) {
    const Bases b = bases_of(cfg);
    const std::size_t which = stage == Stage::before ? 1 : 2;
    const Ket &psi = which == 1 ? b.psi1 : b.psi2;
    const Ket &bar = which == 1 ? b.bar1 : b.bar2;
    const Ket f_psi = ancilla(cfg, basis_state_name(which, false));
    const Ket f_bar = ancilla(cfg, basis_state_name(which, true));
    return DensityMatrix({2, cfg.machine.ancilla_dim},
                         0.5 * (tensor_product(projector(bar), projector(f_bar)) +
                                tensor_product(projector(psi), projector(f_psi))));
}

DensityMatrix not_gate(const ScenarioConfig &cfg, Stage stage) {
    const NotGateParams &p = cfg.not_params;
    const Ket zero = Ket::basis(2, 0);
    const Ket one = Ket::basis(2, 1);
    const Ket psi({2}, CVector{p.a, p.b});
    const Ket phi({2}, CVector{p.c, std::polar(p.d, p.theta)});
    Expansion rho(3, 1.0 / 3);
    if (stage == Stage::before) {
        // rho(j, k) = <b_k|b_j> / 3, so |1><2| carries <phi|psi>.
        rho.add(0, 1, p.a).add(1, 0, p.a);
        rho.add(0, 2, p.c).add(2, 0, p.c);
        rho.add(1, 2, ov(phi, psi)).add(2, 1, ov(psi, phi));
        return DensityMatrix({3}, rho.done());
    }
    // For nonnegative real amplitudes <psi_bar|1> = -a, <phi_bar|1> = -c and
    // <phi_bar|psi_bar> = <psi|phi>.
    const Ket psi_bar = orthogonal_complement(psi);
    const Ket phi_bar = orthogonal_complement(phi);
    const Ket m0 = memory(cfg, std::string(FLIP_ZERO));
    const Ket m_psi = memory(cfg, std::string(FLIP_PSI));
    const Ket m_phi = memory(cfg, std::string(FLIP_PHI));
    const double mu = cfg.machine.mu;
    const double nu = cfg.machine.nu;
    rho.add(0, 1, expi(-mu) * ov(m_psi, m0) * ov(psi_bar, one));
    rho.add(1, 0, expi(mu) * ov(m0, m_psi) * ov(one, psi_bar));
    rho.add(0, 2, expi(-nu) * ov(m_phi, m0) * ov(phi_bar, one));
    rho.add(2, 0, expi(nu) * ov(m0, m_phi) * ov(one, phi_bar));
    rho.add(1, 2, expi(mu - nu) * ov(m_phi, m_psi) * ov(phi_bar, psi_bar));
    rho.add(2, 1, expi(nu - mu) * ov(m_psi, m_phi) * ov(psi_bar, phi_bar));
    return DensityMatrix({3}, rho.done());
}

// Alice's state before Bob acts on sum_k |k>|b_k>/2 with b = (psi1, bar1, psi2, bar2).
DensityMatrix four_label_initial(const Bases &b) {
    Expansion rho(4, 0.25);
    rho.add(0, 2, ov(b.psi2, b.psi1));
    rho.add(0, 3, ov(b.bar2, b.psi1));
    rho.add(1, 2, ov(b.psi2, b.bar1));
    rho.add(1, 3, ov(b.bar2, b.bar1));
    rho.add(2, 0, ov(b.psi1, b.psi2));
    rho.add(2, 1, ov(b.bar1, b.psi2));
    rho.add(3, 0, ov(b.psi1, b.bar2));
    rho.add(3, 1, ov(b.bar1, b.bar2));
    return DensityMatrix({4}, rho.done());
}

DensityMatrix y_gate(const ScenarioConfig &cfg, Stage stage) {
    const Bases b = bases_of(cfg);
    if (stage == Stage::before) {
        return four_label_initial(b);
    }
    Expansion rho(4, 0.25);
    rho.add(0, 2, ov(b.bar2, b.bar1));
    rho.add(0, 3, -ov(b.psi2, b.bar1));
    rho.add(1, 2, -ov(b.bar2, b.psi1));
    rho.add(1, 3, ov(b.psi2, b.psi1));
    // Conjugate of the (0,2) entry.
    rho.add(2, 0, ov(b.bar1, b.bar2));
    rho.add(2, 1, -ov(b.psi1, b.bar2));
    rho.add(3, 0, -ov(b.bar1, b.psi2));
    rho.add(3, 1, ov(b.psi1, b.psi2));
    return DensityMatrix({4}, rho.done());
}

DensityMatrix z_gate(const ScenarioConfig &cfg, Stage stage) {
    const Bases b = bases_of(cfg);
    if (stage == Stage::before) {
        return four_label_initial(b);
    }
    Expansion rho(4, 0.25);
    rho.add(0, 2, ov(b.psi2, b.psi1));
    rho.add(0, 3, -ov(b.bar2, b.psi1));
    rho.add(1, 2, -ov(b.psi2, b.bar1));
    rho.add(1, 3, ov(b.bar2, b.bar1));
    rho.add(2, 0, ov(b.psi1, b.psi2));
    rho.add(2, 1, -ov(b.bar1, b.psi2));
    rho.add(3, 0, -ov(b.psi1, b.bar2));
    rho.add(3, 1, ov(b.bar1, b.bar2));
    return DensityMatrix({4}, rho.done());
}

DensityMatrix hadamard(const ScenarioConfig &cfg, Stage stage) {
    const Bases b = bases_of(cfg);
    if (stage == Stage::before) {
        Expansion rho(2, 0.5);
        rho.add(0, 1, ov(b.psi2, b.psi1));
        rho.add(1, 0, ov(b.psi1, b.psi2));
        return DensityMatrix({2}, rho.done());
    }
    if (cfg.machine.phi1 != 0 || cfg.machine.phi2 != 0) {
        throw NoClosedForm("the Hadamard closed form assumes zero phases");
    }
    const Ket h1 = memory(cfg, basis_state_name(1, false));
    const Ket h2 = memory(cfg, basis_state_name(2, false));
    const Complex sum = ov(b.psi2, b.psi1) + ov(b.bar2, b.psi1) + ov(b.psi2, b.bar1) + ov(b.bar2, b.bar1);
    // (1/4)[2|0><0| + 2|1><1| + ...] = (1/2)[I + (1/2)(...)]
    Expansion rho(2, 0.5);
    rho.add(0, 1, 0.5 * sum * ov(h2, h1));
    rho.add(1, 0, 0.5 * std::conj(sum) * ov(h1, h2));
    return DensityMatrix({2}, rho.done());
}

DensityMatrix cnot(const ScenarioConfig &cfg, Stage stage) {
    const Bases b = bases_of(cfg);
    const Complex bars_21 = ov(b.bar2, b.bar1);
    const Complex bars_12 = ov(b.bar1, b.bar2);
    Expansion rho(4, 0.25);
    if (stage == Stage::before) {
        rho.add(2, 0, bars_12 * ov(b.psi1, b.psi2));
        rho.add(3, 0, bars_12 * ov(b.psi1, b.bar2));
        rho.add(2, 1, bars_12 * ov(b.bar1, b.psi2));
        rho.add(3, 1, bars_12 * ov(b.bar1, b.bar2));
        rho.add(0, 2, bars_21 * ov(b.psi2, b.psi1));
        rho.add(1, 2, bars_21 * ov(b.psi2, b.bar1));
        rho.add(0, 3, bars_21 * ov(b.bar2, b.psi1));
        rho.add(1, 3, bars_21 * ov(b.bar2, b.bar1));
    } else {
        rho.add(2, 0, bars_12 * ov(b.bar1, b.bar2));
        rho.add(3, 0, bars_12 * ov(b.bar1, b.psi2));
        rho.add(2, 1, bars_12 * ov(b.psi1, b.bar2));
        rho.add(3, 1, bars_12 * ov(b.psi1, b.psi2));
        rho.add(0, 2, bars_21 * ov(b.bar2, b.bar1));
        rho.add(1, 2, bars_21 * ov(b.bar2, b.psi1));
        rho.add(0, 3, bars_21 * ov(b.psi2, b.bar1));
        rho.add(1, 3, bars_21 * ov(b.psi2, b.psi1));
    }
    return DensityMatrix({4}, rho.done());
}

}  // namespace

bool has_closed_form(ScenarioKind kind) {
    return kind != ScenarioKind::deletion;
}

DensityMatrix closed_form_rho(ScenarioKind kind, Stage stage, const ScenarioConfig &input) {
    if (!has_closed_form(kind)) {
        throw NoClosedForm(std::string(to_string(kind)) + " has no closed form");
    }
    ScenarioConfig unresolved = input;
    unresolved.kind = kind;
    const ScenarioConfig cfg = resolve(unresolved);
    if (stage == Stage::after && !cfg.machine.enabled && mode_of(kind) == SignallingMode::remote_change) {
        throw NoClosedForm("closed forms describe the hypothetical machine, which is disabled");
    }
    if (!cfg.machine.enabled && mode_of(kind) == SignallingMode::basis_dependence) {
        throw NoClosedForm("closed forms describe the hypothetical machine, which is disabled");
    }
    switch (kind) {
        case ScenarioKind::cloning:
            return cloning(cfg, stage);
        case ScenarioKind::general_op:
            return general_op(cfg, stage);
        case ScenarioKind::not_gate:
            return not_gate(cfg, stage);
        case ScenarioKind::y_gate:
            return y_gate(cfg, stage);
        case ScenarioKind::z_gate:
            return z_gate(cfg, stage);
        case ScenarioKind::hadamard:
            return hadamard(cfg, stage);
        case ScenarioKind::cnot:
            return cnot(cfg, stage);
        case ScenarioKind::deletion:
            break;
    }
    throw NoClosedForm(std::string(to_string(kind)) + " has no closed form");
}

}  // namespace nosig
