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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nosig/errors.hpp"
#include "nosig/random.hpp"
#include "nosig/scenario.hpp"
#include "oracles.hpp"

using namespace nosig;

namespace {

const double PI = std::numbers::pi;

ScenarioConfig with_basis2(ScenarioKind kind, double theta, double phi) {
    ScenarioConfig cfg = ScenarioConfig::defaults(kind);
    cfg.basis2 = BlochAngles::checked(theta, phi);
    return cfg;
}

}  // namespace

TEST(ScenarioKind, NamesRoundTrip) {
    for (ScenarioKind kind : ALL_SCENARIOS) {
        EXPECT_EQ(parse_scenario_kind(to_string(kind)), kind);
    }
    EXPECT_FALSE(parse_scenario_kind("teleport").has_value());
    EXPECT_EQ(mode_of(ScenarioKind::cloning), SignallingMode::basis_dependence);
    EXPECT_EQ(mode_of(ScenarioKind::cnot), SignallingMode::remote_change);
    EXPECT_EQ(to_string(Verdict::no_signalling), "NO_SIGNALLING");
}

TEST(Scenarios, GenericConfigsSignal) {
    for (ScenarioKind kind : ALL_SCENARIOS) {
        const auto r = run_scenario(ScenarioConfig::generic(kind));
        EXPECT_EQ(r.verdict, Verdict::signalling) << to_string(kind);
        EXPECT_GT(r.distance, 1e-3) << to_string(kind);
    }
}

TEST(Scenarios, CoincidentBasesDoNotSignal) {
    for (ScenarioKind kind : ALL_SCENARIOS) {
        if (kind == ScenarioKind::not_gate) {
            continue;
        }
        Rng rng(31);
        ScenarioConfig cfg = ScenarioConfig::defaults(kind);
        cfg.basis1 = cfg.basis2 = random_bloch(rng);
        const auto r = run_scenario(cfg);
        EXPECT_LT(r.distance, 1e-10) << to_string(kind);
        EXPECT_EQ(r.verdict, Verdict::no_signalling);
    }
}

TEST(Scenarios, DisabledMachineNeverSignals) {
    Rng rng(32);
    for (ScenarioKind kind : ALL_SCENARIOS) {
        ScenarioConfig cfg = random_scenario_config(rng, kind, false);
        cfg.machine.enabled = false;
        EXPECT_LT(run_scenario(cfg).distance, 1e-12) << to_string(kind);
    }
}

TEST(Scenarios, GenuineUnitariesNeverSignal) {
    Rng rng(33);
    for (ScenarioKind kind : ALL_SCENARIOS) {
        for (int trial = 0; trial < 10; ++trial) {
            const ScenarioConfig cfg = random_scenario_config(rng, kind);
            const auto r = run_with_unitary(cfg, random_unitary(rng, bob_input_dim(kind)));
            EXPECT_LT(r.distance, 1e-10) << to_string(kind);
            EXPECT_FALSE(r.closed_form_residual.has_value());
        }
    }
    EXPECT_THROW(run_with_unitary(ScenarioConfig::defaults(ScenarioKind::cnot), CMatrix::identity(2)), DimMismatch);
}

TEST(Scenarios, CloningMatchesSpectrumOracle) {
    Rng rng(34);
    for (int trial = 0; trial < 30; ++trial) {
        const double theta = std::uniform_real_distribution<double>(0, PI)(rng);
        const auto r = run_scenario(with_basis2(ScenarioKind::cloning, theta, 0));
        const auto want = oracle::cloning_difference_spectrum(theta);
        const auto got = hermitian_eigenvalues(r.rho_right.matrix() - r.rho_left.matrix());
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_NEAR(got[k], want[k], 1e-10);
        }
    }
    EXPECT_NEAR(run_scenario(with_basis2(ScenarioKind::cloning, PI / 2, 0)).distance, 0.5, 1e-12);
}

TEST(Scenarios, ZGateDistanceIsHalfAngleSine) {
    Rng rng(35);
    for (int trial = 0; trial < 30; ++trial) {
        const double theta = std::uniform_real_distribution<double>(0, PI)(rng);
        const double phi = std::uniform_real_distribution<double>(0, 2 * PI)(rng);
        const auto r = run_scenario(with_basis2(ScenarioKind::z_gate, theta, phi));
        EXPECT_NEAR(r.distance, std::sin(theta / 2), 1e-10);
        const auto want = oracle::z_gate_difference_spectrum(theta, phi);
        const auto got = hermitian_eigenvalues(r.rho_right.matrix() - r.rho_left.matrix());
        for (std::size_t k = 0; k < 4; ++k) {
            EXPECT_NEAR(got[k], want[k], 1e-10);
        }
    }
}

TEST(Scenarios, NotGateMatchesOracle) {
    Rng rng(36);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const double alpha = unit(rng) * PI / 2;
        const double beta = unit(rng) * PI / 2;
        const double t = unit(rng) * PI;
        const double mu = unit(rng) * 2 * PI;
        const double nu = unit(rng) * 2 * PI;
        ScenarioConfig cfg = ScenarioConfig::defaults(ScenarioKind::not_gate);
        cfg.not_params = {std::cos(alpha), std::sin(alpha), std::cos(beta), std::sin(beta), t, false};
        cfg.machine.mu = mu;
        cfg.machine.nu = nu;
        const double want =
            oracle::not_gate_distance(std::cos(alpha), std::sin(alpha), std::cos(beta), std::sin(beta), t, mu, nu);
        EXPECT_NEAR(run_scenario(cfg).distance, want, 1e-10);
    }
}

TEST(Scenarios, NotGateGreatCircleCancellation) {
    ScenarioConfig cfg = ScenarioConfig::defaults(ScenarioKind::not_gate);
    set_parameter(cfg, "theta", 0);
    set_parameter(cfg, "mu", PI);
    set_parameter(cfg, "nu", PI);
    EXPECT_LT(run_scenario(cfg).distance, 1e-10);
    set_parameter(cfg, "mu", 0);
    EXPECT_GT(run_scenario(cfg).distance, 0.1);
}

TEST(Scenarios, GeneralOpMachineFirstEqualsMeasureFirst) {
    const ScenarioConfig cfg = resolve(ScenarioConfig::generic(ScenarioKind::general_op));
    const auto report = run_scenario(cfg);
    const MachineConfig mc = machine_config(cfg);
    const auto machine = instantiate_machine(MachineKind::general_op, mc);
    const auto domain = machine_domain(MachineKind::general_op, mc);
    // (|01> - |10>)/sqrt(2) with |1> = -psi1_bar and |0> = psi1.
    const double h = 1 / std::sqrt(2.0);
    const TermDecomposition singlet(2, {{0, basis_state_name(1, true), -h}, {1, basis_state_name(1, false), -h}});
    EXPECT_LT(trace_distance(density_of(materialize(singlet, domain)),
                             density_of(singlet_in_basis(QubitBasis::computational()))),
              1e-12);
    const Ket after = rewrite_entangled(singlet, machine, domain);
    const std::vector<Ket> basis{Ket::basis(2, 0), Ket::basis(2, 1)};
    const auto bob = ensemble_density(measure_alice(after, basis, std::vector<std::size_t>{0}));
    EXPECT_LT(bob.matrix().max_abs_diff(report.rho_left.matrix()), 1e-12);
}

TEST(Scenarios, DeletionDependsOnBasis) {
    const auto generic = run_scenario(ScenarioConfig::generic(ScenarioKind::deletion));
    EXPECT_EQ(generic.verdict, Verdict::signalling);
    EXPECT_FALSE(generic.closed_form_residual.has_value());
    ScenarioConfig blank_sigma = ScenarioConfig::generic(ScenarioKind::deletion);
    blank_sigma.machine.sigma = CVector{0.0, 1.0};
    EXPECT_GT(run_scenario(blank_sigma).distance, 1e-3);
}

TEST(Scenarios, HadamardPhasesHaveNoClosedForm) {
    ScenarioConfig cfg = ScenarioConfig::generic(ScenarioKind::hadamard);
    cfg.machine.phi2 = 0.4;
    const auto r = run_scenario(cfg);
    EXPECT_FALSE(r.closed_form_residual.has_value());
    EXPECT_GT(r.distance, 1e-3);
}

TEST(Scenarios, VerdictFollowsThreshold) {
    ScenarioConfig cfg = ScenarioConfig::generic(ScenarioKind::z_gate);
    cfg.signalling_threshold = 0.99;
    EXPECT_EQ(run_scenario(cfg).verdict, Verdict::no_signalling);
}

TEST(Resolve, FillsDefaultsAndRejectsBadConfig) {
    const auto flip = resolve(ScenarioConfig::defaults(ScenarioKind::not_gate));
    EXPECT_EQ(flip.machine.memory.size(), 3u);
    const auto del = resolve(ScenarioConfig::defaults(ScenarioKind::deletion));
    ASSERT_TRUE(del.machine.sigma.has_value());
    EXPECT_EQ(*del.machine.sigma, CVector::basis(2, 0));
    EXPECT_EQ(resolve(del), del);

    ScenarioConfig bad = ScenarioConfig::defaults(ScenarioKind::cloning);
    bad.machine.memory["psi1"] = CVector{1.0};
    EXPECT_THROW(resolve(bad), BadConfig);
    bad = ScenarioConfig::defaults(ScenarioKind::cloning);
    bad.machine.sigma = CVector{1.0, 0.0};
    EXPECT_THROW(resolve(bad), BadConfig);
    bad = ScenarioConfig::defaults(ScenarioKind::not_gate);
    bad.not_params.a = 0.9;
    EXPECT_THROW(resolve(bad), BadConfig);
    bad = ScenarioConfig::defaults(ScenarioKind::not_gate);
    bad.not_params.enforce_constraints = true;
    bad.not_params.theta = 0;
    EXPECT_THROW(resolve(bad), BadConfig);
    bad = ScenarioConfig::defaults(ScenarioKind::hadamard);
    bad.machine.memory_dim = 2;
    bad.machine.memory["psi1"] = CVector{1.0, 1.0};
    EXPECT_THROW(resolve(bad), BadConfig);
    bad = ScenarioConfig::defaults(ScenarioKind::z_gate);
    bad.signalling_threshold = std::nan("");
    EXPECT_THROW(resolve(bad), BadConfig);
    bad = ScenarioConfig::defaults(ScenarioKind::z_gate);
    bad.basis2.theta = 4;
    EXPECT_THROW(resolve(bad), BadConfig);
}

TEST(Resolve, GeneralOpDefaultAncillaIsAFunctionOfTheState) {
    const auto same = resolve(ScenarioConfig::defaults(ScenarioKind::general_op));
    EXPECT_EQ(same.machine.ancilla.at("psi1"), same.machine.ancilla.at("psi2"));
    EXPECT_EQ(same.machine.ancilla.at("psi1_bar"), same.machine.ancilla.at("psi2_bar"));
    EXPECT_NE(same.machine.ancilla.at("psi1"), same.machine.ancilla.at("psi1_bar"));
    const auto generic = resolve(ScenarioConfig::generic(ScenarioKind::general_op));
    EXPECT_EQ(generic.machine.ancilla.at("psi2_bar"), CVector::basis(4, 3));
}

TEST(Parameters, SetAndValidate) {
    ScenarioConfig cfg = ScenarioConfig::defaults(ScenarioKind::not_gate);
    set_parameter(cfg, "a", 0.6);
    EXPECT_NEAR(cfg.not_params.b, 0.8, 1e-15);
    set_parameter(cfg, "alpha", PI / 3);
    EXPECT_NEAR(cfg.not_params.a, 0.5, 1e-15);
    EXPECT_THROW(set_parameter(cfg, "a", 1.5), BadSpec);
    EXPECT_THROW(set_parameter(cfg, "basis2_theta", 1), BadSpec);
    EXPECT_TRUE(is_phase_parameter(ScenarioKind::not_gate, "mu"));
    EXPECT_FALSE(is_phase_parameter(ScenarioKind::not_gate, "theta"));

    ScenarioConfig z = ScenarioConfig::defaults(ScenarioKind::z_gate);
    set_parameter(z, "basis2_phi", -PI / 2);
    EXPECT_NEAR(z.basis2.phi, 3 * PI / 2, 1e-15);
    EXPECT_THROW(set_parameter(z, "basis2_theta", -0.1), BadSpec);
    EXPECT_THROW(set_parameter(z, "mu", 1), BadSpec);
    EXPECT_TRUE(is_parameter(ScenarioKind::hadamard, "phi1"));
    EXPECT_FALSE(is_parameter(ScenarioKind::z_gate, "phi1"));
}
