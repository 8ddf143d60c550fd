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
#include "nosig/machine.hpp"
#include "nosig/random.hpp"

using namespace nosig;

namespace {

const double PI = std::numbers::pi;

MachineConfig two_bases(const BlochAngles &second) {
    MachineConfig mc;
    mc.bases = {QubitBasis::computational(), QubitBasis::from_bloch(second)};
    return mc;
}

double ket_gap(const Ket &a, const Ket &b) {
    return (a.amplitudes() - b.amplitudes()).norm();
}

}  // namespace

TEST(StateRegistry, LookupIsByName) {
    StateRegistry r;
    r.add("x", Ket::basis(2, 0));
    EXPECT_TRUE(r.contains("x"));
    EXPECT_FALSE(r.contains("y"));
    EXPECT_THROW(r.at("y"), UnmatchedTerm);
    EXPECT_THROW(r.add("x", Ket::basis(2, 1)), BadConfig);
    EXPECT_THROW(r.add("", Ket::basis(2, 1)), BadConfig);
}

TEST(HypotheticalMachine, ValidatesRules) {
    const Ket q = Ket::basis(2, 0);
    const Ket blank = Ket::basis(1, 0);
    EXPECT_THROW(HypotheticalMachine(MachineKind::z_gate, {{"a", 2.0, q, blank}}), BadConfig);
    EXPECT_THROW(HypotheticalMachine(MachineKind::z_gate, {{"a", 1.0, q, blank}, {"a", 1.0, q, blank}}), BadConfig);
    EXPECT_THROW(HypotheticalMachine(MachineKind::z_gate, {{"a", 1.0, q, blank}, {"b", 1.0, Ket::basis(3, 0), blank}}),
                 BadConfig);
    const HypotheticalMachine m(MachineKind::z_gate, {{"a", 1.0, q, blank}});
    EXPECT_THROW(m.rule("b"), UnmatchedTerm);
    EXPECT_EQ(m.find("b"), nullptr);
}

TEST(Machines, ClonerCopiesEachDomainState) {
    const MachineConfig mc = two_bases({PI / 2, 0});
    const auto m = instantiate_machine(MachineKind::cloner, mc);
    const auto domain = machine_domain(MachineKind::cloner, mc);
    for (const auto &name : domain.names()) {
        const Ket &x = domain.at(name);
        EXPECT_LT(ket_gap(m.rule(name).output(), tensor_product(x, x)), 1e-15) << name;
    }
}

TEST(Machines, YAndZActOnBasisStates) {
    const MachineConfig mc = two_bases({PI / 3, 1.0});
    const auto y = instantiate_machine(MachineKind::y_gate, mc);
    const auto z = instantiate_machine(MachineKind::z_gate, mc);
    const std::string psi = basis_state_name(2, false);
    const std::string bar = basis_state_name(2, true);
    EXPECT_EQ(y.rule(psi).phase, Complex(0, -1));
    EXPECT_EQ(y.rule(bar).phase, Complex(0, 1));
    EXPECT_EQ(z.rule(psi).phase, Complex(1));
    EXPECT_EQ(z.rule(bar).phase, Complex(-1));
    EXPECT_LT(ket_gap(y.rule(psi).output_system, mc.bases[1].psi_bar()), 1e-15);
    EXPECT_LT(ket_gap(z.rule(bar).output_system, mc.bases[1].psi_bar()), 1e-15);
}

TEST(Machines, CnotTruthTableOverNamedPairs) {
    const MachineConfig mc = two_bases({PI / 2, PI / 4});
    const auto m = instantiate_machine(MachineKind::cnot, mc);
    const auto domain = machine_domain(MachineKind::cnot, mc);
    const std::string p = basis_state_name(2, false);
    const std::string b = basis_state_name(2, true);
    EXPECT_LT(ket_gap(m.rule(pair_name(b, p)).output(), domain.at(pair_name(b, b))), 1e-15);
    EXPECT_LT(ket_gap(m.rule(pair_name(b, b)).output(), domain.at(pair_name(b, p))), 1e-15);
    EXPECT_LT(ket_gap(m.rule(pair_name(p, b)).output(), domain.at(pair_name(p, b))), 1e-15);
}

TEST(Machines, FlipSendsStatesToComplementsWithPhases) {
    MachineConfig mc;
    mc.flip_psi = Ket::normalized({2}, CVector{0.6, 0.8});
    mc.flip_phi = ket_from_bloch({1.0, 2.0});
    mc.phases = {0.3, -1.1};
    const auto m = instantiate_machine(MachineKind::flip, mc);
    EXPECT_LT(ket_gap(m.rule(std::string(FLIP_ZERO)).output(), Ket::basis(2, 1)), 1e-15);
    const auto &r = m.rule(std::string(FLIP_PSI));
    EXPECT_NEAR(std::arg(r.phase), 0.3, 1e-15);
    EXPECT_LT(std::abs(overlap(r.output_system, *mc.flip_psi)), 1e-15);
    EXPECT_NEAR(std::arg(m.rule(std::string(FLIP_PHI)).phase), -1.1, 1e-15);
}

TEST(Machines, HadamardRules) {
    MachineConfig mc = two_bases({PI / 3, 0});
    mc.phases = {0, 0.5};
    const auto m = instantiate_machine(MachineKind::hadamard, mc);
    const Ket &psi = mc.bases[1].psi();
    const Ket &bar = mc.bases[1].psi_bar();
    const CVector want = Complex(1 / std::sqrt(2.0)) * (psi.amplitudes() + std::polar(1.0, 0.5) * bar.amplitudes());
    EXPECT_LT((m.rule(basis_state_name(2, false)).output().amplitudes() - want).norm(), 1e-15);
}

TEST(Machines, GeneralOpAttachesAncilla) {
    const MachineConfig mc = two_bases({PI / 2, 0});
    const auto m = instantiate_machine(MachineKind::general_op, mc);
    EXPECT_EQ(m.machine_dim(), 4u);
    EXPECT_EQ(m.rule(basis_state_name(1, true)).machine_state.amplitudes(), CVector::basis(4, 1));
}

TEST(Machines, DeleterMapsEqualPairsAndKeepsCrossPairs) {
    MachineConfig mc = two_bases({PI / 2, 0});
    const auto m = instantiate_machine(MachineKind::deleter, mc);
    const auto domain = machine_domain(MachineKind::deleter, mc);
    const std::string p = basis_state_name(1, false);
    const std::string b = basis_state_name(1, true);
    const Ket sigma = Ket::basis(2, 0);
    EXPECT_LT(ket_gap(m.rule(pair_name(b, b)).output(), tensor_product(mc.bases[0].psi_bar(), sigma)), 1e-15);
    EXPECT_LT(ket_gap(m.rule(pair_name(p, b)).output(), domain.at(pair_name(p, b))), 1e-15);
}

TEST(Rewrite, UnmatchedTermsThrow) {
    const MachineConfig mc = two_bases({PI / 2, 0});
    const auto m = instantiate_machine(MachineKind::z_gate, mc);
    auto domain = machine_domain(MachineKind::z_gate, mc);
    domain.add("stranger", ket_from_bloch({1.0, 1.0}));
    const TermDecomposition bad(2, {{0, "stranger", 1.0}});
    EXPECT_THROW(rewrite_entangled(bad, m, domain), UnmatchedTerm);
    const TermDecomposition missing(2, {{0, "nowhere", 1.0}});
    EXPECT_THROW(rewrite_entangled(missing, m, domain), UnmatchedTerm);
}

TEST(Rewrite, TermDecompositionValidation) {
    EXPECT_THROW(TermDecomposition(2, {}), BadConfig);
    EXPECT_THROW(TermDecomposition(2, {{2, "x", 1.0}}), BadConfig);
    EXPECT_THROW(TermDecomposition(2, {{0, "x", 1.0}, {1, "y", 1.0}}), BadConfig);
    EXPECT_TRUE(TermDecomposition(2, {{0, "x", 1.0}}).has_distinct_labels());
}

TEST(Rewrite, RewritingIsNotLinearExtension) {
    // The Z machine on a coincident basis flips only the named barred state.
    const MachineConfig mc = two_bases({0, 0});
    const auto m = instantiate_machine(MachineKind::z_gate, mc);
    const auto domain = machine_domain(MachineKind::z_gate, mc);
    const double h = 1 / std::sqrt(2.0);
    const TermDecomposition d(2, {{0, basis_state_name(1, false), h}, {1, basis_state_name(2, true), h}});
    const Ket out = rewrite_entangled(d, m, domain);
    const Ket in = materialize(d, domain);
    EXPECT_NEAR(std::abs(overlap(in, out)), 0.0, 1e-15);
}

TEST(Rewrite, EnsembleCarriesMemberPhase) {
    const MachineConfig mc = two_bases({PI / 2, 0});
    const auto m = instantiate_machine(MachineKind::y_gate, mc);
    const auto domain = machine_domain(MachineKind::y_gate, mc);
    const std::string name = basis_state_name(2, false);
    const Complex phase = std::polar(1.0, 0.7);
    const Ensemble e({{1.0, domain.at(name).phased(phase), name}});
    const Ensemble out = apply_to_ensemble(e, m, domain);
    const Ket want = m.rule(name).output().phased(phase);
    EXPECT_LT(ket_gap(out.members()[0].state, want), 1e-15);

    const Ensemble wrong({{1.0, Ket::basis(2, 1), name}});
    EXPECT_THROW(apply_to_ensemble(wrong, m, domain), UnmatchedTerm);
    const Ensemble unlabelled({{1.0, Ket::basis(2, 1), ""}});
    EXPECT_THROW(apply_to_ensemble(unlabelled, m, domain), UnmatchedTerm);
}

TEST(Names, Helpers) {
    EXPECT_EQ(basis_state_name(2, true), "psi2_bar");
    EXPECT_EQ(pair_name("a", "b"), "a.b");
    EXPECT_EQ(to_string(MachineKind::general_op), "general_op");
}
