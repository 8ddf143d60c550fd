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

#include "nosig/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <utility>
#include <vector>

#include "nosig/errors.hpp"

namespace nosig {

std::string_view to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::cloning:
            return "cloning";
        case ScenarioKind::general_op:
            return "general_op";
        case ScenarioKind::deletion:
            return "deletion";
        case ScenarioKind::not_gate:
            return "not_gate";
        case ScenarioKind::y_gate:
            return "y_gate";
        case ScenarioKind::z_gate:
            return "z_gate";
        case ScenarioKind::hadamard:
            return "hadamard";
        case ScenarioKind::cnot:
            return "cnot";
    }
    return "unknown";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) {
    for (ScenarioKind kind : ALL_SCENARIOS) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

MachineKind machine_kind(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::cloning:
            return MachineKind::cloner;
        case ScenarioKind::general_op:
            return MachineKind::general_op;
        case ScenarioKind::deletion:
            return MachineKind::deleter;
        case ScenarioKind::not_gate:
            return MachineKind::flip;
        case ScenarioKind::y_gate:
            return MachineKind::y_gate;
        case ScenarioKind::z_gate:
            return MachineKind::z_gate;
        case ScenarioKind::hadamard:
            return MachineKind::hadamard;
        case ScenarioKind::cnot:
            return MachineKind::cnot;
    }
    throw BadConfig("unknown scenario kind");
}

std::string_view to_string(SignallingMode mode) {
    return mode == SignallingMode::remote_change ? "remote_change" : "basis_dependence";
}

SignallingMode mode_of(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::cloning:
        case ScenarioKind::general_op:
        case ScenarioKind::deletion:
            return SignallingMode::basis_dependence;
        default:
            return SignallingMode::remote_change;
    }
}

std::string_view to_string(Verdict verdict) {
    return verdict == Verdict::signalling ? "SIGNALLING" : "NO_SIGNALLING";
}

ScenarioConfig ScenarioConfig::defaults(ScenarioKind kind) {
    const double r = 1 / std::numbers::sqrt2;
    ScenarioConfig cfg;
    cfg.kind = kind;
    cfg.not_params = NotGateParams{r, r, r, r, std::numbers::pi / 2, false};
    return cfg;
}

ScenarioConfig ScenarioConfig::generic(ScenarioKind kind) {
    ScenarioConfig cfg = defaults(kind);
    const double theta = kind == ScenarioKind::hadamard ? std::numbers::pi / 3 : std::numbers::pi / 2;
    cfg.basis2 = BlochAngles{theta, std::numbers::pi / 4};
    return cfg;
}

namespace {

constexpr double CONSTRAINT_TOL = 1e-12;

bool uses_bases(ScenarioKind kind) {
    return kind != ScenarioKind::not_gate;
}

Dims cross_output_dims(std::size_t memory_dim) {
    return memory_dim == 1 ? Dims{2, 2} : Dims{2, 2, memory_dim};
}

Ket to_ket(Dims dims, const CVector &v, const std::string &what) {
    try {
        return Ket(std::move(dims), v);
    } catch (const Error &e) {
        throw BadConfig(what + ": " + e.what());
    }
}

void check_angles(const BlochAngles &a, std::string_view which) {
    try {
        (void)BlochAngles::checked(a.theta, a.phi);
    } catch (const OutOfRange &e) {
        throw BadConfig(std::string(which) + ": " + e.what());
    }
}

// Machine config without memory/ancilla overrides, only for name enumeration.
MachineConfig skeleton(const ScenarioConfig &cfg) {
    MachineConfig mc;
    if (uses_bases(cfg.kind)) {
        mc.bases = {QubitBasis::from_bloch(cfg.basis1), QubitBasis::from_bloch(cfg.basis2)};
    }
    return mc;
}

template <typename Map>
void check_names(const Map &given, const std::vector<std::string> &allowed, std::string_view what,
                 ScenarioKind kind) {
    for (const auto &[name, value] : given) {
        if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
            throw BadConfig(std::string(what) + " '" + name + "' is not used by " + std::string(to_string(kind)));
        }
    }
}

}  // namespace

ScenarioConfig resolve(const ScenarioConfig &input) {
    ScenarioConfig cfg = input;
    if (!(cfg.signalling_threshold >= 0) || !std::isfinite(cfg.signalling_threshold)) {
        throw BadConfig("signalling_threshold must be a finite nonnegative number");
    }
    check_angles(cfg.basis1, "basis1");
    check_angles(cfg.basis2, "basis2");

    const NotGateParams &p = cfg.not_params;
    for (double v : {p.a, p.b, p.c, p.d, p.theta}) {
        if (!std::isfinite(v)) {
            throw BadConfig("not_gate parameters must be finite");
        }
    }
    if (std::abs(p.a * p.a + p.b * p.b - 1) > CONSTRAINT_TOL || std::abs(p.c * p.c + p.d * p.d - 1) > CONSTRAINT_TOL) {
        throw BadConfig("not_gate parameters need a^2 + b^2 = c^2 + d^2 = 1");
    }
    if (p.enforce_constraints && !(p.a > 0 && p.c > 0 && p.theta > 0 && p.theta < std::numbers::pi)) {
        throw BadConfig("not_gate parameters need a > 0, c > 0 and 0 < theta < pi");
    }
    for (double v : {cfg.machine.mu, cfg.machine.nu, cfg.machine.phi1, cfg.machine.phi2}) {
        if (!std::isfinite(v)) {
            throw BadConfig("machine phases must be finite");
        }
    }

    MachineOverrides &m = cfg.machine;
    if (m.memory_dim == 0 || m.ancilla_dim == 0) {
        throw BadConfig("memory_dim and ancilla_dim must be positive");
    }
    const MachineKind mk = machine_kind(cfg.kind);
    const MachineConfig names_cfg = skeleton(cfg);
    const auto mem_names = memory_names(mk, names_cfg);
    const auto anc_names = ancilla_names(mk, names_cfg);
    const auto cross_names = cross_output_names(mk, names_cfg);
    check_names(m.memory, mem_names, "memory state", cfg.kind);
    check_names(m.ancilla, anc_names, "ancilla state", cfg.kind);
    check_names(m.cross_outputs, cross_names, "cross output", cfg.kind);
    if (m.sigma && cfg.kind != ScenarioKind::deletion) {
        throw BadConfig("sigma is only used by deletion");
    }

    for (const auto &name : mem_names) {
        auto [it, inserted] = m.memory.try_emplace(name, CVector::basis(m.memory_dim, 0));
        (void)to_ket({m.memory_dim}, it->second, "memory state '" + name + "'");
    }
    // Default F: one basis vector per distinct input state, so that inputs
    // equal up to phase share an ancilla and F stays a function of the state.
    if (!anc_names.empty()) {
        const StateRegistry domain = machine_domain(mk, names_cfg);
        std::vector<std::pair<const Ket *, std::size_t>> assigned;
        std::size_t next = 0;
        for (const auto &name : anc_names) {
            const Ket &state = domain.at(name);
            std::size_t index = next;
            for (const auto &[seen, seen_index] : assigned) {
                if (std::abs(std::abs(overlap(*seen, state)) - 1) < EQUALITY_TOL) {
                    index = seen_index;
                    break;
                }
            }
            if (index == next) {
                assigned.emplace_back(&state, next++);
            }
            if (!m.ancilla.count(name)) {
                if (index >= m.ancilla_dim) {
                    throw BadConfig("default ancilla states need a larger ancilla_dim");
                }
                m.ancilla.emplace(name, CVector::basis(m.ancilla_dim, index));
            }
            (void)to_ket({m.ancilla_dim}, m.ancilla.at(name), "ancilla state '" + name + "'");
        }
    }
    for (const auto &[name, v] : m.cross_outputs) {
        (void)to_ket(cross_output_dims(m.memory_dim), v, "cross output '" + name + "'");
    }
    if (cfg.kind == ScenarioKind::deletion) {
        if (!m.sigma) {
            m.sigma = CVector::basis(2, 0);
        }
        (void)to_ket({2}, *m.sigma, "sigma");
    }
    return cfg;
}

MachineConfig machine_config(const ScenarioConfig &cfg) {
    MachineConfig mc = skeleton(cfg);
    const MachineOverrides &m = cfg.machine;
    if (cfg.kind == ScenarioKind::not_gate) {
        const NotGateParams &p = cfg.not_params;
        mc.flip_psi = to_ket({2}, CVector{p.a, p.b}, "psi");
        mc.flip_phi = to_ket({2}, CVector{p.c, std::polar(p.d, p.theta)}, "phi");
        mc.phases = {m.mu, m.nu};
    } else if (cfg.kind == ScenarioKind::hadamard) {
        mc.phases = {m.phi1, m.phi2};
    }
    mc.memory_dim = m.memory_dim;
    for (const auto &[name, v] : m.memory) {
        mc.memory.emplace(name, to_ket({m.memory_dim}, v, "memory state '" + name + "'"));
    }
    mc.ancilla_dim = m.ancilla_dim;
    for (const auto &[name, v] : m.ancilla) {
        mc.ancilla.emplace(name, to_ket({m.ancilla_dim}, v, "ancilla state '" + name + "'"));
    }
    if (m.sigma) {
        mc.sigma = to_ket({2}, *m.sigma, "sigma");
    }
    for (const auto &[name, v] : m.cross_outputs) {
        mc.cross_outputs.emplace(name, to_ket(cross_output_dims(m.memory_dim), v, "cross output '" + name + "'"));
    }
    return mc;
}

std::size_t bob_input_dim(ScenarioKind kind) {
    return kind == ScenarioKind::deletion || kind == ScenarioKind::cnot ? 4 : 2;
}

namespace {

// Bob's local action on one of Alice's collapsed branches, or on the whole
// shared state for remote-change kinds.
using EnsembleAction = std::function<Ensemble(const Ensemble &)>;

struct RemoteSetup {
    TermDecomposition decomposition;
    StateRegistry registry;
};

RemoteSetup remote_setup(const ScenarioConfig &cfg, const MachineConfig &mc) {
    StateRegistry registry = machine_domain(machine_kind(cfg.kind), mc);
    const auto p1 = basis_state_name(1, false), b1 = basis_state_name(1, true);
    const auto p2 = basis_state_name(2, false), b2 = basis_state_name(2, true);
    switch (cfg.kind) {
        case ScenarioKind::not_gate: {
            const double w = 1 / std::sqrt(3.0);
            return {TermDecomposition(3, {{0, std::string(FLIP_ZERO), w},
                                          {1, std::string(FLIP_PSI), w},
                                          {2, std::string(FLIP_PHI), w}}),
                    std::move(registry)};
        }
        case ScenarioKind::y_gate:
        case ScenarioKind::z_gate:
            return {TermDecomposition(4, {{0, p1, 0.5}, {1, b1, 0.5}, {2, p2, 0.5}, {3, b2, 0.5}}),
                    std::move(registry)};
        case ScenarioKind::hadamard: {
            const double w = 1 / std::numbers::sqrt2;
            return {TermDecomposition(2, {{0, p1, w}, {1, p2, w}}), std::move(registry)};
        }
        case ScenarioKind::cnot:
            return {TermDecomposition(4, {{0, pair_name(b1, p1), 0.5},
                                          {1, pair_name(b1, b1), 0.5},
                                          {2, pair_name(b2, p2), 0.5},
                                          {3, pair_name(b2, b2), 0.5}}),
                    std::move(registry)};
        default:
            throw BadConfig(std::string(to_string(cfg.kind)) + " is not a remote-change scenario");
    }
}

// Bob-side ensemble after Alice measures in basis `which` (1 or 2) and before
// Bob acts. Members are labelled with the registry names of Bob's states.
Ensemble collapsed_ensemble(const ScenarioConfig &cfg, std::size_t which) {
    const QubitBasis basis = QubitBasis::from_bloch(which == 1 ? cfg.basis1 : cfg.basis2);
    const auto psi = basis_state_name(which, false);
    const auto bar = basis_state_name(which, true);
    const Ket singlet = singlet_in_basis(QubitBasis::computational());

    if (cfg.kind == ScenarioKind::deletion) {
        // Alice holds slots 0, 1 and Bob slots 2, 3; singlets pair 0-2 and 1-3.
        CVector amps(16);
        for (std::size_t a1 = 0; a1 < 2; ++a1) {
            for (std::size_t a2 = 0; a2 < 2; ++a2) {
                for (std::size_t b1 = 0; b1 < 2; ++b1) {
                    for (std::size_t b2 = 0; b2 < 2; ++b2) {
                        amps[((a1 * 2 + a2) * 2 + b1) * 2 + b2] =
                            singlet.amplitudes()[a1 * 2 + b1] * singlet.amplitudes()[a2 * 2 + b2];
                    }
                }
            }
        }
        const Ket shared({2, 2, 2, 2}, std::move(amps));
        const std::vector<Ket> alice_basis = {
            tensor_product(basis.psi(), basis.psi()), tensor_product(basis.psi(), basis.psi_bar()),
            tensor_product(basis.psi_bar(), basis.psi()), tensor_product(basis.psi_bar(), basis.psi_bar())};
        const std::vector<std::string> labels = {pair_name(bar, bar), pair_name(bar, psi), pair_name(psi, bar),
                                                 pair_name(psi, psi)};
        const std::array<std::size_t, 2> alice = {0, 1};
        return measure_alice(shared, alice_basis, alice, labels);
    }

    const std::vector<Ket> alice_basis = {basis.psi(), basis.psi_bar()};
    const std::vector<std::string> labels = {bar, psi};
    const std::array<std::size_t, 1> alice = {0};
    return measure_alice(singlet, alice_basis, alice, labels);
}

SignallingReport make_report(const ScenarioConfig &cfg, DensityMatrix left, DensityMatrix right) {
    const double distance = trace_distance(left, right);
    return SignallingReport{cfg.kind,
                            mode_of(cfg.kind),
                            cfg,
                            std::move(left),
                            std::move(right),
                            distance,
                            distance > cfg.signalling_threshold ? Verdict::signalling : Verdict::no_signalling,
                            std::nullopt};
}

SignallingReport run_protocol(const ScenarioConfig &cfg, const EnsembleAction &on_ensemble,
                              const std::function<Ket(const RemoteSetup &)> &on_shared_state) {
    if (mode_of(cfg.kind) == SignallingMode::basis_dependence) {
        return make_report(cfg, ensemble_density(on_ensemble(collapsed_ensemble(cfg, 1))),
                           ensemble_density(on_ensemble(collapsed_ensemble(cfg, 2))));
    }
    const RemoteSetup setup = remote_setup(cfg, machine_config(cfg));
    const Ket before = materialize(setup.decomposition, setup.registry);
    const Ket after = on_shared_state(setup);
    const std::array<std::size_t, 1> alice = {0};
    return make_report(cfg, partial_trace(density_of(before), alice), partial_trace(density_of(after), alice));
}

}  // namespace

SignallingReport run_scenario(const ScenarioConfig &input) {
    const ScenarioConfig cfg = resolve(input);
    const MachineConfig mc = machine_config(cfg);
    const MachineKind mk = machine_kind(cfg.kind);
    const bool enabled = cfg.machine.enabled;

    std::optional<HypotheticalMachine> machine;
    std::optional<StateRegistry> domain;
    if (enabled) {
        machine.emplace(instantiate_machine(mk, mc));
        domain.emplace(machine_domain(mk, mc));
    }

    SignallingReport report = run_protocol(
        cfg,
        [&](const Ensemble &e) { return enabled ? apply_to_ensemble(e, *machine, *domain) : e; },
        [&](const RemoteSetup &setup) {
            return enabled ? rewrite_entangled(setup.decomposition, *machine, setup.registry)
                           : materialize(setup.decomposition, setup.registry);
        });

    if (has_closed_form(cfg.kind)) {
        try {
            const DensityMatrix before = closed_form_rho(cfg.kind, Stage::before, cfg);
            const DensityMatrix after = closed_form_rho(cfg.kind, Stage::after, cfg);
            report.closed_form_residual =
                std::max(report.rho_left.matrix().max_abs_diff(before.matrix()),
                         report.rho_right.matrix().max_abs_diff(after.matrix()));
        } catch (const NoClosedForm &) {
            report.closed_form_residual = std::nullopt;
        }
    }
    return report;
}

SignallingReport run_with_unitary(const ScenarioConfig &input, const CMatrix &bob_unitary) {
    const ScenarioConfig cfg = resolve(input);
    const std::size_t n = bob_input_dim(cfg.kind);
    if (bob_unitary.rows() != n || bob_unitary.cols() != n) {
        throw DimMismatch(std::string(to_string(cfg.kind)) + " needs a " + std::to_string(n) + "x" +
                          std::to_string(n) + " unitary");
    }
    return run_protocol(
        cfg,
        [&](const Ensemble &e) {
            std::vector<EnsembleMember> out;
            for (const auto &m : e.members()) {
                std::vector<std::size_t> all(m.state.subsystem_count());
                std::iota(all.begin(), all.end(), 0);
                out.push_back({m.probability, apply_local(m.state, bob_unitary, all), std::string()});
            }
            return Ensemble(std::move(out));
        },
        [&](const RemoteSetup &setup) {
            const Ket before = materialize(setup.decomposition, setup.registry);
            std::vector<std::size_t> bob(before.subsystem_count() - 1);
            std::iota(bob.begin(), bob.end(), 1);
            return apply_local(before, bob_unitary, bob);
        });
}

namespace {

struct ParameterInfo {
    std::string_view name;
    bool phase;
    bool (*applies)(ScenarioKind);
};

bool basis_kind(ScenarioKind k) {
    return k != ScenarioKind::not_gate;
}
bool not_kind(ScenarioKind k) {
    return k == ScenarioKind::not_gate;
}
bool hadamard_kind(ScenarioKind k) {
    return k == ScenarioKind::hadamard;
}

constexpr std::array<ParameterInfo, 12> PARAMETERS = {{
    {"basis1_theta", false, basis_kind},
    {"basis1_phi", false, basis_kind},
    {"basis2_theta", false, basis_kind},
    {"basis2_phi", false, basis_kind},
    {"a", false, not_kind},
    {"c", false, not_kind},
    {"alpha", false, not_kind},
    {"theta", false, not_kind},
    {"mu", true, not_kind},
    {"nu", true, not_kind},
    {"phi1", true, hadamard_kind},
    {"phi2", true, hadamard_kind},
}};

const ParameterInfo *find_parameter(ScenarioKind kind, std::string_view name) {
    for (const auto &p : PARAMETERS) {
        if (p.name == name && p.applies(kind)) {
            return &p;
        }
    }
    return nullptr;
}

double complement_amplitude(double x, std::string_view name) {
    if (!(std::abs(x) <= 1)) {
        throw BadSpec(std::string(name) + " must lie in [-1, 1]");
    }
    return std::sqrt(std::max(0.0, 1 - x * x));
}

}  // namespace

bool is_parameter(ScenarioKind kind, std::string_view name) {
    return find_parameter(kind, name) != nullptr;
}

bool is_phase_parameter(ScenarioKind kind, std::string_view name) {
    const ParameterInfo *p = find_parameter(kind, name);
    return p != nullptr && p->phase;
}

void set_parameter(ScenarioConfig &cfg, std::string_view name, double value) {
    if (!is_parameter(cfg.kind, name)) {
        throw BadSpec("parameter '" + std::string(name) + "' is not used by " + std::string(to_string(cfg.kind)));
    }
    if (!std::isfinite(value)) {
        throw BadSpec("parameter '" + std::string(name) + "' must be finite");
    }
    auto angles = [&](BlochAngles &b, bool theta) {
        try {
            b = theta ? BlochAngles::checked(value, b.phi) : BlochAngles::wrapped(b.theta, value);
        } catch (const OutOfRange &e) {
            throw BadSpec(e.what());
        }
    };
    NotGateParams &p = cfg.not_params;
    if (name == "basis1_theta") {
        angles(cfg.basis1, true);
    } else if (name == "basis1_phi") {
        angles(cfg.basis1, false);
    } else if (name == "basis2_theta") {
        angles(cfg.basis2, true);
    } else if (name == "basis2_phi") {
        angles(cfg.basis2, false);
    } else if (name == "a") {
        p.b = complement_amplitude(value, name);
        p.a = value;
    } else if (name == "c") {
        p.d = complement_amplitude(value, name);
        p.c = value;
    } else if (name == "alpha") {
        p.a = std::cos(value);
        p.b = std::sin(value);
    } else if (name == "theta") {
        p.theta = value;
    } else if (name == "mu") {
        cfg.machine.mu = value;
    } else if (name == "nu") {
        cfg.machine.nu = value;
    } else if (name == "phi1") {
        cfg.machine.phi1 = value;
    } else if (name == "phi2") {
        cfg.machine.phi2 = value;
    }
}

}  // namespace nosig
