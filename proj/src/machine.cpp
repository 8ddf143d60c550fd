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

#include "nosig/machine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "nosig/errors.hpp"
#include "nosig/tolerances.hpp"

namespace nosig {

std::string_view to_string(MachineKind kind) {
    switch (kind) {
        case MachineKind::cloner:
            return "cloner";
        case MachineKind::general_op:
            return "general_op";
        case MachineKind::deleter:
            return "deleter";
        case MachineKind::flip:
            return "flip";
        case MachineKind::y_gate:
            return "y_gate";
        case MachineKind::z_gate:
            return "z_gate";
        case MachineKind::hadamard:
            return "hadamard";
        case MachineKind::cnot:
            return "cnot";
    }
    return "unknown";
}

void StateRegistry::add(std::string name, Ket ket) {
    if (name.empty()) {
        throw BadConfig("state names must be nonempty");
    }
    if (contains(name)) {
        throw BadConfig("duplicate state name '" + name + "'");
    }
    states_.emplace(std::move(name), std::move(ket));
}

bool StateRegistry::contains(std::string_view name) const {
    return states_.find(name) != states_.end();
}

const Ket &StateRegistry::at(std::string_view name) const {
    auto it = states_.find(name);
    if (it == states_.end()) {
        throw UnmatchedTerm("no registered state named '" + std::string(name) + "'");
    }
    return it->second;
}

std::vector<std::string> StateRegistry::names() const {
    std::vector<std::string> out;
    for (const auto &[name, ket] : states_) {
        out.push_back(name);
    }
    return out;
}

Ket RewriteRule::output() const {
    return tensor_product(output_system, machine_state).phased(phase);
}

HypotheticalMachine::HypotheticalMachine(MachineKind kind, std::vector<RewriteRule> rules)
    : kind_(kind), rules_(std::move(rules)) {
    if (rules_.empty()) {
        throw BadConfig("a machine needs at least one rule");
    }
    std::set<std::string, std::less<>> seen;
    for (const auto &r : rules_) {
        if (std::abs(std::abs(r.phase) - 1) > NORM_TOL) {
            throw BadConfig("rule for '" + r.input + "' has a non-unit phase");
        }
        if (!seen.insert(r.input).second) {
            throw BadConfig("two rules for input '" + r.input + "'");
        }
        const Dims dims = r.output().dims();
        if (output_dims_.empty()) {
            output_dims_ = dims;
        } else if (dims != output_dims_) {
            throw BadConfig("rule for '" + r.input + "' has different output dims");
        }
        machine_dim_ = std::max(machine_dim_, r.machine_state.dim());
    }
}

const RewriteRule *HypotheticalMachine::find(std::string_view input) const {
    auto it = std::find_if(rules_.begin(), rules_.end(), [&](const RewriteRule &r) { return r.input == input; });
    return it == rules_.end() ? nullptr : &*it;
}

const RewriteRule &HypotheticalMachine::rule(std::string_view input) const {
    if (const RewriteRule *r = find(input)) {
        return *r;
    }
    throw UnmatchedTerm(std::string(to_string(kind_)) + " machine is undefined on '" + std::string(input) + "'");
}

std::string basis_state_name(std::size_t basis_index, bool bar) {
    return "psi" + std::to_string(basis_index) + (bar ? "_bar" : "");
}

std::string pair_name(std::string_view first, std::string_view second) {
    std::string out(first);
    out += '.';
    out += second;
    return out;
}

namespace {

const Ket &trivial_ket() {
    static const Ket k({1}, CVector{1.0});
    return k;
}

bool uses_bases(MachineKind kind) {
    return kind != MachineKind::flip;
}

bool pairs_domain(MachineKind kind) {
    return kind == MachineKind::deleter || kind == MachineKind::cnot;
}

struct NamedBasis {
    std::string psi;
    std::string psi_bar;
    const QubitBasis *basis;
};

std::vector<NamedBasis> named_bases(MachineKind kind, const MachineConfig &config) {
    if (!uses_bases(kind)) {
        return {};
    }
    if (config.bases.empty()) {
        throw BadConfig(std::string(to_string(kind)) + " machine needs at least one basis");
    }
    std::vector<NamedBasis> out;
    for (std::size_t i = 0; i < config.bases.size(); ++i) {
        out.push_back({basis_state_name(i + 1, false), basis_state_name(i + 1, true), &config.bases[i]});
    }
    return out;
}

Ket memory_state(const MachineConfig &config, const std::string &name) {
    if (config.memory_dim == 0) {
        throw BadConfig("memory_dim must be positive");
    }
    auto it = config.memory.find(name);
    if (it == config.memory.end()) {
        return Ket::basis(config.memory_dim, 0);
    }
    if (it->second.dims() != Dims{config.memory_dim}) {
        throw BadConfig("memory state for '" + name + "' must have dimension " + std::to_string(config.memory_dim));
    }
    return it->second;
}

void reject_unknown(const std::map<std::string, Ket> &given, const std::vector<std::string> &allowed,
                    std::string_view what) {
    for (const auto &[name, ket] : given) {
        if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
            throw BadConfig(std::string(what) + " given for '" + name + "', which does not accept one");
        }
    }
}

}  // namespace

StateRegistry machine_domain(MachineKind kind, const MachineConfig &config) {
    StateRegistry registry;
    if (kind == MachineKind::flip) {
        if (!config.flip_psi || !config.flip_phi) {
            throw BadConfig("flip machine needs psi and phi");
        }
        if (config.flip_psi->dims() != Dims{2} || config.flip_phi->dims() != Dims{2}) {
            throw BadConfig("flip machine states must be qubits");
        }
        registry.add(std::string(FLIP_ZERO), Ket::basis(2, 0));
        registry.add(std::string(FLIP_PSI), *config.flip_psi);
        registry.add(std::string(FLIP_PHI), *config.flip_phi);
        return registry;
    }
    for (const auto &nb : named_bases(kind, config)) {
        const Ket &psi = nb.basis->psi();
        const Ket &psi_bar = nb.basis->psi_bar();
        if (pairs_domain(kind)) {
            registry.add(pair_name(nb.psi, nb.psi), tensor_product(psi, psi));
            registry.add(pair_name(nb.psi, nb.psi_bar), tensor_product(psi, psi_bar));
            registry.add(pair_name(nb.psi_bar, nb.psi), tensor_product(psi_bar, psi));
            registry.add(pair_name(nb.psi_bar, nb.psi_bar), tensor_product(psi_bar, psi_bar));
        } else {
            registry.add(nb.psi, psi);
            registry.add(nb.psi_bar, psi_bar);
        }
    }
    return registry;
}

std::vector<std::string> memory_names(MachineKind kind, const MachineConfig &config) {
    switch (kind) {
        case MachineKind::flip:
            return {std::string(FLIP_ZERO), std::string(FLIP_PSI), std::string(FLIP_PHI)};
        case MachineKind::hadamard: {
            std::vector<std::string> out;
            for (const auto &nb : named_bases(kind, config)) {
                out.push_back(nb.psi);
                out.push_back(nb.psi_bar);
            }
            return out;
        }
        case MachineKind::deleter: {
            std::vector<std::string> out;
            for (const auto &nb : named_bases(kind, config)) {
                out.push_back(pair_name(nb.psi, nb.psi));
                out.push_back(pair_name(nb.psi_bar, nb.psi_bar));
            }
            return out;
        }
        default:
            return {};
    }
}

std::vector<std::string> ancilla_names(MachineKind kind, const MachineConfig &config) {
    if (kind != MachineKind::general_op) {
        return {};
    }
    std::vector<std::string> out;
    for (const auto &nb : named_bases(kind, config)) {
        out.push_back(nb.psi);
        out.push_back(nb.psi_bar);
    }
    return out;
}

std::vector<std::string> cross_output_names(MachineKind kind, const MachineConfig &config) {
    if (kind != MachineKind::deleter) {
        return {};
    }
    std::vector<std::string> out;
    for (const auto &nb : named_bases(kind, config)) {
        out.push_back(pair_name(nb.psi, nb.psi_bar));
        out.push_back(pair_name(nb.psi_bar, nb.psi));
    }
    return out;
}

HypotheticalMachine instantiate_machine(MachineKind kind, const MachineConfig &config) {
    const StateRegistry domain = machine_domain(kind, config);
    reject_unknown(config.memory, memory_names(kind, config), "memory state");
    reject_unknown(config.ancilla, ancilla_names(kind, config), "ancilla state");
    reject_unknown(config.cross_outputs, cross_output_names(kind, config), "cross output");

    std::vector<RewriteRule> rules;
    const Ket &none = trivial_ket();

    switch (kind) {
        case MachineKind::cloner:
            for (const auto &nb : named_bases(kind, config)) {
                for (const auto *name : {&nb.psi, &nb.psi_bar}) {
                    const Ket &x = domain.at(*name);
                    rules.push_back({*name, 1.0, tensor_product(x, x), none});
                }
            }
            break;

        case MachineKind::general_op: {
            const auto names = ancilla_names(kind, config);
            if (config.ancilla_dim == 0) {
                throw BadConfig("ancilla_dim must be positive");
            }
            for (std::size_t k = 0; k < names.size(); ++k) {
                auto it = config.ancilla.find(names[k]);
                Ket f = it != config.ancilla.end() ? it->second : [&] {
                    if (k >= config.ancilla_dim) {
                        throw BadConfig("default ancilla states need ancilla_dim >= " + std::to_string(names.size()));
                    }
                    return Ket::basis(config.ancilla_dim, k);
                }();
                if (f.dims() != Dims{config.ancilla_dim}) {
                    throw BadConfig("ancilla for '" + names[k] + "' must have dimension " +
                                    std::to_string(config.ancilla_dim));
                }
                rules.push_back({names[k], 1.0, domain.at(names[k]), std::move(f)});
            }
            break;
        }

        case MachineKind::deleter: {
            const Ket sigma = config.sigma.value_or(Ket::basis(2, 0));
            if (sigma.dims() != Dims{2}) {
                throw BadConfig("deleter blank state must be a qubit");
            }
            const Ket blank_memory = Ket::basis(std::max<std::size_t>(config.memory_dim, 1), 0);
            for (const auto &nb : named_bases(kind, config)) {
                const Ket &psi = nb.basis->psi();
                const Ket &psi_bar = nb.basis->psi_bar();
                const auto same_psi = pair_name(nb.psi, nb.psi);
                const auto same_bar = pair_name(nb.psi_bar, nb.psi_bar);
                rules.push_back({same_psi, 1.0, tensor_product(psi, sigma), memory_state(config, same_psi)});
                rules.push_back({same_bar, 1.0, tensor_product(psi_bar, sigma), memory_state(config, same_bar)});
                for (const auto &cross : {pair_name(nb.psi, nb.psi_bar), pair_name(nb.psi_bar, nb.psi)}) {
                    auto it = config.cross_outputs.find(cross);
                    if (it == config.cross_outputs.end()) {
                        rules.push_back({cross, 1.0, domain.at(cross), blank_memory});
                    } else {
                        if (it->second.dim() != 4 * config.memory_dim) {
                            throw BadConfig("cross output for '" + cross + "' must have dimension " +
                                            std::to_string(4 * config.memory_dim));
                        }
                        rules.push_back({cross, 1.0, it->second, none});
                    }
                }
            }
            break;
        }

        case MachineKind::flip: {
            if (!config.phases.empty() && config.phases.size() != 2) {
                throw BadConfig("flip machine takes two phases (mu, nu)");
            }
            const double mu = config.phases.empty() ? 0.0 : config.phases[0];
            const double nu = config.phases.empty() ? 0.0 : config.phases[1];
            const std::string zero(FLIP_ZERO), psi(FLIP_PSI), phi(FLIP_PHI);
            rules.push_back({zero, 1.0, Ket::basis(2, 1), memory_state(config, zero)});
            rules.push_back({psi, std::polar(1.0, mu), orthogonal_complement(domain.at(psi)), memory_state(config, psi)});
            rules.push_back({phi, std::polar(1.0, nu), orthogonal_complement(domain.at(phi)), memory_state(config, phi)});
            break;
        }

        case MachineKind::y_gate:
            for (const auto &nb : named_bases(kind, config)) {
                rules.push_back({nb.psi, Complex(0, -1), nb.basis->psi_bar(), none});
                rules.push_back({nb.psi_bar, Complex(0, 1), nb.basis->psi(), none});
            }
            break;

        case MachineKind::z_gate:
            for (const auto &nb : named_bases(kind, config)) {
                rules.push_back({nb.psi, 1.0, nb.basis->psi(), none});
                rules.push_back({nb.psi_bar, -1.0, nb.basis->psi_bar(), none});
            }
            break;

        case MachineKind::hadamard: {
            const auto bases = named_bases(kind, config);
            if (!config.phases.empty() && config.phases.size() != bases.size()) {
                throw BadConfig("hadamard machine takes one phase per basis");
            }
            for (std::size_t i = 0; i < bases.size(); ++i) {
                const auto &nb = bases[i];
                const Complex e = std::polar(1.0, config.phases.empty() ? 0.0 : config.phases[i]);
                const CVector &psi = nb.basis->psi().amplitudes();
                const CVector &psi_bar = nb.basis->psi_bar().amplitudes();
                const double r = 1 / std::numbers::sqrt2;
                rules.push_back({nb.psi, 1.0, Ket({2}, r * (psi + e * psi_bar)), memory_state(config, nb.psi)});
                rules.push_back(
                    {nb.psi_bar, 1.0, Ket({2}, r * (psi - e * psi_bar)), memory_state(config, nb.psi_bar)});
            }
            break;
        }

        case MachineKind::cnot:
            for (const auto &nb : named_bases(kind, config)) {
                const Ket &psi = nb.basis->psi();
                const Ket &psi_bar = nb.basis->psi_bar();
                rules.push_back({pair_name(nb.psi, nb.psi), 1.0, tensor_product(psi, psi), none});
                rules.push_back({pair_name(nb.psi, nb.psi_bar), 1.0, tensor_product(psi, psi_bar), none});
                rules.push_back({pair_name(nb.psi_bar, nb.psi), 1.0, tensor_product(psi_bar, psi_bar), none});
                rules.push_back({pair_name(nb.psi_bar, nb.psi_bar), 1.0, tensor_product(psi_bar, psi), none});
            }
            break;
    }
    return HypotheticalMachine(kind, std::move(rules));
}

TermDecomposition::TermDecomposition(std::size_t alice_dim, std::vector<Term> terms)
    : alice_dim_(alice_dim), terms_(std::move(terms)) {
    if (alice_dim_ == 0 || terms_.empty()) {
        throw BadConfig("decomposition needs a positive Alice dimension and at least one term");
    }
    for (const auto &t : terms_) {
        if (t.alice_index >= alice_dim_) {
            throw BadConfig("Alice label " + std::to_string(t.alice_index) + " outside dimension " +
                            std::to_string(alice_dim_));
        }
    }
    if (has_distinct_labels()) {
        double total = 0;
        for (const auto &t : terms_) {
            total += std::norm(t.coefficient);
        }
        if (std::abs(total - 1) > NORM_TOL) {
            throw BadConfig("decomposition coefficients have squared norm " + std::to_string(total));
        }
    }
}

bool TermDecomposition::has_distinct_labels() const {
    std::set<std::size_t> labels;
    for (const auto &t : terms_) {
        if (!labels.insert(t.alice_index).second) {
            return false;
        }
    }
    return true;
}

namespace {

Ket sum_terms(const TermDecomposition &d, const std::vector<Ket> &bob, const std::vector<Complex> &weights) {
    const Dims &bob_dims = bob.front().dims();
    const std::size_t bob_dim = bob.front().dim();
    CVector total(d.alice_dim() * bob_dim);
    for (std::size_t k = 0; k < bob.size(); ++k) {
        if (bob[k].dims() != bob_dims) {
            throw DimMismatch("decomposition terms live in different spaces");
        }
        const std::size_t offset = d.terms()[k].alice_index * bob_dim;
        for (std::size_t i = 0; i < bob_dim; ++i) {
            total[offset + i] += weights[k] * bob[k].amplitudes()[i];
        }
    }
    Dims dims{d.alice_dim()};
    dims.insert(dims.end(), bob_dims.begin(), bob_dims.end());
    if (d.has_distinct_labels()) {
        return Ket(std::move(dims), std::move(total));
    }
    return Ket::normalized(std::move(dims), std::move(total));
}

}  // namespace

Ket materialize(const TermDecomposition &d, const StateRegistry &registry) {
    std::vector<Ket> bob;
    std::vector<Complex> weights;
    for (const auto &t : d.terms()) {
        bob.push_back(registry.at(t.bob_state));
        weights.push_back(t.coefficient);
    }
    return sum_terms(d, bob, weights);
}

Ket rewrite_entangled(const TermDecomposition &d, const HypotheticalMachine &m, const StateRegistry &registry) {
    std::vector<Ket> bob;
    std::vector<Complex> weights;
    const Dims *input_dims = nullptr;
    for (const auto &t : d.terms()) {
        const Ket &input = registry.at(t.bob_state);
        if (input_dims == nullptr) {
            input_dims = &input.dims();
        } else if (input.dims() != *input_dims) {
            throw DimMismatch("decomposition terms live in different spaces");
        }
        const RewriteRule &r = m.rule(t.bob_state);
        bob.push_back(tensor_product(r.output_system, r.machine_state));
        weights.push_back(t.coefficient * r.phase);
    }
    return sum_terms(d, bob, weights);
}

Ensemble apply_to_ensemble(const Ensemble &e, const HypotheticalMachine &m, const StateRegistry &registry) {
    std::vector<EnsembleMember> out;
    for (const auto &member : e.members()) {
        if (member.label.empty()) {
            throw UnmatchedTerm("ensemble member has no label to match against the machine domain");
        }
        const Ket &registered = registry.at(member.label);
        const RewriteRule &r = m.rule(member.label);
        const Complex carried = overlap(registered, member.state);
        if (std::abs(std::abs(carried) - 1) > EQUALITY_TOL) {
            throw UnmatchedTerm("ensemble member labelled '" + member.label +
                                "' is not the registered state up to phase");
        }
        out.push_back({member.probability, r.output().phased(carried / std::abs(carried)), std::string()});
    }
    return Ensemble(std::move(out));
}

}  // namespace nosig
