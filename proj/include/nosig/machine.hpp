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

// Hypothetical (non-linear) machines applied as formal rewrites on named
// states. A machine is never turned into an operator: each rule says what a
// particular registered state becomes, and a composite state is rewritten
// term by term from an explicit decomposition.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nosig/quantum.hpp"

namespace nosig {

enum class MachineKind { cloner, general_op, deleter, flip, y_gate, z_gate, hadamard, cnot };

std::string_view to_string(MachineKind kind);

/// Named kets. Lookup is strictly by name.
class StateRegistry {
   public:
    /// Throws BadConfig on a duplicate or empty name.
    void add(std::string name, Ket ket);
    bool contains(std::string_view name) const;
    /// Throws UnmatchedTerm for an unknown name.
    const Ket &at(std::string_view name) const;
    std::vector<std::string> names() const;

   private:
    std::map<std::string, Ket, std::less<>> states_;
};

/// input  ->  phase * output_system (x) machine_state
struct RewriteRule {
    std::string input;
    Complex phase{1.0};
    Ket output_system;
    Ket machine_state;

    Ket output() const;
};

class HypotheticalMachine {
   public:
    /// Throws BadConfig unless every phase has unit modulus, input names are
    /// distinct and all outputs share the same dims.
    HypotheticalMachine(MachineKind kind, std::vector<RewriteRule> rules);

    MachineKind kind() const { return kind_; }
    const std::vector<RewriteRule> &rules() const { return rules_; }
    const Dims &output_dims() const { return output_dims_; }
    /// Dimension of the machine-state factor shared by the rules (1 if trivial).
    std::size_t machine_dim() const { return machine_dim_; }

    const RewriteRule *find(std::string_view input) const;
    /// Throws UnmatchedTerm when `input` is outside the machine's domain.
    const RewriteRule &rule(std::string_view input) const;

   private:
    MachineKind kind_;
    std::vector<RewriteRule> rules_;
    Dims output_dims_;
    std::size_t machine_dim_ = 1;
};

/// "psi1", "psi1_bar", "psi2", ... for 1-based basis indices.
std::string basis_state_name(std::size_t basis_index, bool bar);
/// Name of a two-qubit product of named single-qubit states.
std::string pair_name(std::string_view first, std::string_view second);

inline constexpr std::string_view FLIP_ZERO = "zero";
inline constexpr std::string_view FLIP_PSI = "psi";
inline constexpr std::string_view FLIP_PHI = "phi";

/// Family parameters. Which fields matter depends on the kind:
///   cloner      bases
///   general_op  bases, ancilla_dim, ancilla (F; default: distinct basis vectors)
///   deleter     bases, sigma (default |0>), memory (A states), cross_outputs
///   flip        flip_psi, flip_phi, phases {mu, nu}, memory (M states)
///   y_gate      bases
///   z_gate      bases
///   hadamard    bases, phases (one per basis), memory (H states)
///   cnot        bases
/// `memory`, `ancilla` and `cross_outputs` are keyed by rule input name; any
/// name missing from `memory` gets |0> of memory_dim.
struct MachineConfig {
    std::vector<QubitBasis> bases;
    std::optional<Ket> flip_psi;
    std::optional<Ket> flip_phi;
    std::vector<double> phases;
    std::size_t memory_dim = 1;
    std::map<std::string, Ket> memory;
    std::size_t ancilla_dim = 4;
    std::map<std::string, Ket> ancilla;
    std::optional<Ket> sigma;
    // Deleter outputs for the cross inputs psi.psi_bar and psi_bar.psi, as
    // kets on (qubit, qubit, memory). Missing entries leave the pair untouched.
    std::map<std::string, Ket> cross_outputs;
};

/// Registry of the named input states a machine of this family is defined on.
StateRegistry machine_domain(MachineKind kind, const MachineConfig &config);

/// Rule-input names that accept a memory state, in rule order.
std::vector<std::string> memory_names(MachineKind kind, const MachineConfig &config);
/// Rule-input names that accept an ancilla F(x) (general_op only).
std::vector<std::string> ancilla_names(MachineKind kind, const MachineConfig &config);
/// Cross-term input names of the deleter.
std::vector<std::string> cross_output_names(MachineKind kind, const MachineConfig &config);

/// Builds the rule set of the given family. Throws BadConfig for missing or
/// inconsistent parameters.
HypotheticalMachine instantiate_machine(MachineKind kind, const MachineConfig &config);

struct Term {
    std::size_t alice_index = 0;
    std::string bob_state;
    Complex coefficient;
};

/// sum_k c_k |alice_index_k> (x) |bob_state_k>
class TermDecomposition {
   public:
    /// Throws BadConfig for indices outside [0, alice_dim), no terms, or (when
    /// all indices are distinct) squared coefficients not summing to 1.
    TermDecomposition(std::size_t alice_dim, std::vector<Term> terms);

    std::size_t alice_dim() const { return alice_dim_; }
    const std::vector<Term> &terms() const { return terms_; }
    bool has_distinct_labels() const;

   private:
    std::size_t alice_dim_;
    std::vector<Term> terms_;
};

/// The state the decomposition describes, with named states resolved in `registry`.
Ket materialize(const TermDecomposition &d, const StateRegistry &registry);

/// sum_k c_k phase_k |alice_index_k> (x) output_system_k (x) machine_state_k.
/// Throws UnmatchedTerm when a term has no registry entry or no rule, and
/// DimMismatch when the named states disagree on dims. With repeated Alice
/// labels the result is renormalized.
Ket rewrite_entangled(const TermDecomposition &d, const HypotheticalMachine &m, const StateRegistry &registry);

/// Replaces every member by its rewrite. Members are matched by label; a
/// member's global phase relative to its registered state is carried over.
/// Throws UnmatchedTerm for unlabelled members, labels with no rule, or
/// members that are not the registered state up to phase.
Ensemble apply_to_ensemble(const Ensemble &e, const HypotheticalMachine &m, const StateRegistry &registry);

}  // namespace nosig
