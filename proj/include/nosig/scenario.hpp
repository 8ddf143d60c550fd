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

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "nosig/machine.hpp"
#include "nosig/quantum.hpp"
#include "nosig/tolerances.hpp"

namespace nosig {

enum class ScenarioKind { cloning, general_op, deletion, not_gate, y_gate, z_gate, hadamard, cnot };

inline constexpr std::array<ScenarioKind, 8> ALL_SCENARIOS = {
    ScenarioKind::cloning, ScenarioKind::general_op, ScenarioKind::deletion, ScenarioKind::not_gate,
    ScenarioKind::y_gate,  ScenarioKind::z_gate,     ScenarioKind::hadamard, ScenarioKind::cnot,
};

std::string_view to_string(ScenarioKind kind);
std::optional<ScenarioKind> parse_scenario_kind(std::string_view name);
MachineKind machine_kind(ScenarioKind kind);

enum class SignallingMode { remote_change, basis_dependence };
std::string_view to_string(SignallingMode mode);
SignallingMode mode_of(ScenarioKind kind);

enum class Verdict { signalling, no_signalling };
std::string_view to_string(Verdict verdict);

/// psi = a|0> + b|1>, phi = c|0> + d e^{i theta}|1>.
struct NotGateParams {
    double a;
    double b;
    double c;
    double d;
    double theta;
    // Additionally require a > 0, c > 0 and 0 < theta < pi.
    bool enforce_constraints = false;

    bool operator==(const NotGateParams &) const = default;
};

/// Machine family parameters that may be overridden per run. Vectors are raw
/// amplitudes; they are checked for unit norm and dimension on use.
struct MachineOverrides {
    bool enabled = true;
    double mu = 0;    // flip phase on psi
    double nu = 0;    // flip phase on phi
    double phi1 = 0;  // Hadamard phase, basis 1
    double phi2 = 0;  // Hadamard phase, basis 2
    std::size_t memory_dim = 1;
    std::map<std::string, CVector> memory;
    std::size_t ancilla_dim = 4;
    std::map<std::string, CVector> ancilla;
    std::optional<CVector> sigma;
    std::map<std::string, CVector> cross_outputs;

    bool operator==(const MachineOverrides &) const = default;
};

struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::cloning;
    BlochAngles basis1;
    BlochAngles basis2;
    NotGateParams not_params;
    MachineOverrides machine;
    double signalling_threshold = DEFAULT_SIGNALLING_THRESHOLD;

    /// Both bases computational, default machine parameters; for not_gate
    /// a = c = 1/sqrt(2), theta = pi/2.
    static ScenarioConfig defaults(ScenarioKind kind);
    /// Like defaults(), with basis 2 moved to a generic point off the
    /// computational axis (theta = pi/2, phi = pi/4; theta = pi/3 for hadamard).
    static ScenarioConfig generic(ScenarioKind kind);

    bool operator==(const ScenarioConfig &) const = default;
};

/// Validates `cfg` and fills every default the kind uses (memory states,
/// ancilla map, blank state). Throws BadConfig.
ScenarioConfig resolve(const ScenarioConfig &cfg);

/// Machine family parameters for a (validated) scenario config.
MachineConfig machine_config(const ScenarioConfig &cfg);

struct SignallingReport {
    ScenarioKind kind;
    SignallingMode mode;
    ScenarioConfig config;  // resolved
    DensityMatrix rho_left;
    DensityMatrix rho_right;
    double distance;
    Verdict verdict;
    std::optional<double> closed_form_residual;
};

/// remote_change: Alice's reduced state before and after Bob's machine.
/// basis_dependence: Bob's average state for Alice measuring in basis 1 vs basis 2.
SignallingReport run_scenario(const ScenarioConfig &cfg);

/// Same protocol with the hypothetical machine replaced by a genuine unitary
/// on Bob's input factor (dimension bob_input_dim(kind)). No closed form.
SignallingReport run_with_unitary(const ScenarioConfig &cfg, const CMatrix &bob_unitary);

/// Dimension of the factor Bob's machine acts on.
std::size_t bob_input_dim(ScenarioKind kind);

enum class Stage { before, after };

bool has_closed_form(ScenarioKind kind);

/// Analytic reduced density matrices evaluated with this library's state
/// conventions. For basis_dependence kinds `before` is basis 1 and `after`
/// basis 2. Throws NoClosedForm for deletion, for a disabled machine (except
/// remote_change `before`) and for hadamard `after` with nonzero phases.
DensityMatrix closed_form_rho(ScenarioKind kind, Stage stage, const ScenarioConfig &cfg);

/// Sets a named scalar parameter (basis1_theta, basis1_phi, basis2_theta,
/// basis2_phi, a, c, alpha, theta, mu, nu, phi1, phi2). Bloch azimuths are
/// wrapped into [0, 2 pi); setting a (or c) also sets b = sqrt(1 - a^2), and
/// alpha sets a = cos(alpha), b = sin(alpha). Throws BadSpec for names the
/// kind does not use or values out of range.
void set_parameter(ScenarioConfig &cfg, std::string_view name, double value);
bool is_parameter(ScenarioKind kind, std::string_view name);
bool is_phase_parameter(ScenarioKind kind, std::string_view name);

}  // namespace nosig
