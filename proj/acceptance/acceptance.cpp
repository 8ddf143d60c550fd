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

#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "nosig/cli.hpp"
#include "nosig/random.hpp"
#include "nosig/report_io.hpp"
#include "nosig/scenario.hpp"
#include "nosig/sweep.hpp"
#include "oracles.hpp"

namespace nosig {

namespace {

constexpr double PI = std::numbers::pi;

struct Check {
    bool ok = true;
    std::string notes;

    void expect(bool condition, const std::string &what) {
        if (!condition) {
            ok = false;
            notes += (notes.empty() ? "" : "; ") + what;
        }
    }
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Check physical_baseline() {
    Check c;
    Rng rng(1);
    double worst_remote = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t da = 2 + rng() % 3;
        const std::size_t db = 2 + rng() % 3;
        const Ket state = random_ket(rng, {da, db});
        const Ket moved = apply_local(state, random_unitary(rng, db), std::vector<std::size_t>{1});
        const std::vector<std::size_t> alice{0};
        worst_remote = std::max(worst_remote, trace_distance(partial_trace(density_of(state), alice),
                                                             partial_trace(density_of(moved), alice)));
    }
    // The scenario protocols with a genuine unitary in place of the machine.
    for (ScenarioKind kind : ALL_SCENARIOS) {
        const auto r = run_with_unitary(ScenarioConfig::generic(kind), random_unitary(rng, bob_input_dim(kind)));
        worst_remote = std::max(worst_remote, r.distance);
    }
    double worst_ensemble = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t da = 2 + rng() % 3;
        const std::size_t db = 2 + rng() % 3;
        const Ket state = random_ket(rng, {da, db});
        const CMatrix u = random_unitary(rng, da);
        std::vector<Ket> basis;
        for (std::size_t k = 0; k < da; ++k) {
            CVector column(da);
            for (std::size_t i = 0; i < da; ++i) {
                column[i] = u(i, k);
            }
            basis.emplace_back(Dims{da}, column);
        }
        const Ensemble e = measure_alice(state, basis, std::vector<std::size_t>{0});
        const DensityMatrix bob = partial_trace(density_of(state), std::vector<std::size_t>{1});
        worst_ensemble = std::max(worst_ensemble, ensemble_density(e).matrix().max_abs_diff(bob.matrix()));
    }
    c.expect(worst_remote < 1e-10, "remote change " + sci(worst_remote));
    c.expect(worst_ensemble < 1e-10, "ensemble vs partial trace " + sci(worst_ensemble));
    c.notes += (c.notes.empty() ? "" : "; ") + std::string("max D ") + sci(worst_remote) + ", max ensemble diff " +
               sci(worst_ensemble);
    return c;
}

Check singlet_invariance() {
    Check c;
    Rng rng(2);
    const DensityMatrix reference = density_of(singlet_in_basis(QubitBasis::computational()));
    double worst = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const DensityMatrix rho = density_of(singlet_in_basis(QubitBasis::from_bloch(random_bloch(rng))));
        worst = std::max(worst, trace_distance(reference, rho));
    }
    c.expect(worst < 1e-10, "singlet changed by " + sci(worst));
    c.notes += (c.notes.empty() ? "" : "; ") + std::string("max D ") + sci(worst);
    return c;
}

ScenarioConfig with_basis2(ScenarioKind kind, double theta, double phi) {
    ScenarioConfig cfg = ScenarioConfig::defaults(kind);
    cfg.basis2 = BlochAngles::checked(theta, phi);
    return cfg;
}

double max_spectrum_gap(const std::vector<double> &got, std::vector<double> want) {
    std::sort(want.begin(), want.end());
    double gap = got.size() == want.size() ? 0 : 1;
    for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
        gap = std::max(gap, std::abs(got[i] - want[i]));
    }
    return gap;
}

Check cloning() {
    Check c;
    const ScenarioConfig cfg = with_basis2(ScenarioKind::cloning, PI / 2, 0);
    const auto r = run_scenario(cfg);
    const auto oracle = oracle::cloning_difference_spectrum(PI / 2);
    const double oracle_distance =
        0.5 * (std::abs(oracle[0]) + std::abs(oracle[1]) + std::abs(oracle[2]) + std::abs(oracle[3]));
    const auto spectrum = hermitian_eigenvalues(r.rho_right.matrix() - r.rho_left.matrix());
    const double gap = max_spectrum_gap(spectrum, {oracle.begin(), oracle.end()});
    c.expect(std::abs(r.distance - 0.5) < 1e-9, "distance " + format_double(r.distance));
    c.expect(std::abs(oracle_distance - 0.5) < 1e-12, "oracle distance " + format_double(oracle_distance));
    c.expect(gap < 1e-9, "spectrum differs from oracle by " + sci(gap));
    ScenarioConfig off = cfg;
    off.machine.enabled = false;
    const double baseline = run_scenario(off).distance;
    c.expect(baseline < 1e-12, "disabled machine " + sci(baseline));
    c.notes += (c.notes.empty() ? "" : "; ") + std::string("D ") + format_double(r.distance) + ", disabled " +
               sci(baseline);
    return c;
}

Check z_gate() {
    Check c;
    const auto r = run_scenario(with_basis2(ScenarioKind::z_gate, PI / 2, 0));
    const auto oracle = oracle::z_gate_difference_spectrum(PI / 2, 0);
    const auto spectrum = hermitian_eigenvalues(r.rho_right.matrix() - r.rho_left.matrix());
    const double gap = max_spectrum_gap(spectrum, {oracle.begin(), oracle.end()});
    const double q = 1 / (2 * std::sqrt(2.0));
    double oracle_gap = 0;
    for (double e : oracle) {
        oracle_gap = std::max(oracle_gap, std::abs(std::abs(e) - q));
    }
    c.expect(std::abs(r.distance - 1 / std::sqrt(2.0)) < 1e-9, "distance " + format_double(r.distance));
    c.expect(oracle_gap < 1e-12, "oracle spectrum is not +-1/(2 sqrt 2) twice");
    c.expect(gap < 1e-9, "spectrum differs from oracle by " + sci(gap));
    const double coincident = run_scenario(ScenarioConfig::defaults(ScenarioKind::z_gate)).distance;
    c.expect(coincident < 1e-10, "coincident bases " + sci(coincident));
    c.notes += (c.notes.empty() ? "" : "; ") + std::string("D ") + format_double(r.distance) + ", coincident " +
               sci(coincident);
    return c;
}

Check not_gate() {
    Check c;
    ScenarioConfig flat = ScenarioConfig::defaults(ScenarioKind::not_gate);
    set_parameter(flat, "theta", 0);
    set_parameter(flat, "mu", PI);
    set_parameter(flat, "nu", PI);
    const double flat_distance = run_scenario(flat).distance;
    c.expect(flat_distance < 1e-10, "theta = 0 distance " + sci(flat_distance));

    SweepSpec spec;
    spec.base = ScenarioConfig::defaults(ScenarioKind::not_gate);
    spec.axes = {{"theta", PI / 2, PI / 2, 1}};
    spec.minimize_over = {{"mu", 16}, {"nu", 16}};
    const double generic = run_sweep(spec).front().distance;
    const double s = 1 / std::sqrt(2.0);
    const double oracle_generic = oracle::not_gate_min_distance(s, s, s, s, PI / 2, 64);
    c.expect(generic > 0.01, "16x16 minimum " + sci(generic));
    c.expect(oracle_generic > 0.01, "64x64 oracle minimum " + sci(oracle_generic));
    // The library distance must agree with the oracle on the coarse grid.
    double worst = 0;
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            ScenarioConfig point = spec.base;
            set_parameter(point, "mu", 2 * PI * i / 16);
            set_parameter(point, "nu", 2 * PI * j / 16);
            const double want = oracle::not_gate_distance(s, s, s, s, PI / 2, 2 * PI * i / 16, 2 * PI * j / 16);
            worst = std::max(worst, std::abs(run_scenario(point).distance - want));
        }
    }
    c.expect(worst < 1e-9, "simulation vs oracle " + sci(worst));

    SweepSpec scan;
    scan.base = ScenarioConfig::defaults(ScenarioKind::not_gate);
    scan.axes = {{"theta", 0, PI, 9}};
    scan.minimize_over = {{"mu", 16}, {"nu", 16}};
    const auto zeros = zero_set(run_sweep(scan), 1e-10);
    bool contained = !zeros.empty();
    for (const auto &z : zeros) {
        contained = contained && (std::abs(z[0]) < 1e-12 || std::abs(z[0] - PI) < 1e-12);
    }
    c.expect(contained, "zero set not within theta in {0, pi}");
    c.notes += (c.notes.empty() ? "" : "; ") + std::string("theta=0 D ") + sci(flat_distance) + ", min " +
               sci(generic) + " (oracle 64x64 " + sci(oracle_generic) + "), zero set size " +
               std::to_string(zeros.size());
    return c;
}

Check verdicts() {
    Check c;
    double weakest = 1;
    double loudest_degenerate = 0;
    for (ScenarioKind kind : ALL_SCENARIOS) {
        const auto r = run_scenario(ScenarioConfig::generic(kind));
        c.expect(r.verdict == Verdict::signalling && r.distance > 1e-3,
                 std::string(to_string(kind)) + " generic D " + sci(r.distance));
        weakest = std::min(weakest, r.distance);
        ScenarioConfig degenerate = ScenarioConfig::defaults(kind);
        if (kind == ScenarioKind::not_gate) {
            // psi = phi: a single great circle, flippable by a genuine unitary.
            set_parameter(degenerate, "theta", 0);
            set_parameter(degenerate, "mu", PI);
            set_parameter(degenerate, "nu", PI);
        }
        const auto d = run_scenario(degenerate);
        c.expect(d.verdict == Verdict::no_signalling && d.distance < 1e-10,
                 std::string(to_string(kind)) + " degenerate D " + sci(d.distance));
        loudest_degenerate = std::max(loudest_degenerate, d.distance);
    }
    c.notes += (c.notes.empty() ? "" : "; ") + std::string("min generic D ") + sci(weakest) +
               ", max degenerate D " + sci(loudest_degenerate);
    return c;
}

Check closed_forms() {
    Check c;
    Rng rng(7);
    double worst = 0;
    for (ScenarioKind kind : ALL_SCENARIOS) {
        if (kind == ScenarioKind::deletion) {
            continue;
        }
        for (int trial = 0; trial < 100; ++trial) {
            const auto r = run_scenario(random_scenario_config(rng, kind));
            if (!r.closed_form_residual) {
                c.expect(false, std::string(to_string(kind)) + " has no residual");
                break;
            }
            worst = std::max(worst, *r.closed_form_residual);
        }
    }
    c.expect(worst < 1e-10, "max residual " + sci(worst));
    c.notes += (c.notes.empty() ? "" : "; ") + std::string("max residual ") + sci(worst);
    return c;
}

Check metric_and_eigen() {
    Check c;
    Rng rng(8);
    double worst_axiom = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 2 + rng() % 3;
        const auto a = random_density_matrix(rng, dim, 1 + rng() % dim);
        const auto b = random_density_matrix(rng, dim, 1 + rng() % dim);
        const auto m = random_density_matrix(rng, dim);
        const double ab = trace_distance(a, b);
        worst_axiom = std::max({worst_axiom, trace_distance(a, a), std::abs(ab - trace_distance(b, a)),
                                std::max(0.0, -ab), std::max(0.0, ab - 1),
                                std::max(0.0, ab - trace_distance(a, m) - trace_distance(m, b))});
    }
    c.expect(worst_axiom < 1e-9, "metric axioms violated by " + sci(worst_axiom));

    double worst_eigen = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const CMatrix h2 = random_hermitian(rng, 2, 1 + trial % 5);
        const auto want2 = oracle::eigenvalues_2x2(h2(0, 0).real(), h2(0, 1), h2(1, 1).real());
        worst_eigen = std::max(worst_eigen, max_spectrum_gap(hermitian_eigenvalues(h2), {want2.begin(), want2.end()}));
        const CMatrix h3 = random_hermitian(rng, 3, 1 + trial % 5);
        std::array<std::array<oracle::C, 3>, 3> m3;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                m3[i][j] = h3(i, j);
            }
        }
        const auto want3 = oracle::eigenvalues_3x3(m3);
        worst_eigen = std::max(worst_eigen, max_spectrum_gap(hermitian_eigenvalues(h3), {want3.begin(), want3.end()}));
    }
    c.expect(worst_eigen < 1e-9, "eigenvalues differ by " + sci(worst_eigen));
    c.notes += (c.notes.empty() ? "" : "; ") + std::string("axioms ") + sci(worst_axiom) + ", eigen " +
               sci(worst_eigen);
    return c;
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

bool is_number_matrix(const Json &m) {
    if (!m.is_array() || m.empty()) {
        return false;
    }
    for (const auto &row : m) {
        if (!row.is_array() || row.size() != m.size()) {
            return false;
        }
        for (const auto &z : row) {
            if (!z.is_object() || z.size() != 2 || !z.contains("re") || !z.contains("im") || !z["re"].is_number() ||
                !z["im"].is_number()) {
                return false;
            }
        }
    }
    return true;
}

std::string schema_problem(const Json &r, ScenarioKind kind) {
    static const std::set<std::string> keys = {"scenario", "mode",     "config",    "trace_distance", "verdict",
                                               "closed_form_residual", "rho_left", "rho_right", "tolerances"};
    std::set<std::string> got;
    for (auto it = r.begin(); it != r.end(); ++it) {
        got.insert(it.key());
    }
    if (got != keys) {
        return "keys";
    }
    if (r["scenario"] != to_string(kind)) {
        return "scenario";
    }
    if (r["mode"] != to_string(mode_of(kind))) {
        return "mode";
    }
    if (!r["config"].is_object() || r["config"]["scenario"] != to_string(kind)) {
        return "config";
    }
    if (!r["trace_distance"].is_number() || r["trace_distance"].get<double>() < 0 ||
        r["trace_distance"].get<double>() > 1) {
        return "trace_distance";
    }
    if (r["verdict"] != "SIGNALLING" && r["verdict"] != "NO_SIGNALLING") {
        return "verdict";
    }
    if (!r["closed_form_residual"].is_null() && !r["closed_form_residual"].is_number()) {
        return "closed_form_residual";
    }
    if (!is_number_matrix(r["rho_left"]) || !is_number_matrix(r["rho_right"]) ||
        r["rho_left"].size() != r["rho_right"].size()) {
        return "rho";
    }
    if (!r["tolerances"].is_object()) {
        return "tolerances";
    }
    for (const auto &t : r["tolerances"]) {
        if (!t.is_number()) {
            return "tolerances";
        }
    }
    return {};
}

std::size_t line_count(const std::string &s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

Check cli_golden() {
    Check c;
    const auto first = cli({"run", "all", "--format", "json"});
    const auto second = cli({"run", "all", "--format", "json"});
    c.expect(first.code == 0, "run all exit " + std::to_string(first.code) + " " + first.err);
    c.expect(first.out == second.out, "run all output differs between runs");
    Json doc;
    try {
        doc = Json::parse(first.out);
    } catch (const std::exception &e) {
        c.expect(false, std::string("run all output is not JSON: ") + e.what());
        return c;
    }
    c.expect(to_canonical_json(doc) == first.out, "reserialized JSON differs");
    c.expect(doc.is_array() && doc.size() == ALL_SCENARIOS.size(), "run all does not give 8 reports");
    for (std::size_t i = 0; doc.is_array() && i < std::min(doc.size(), ALL_SCENARIOS.size()); ++i) {
        const std::string problem = schema_problem(doc[i], ALL_SCENARIOS[i]);
        c.expect(problem.empty(), std::string(to_string(ALL_SCENARIOS[i])) + " schema: " + problem);
    }

    const auto z = cli({"run", "z_gate", "--basis2-theta", "1.5707963", "--format", "json"});
    try {
        const Json r = Json::parse(z.out);
        c.expect(std::abs(r["trace_distance"].get<double>() - 0.7071067) < 1e-6 && r["verdict"] == "SIGNALLING",
                 "z_gate report");
    } catch (const std::exception &e) {
        c.expect(false, std::string("z_gate report: ") + e.what());
    }
    const auto cnot = cli({"run", "cnot"});
    c.expect(cnot.code == 0 && cnot.out.find("\"verdict\": \"NO_SIGNALLING\"") != std::string::npos,
             "cnot default verdict");

    const auto sweep1 = cli({"sweep", "not_gate", "--axes", "theta=0:3.14159:9", "--minimize", "mu,nu", "--threads", "1"});
    const auto sweep4 = cli({"sweep", "not_gate", "--axes", "theta=0:3.14159:9", "--minimize", "mu,nu", "--threads", "4"});
    c.expect(sweep1.code == 0 && line_count(sweep1.out) == 10, "theta sweep row count");
    c.expect(sweep1.out.rfind("theta,distance,verdict\n", 0) == 0, "theta sweep header");
    c.expect(sweep1.out == sweep4.out, "sweep output depends on thread count");
    const auto grid = cli({"sweep", "not_gate", "--axes", "alpha=0:1.5:5,theta=0:3:7"});
    c.expect(grid.code == 0 && line_count(grid.out) == 36, "5 x 7 sweep row count");
    return c;
}

}  // namespace

std::vector<CriterionResult> evaluate_acceptance() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"physical baseline", physical_baseline},
        {"singlet invariance", singlet_invariance},
        {"cloning scenario", cloning},
        {"z-gate scenario", z_gate},
        {"not-gate scenario", not_gate},
        {"generic and degenerate verdicts", verdicts},
        {"closed-form cross-checks", closed_forms},
        {"metric and eigensolver", metric_and_eigen},
        {"cli golden output", cli_golden},
    };
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        try {
            check = criteria[i].second();
        } catch (const std::exception &e) {
            check.ok = false;
            check.notes = std::string("threw: ") + e.what();
        }
        results.push_back({static_cast<int>(i + 1), criteria[i].first, check.ok, check.notes});
    }
    return results;
}

int run_acceptance(std::ostream &out) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = evaluate_acceptance();
    bool all = true;
    for (const auto &r : results) {
        out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.title;
        if (!r.detail.empty()) {
            out << ": " << r.detail;
        }
        out << '\n';
        all = all && r.passed;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", seconds);
    out << (all ? "all criteria passed" : "some criteria failed") << " in " << buf << " s\n";
    return all ? 0 : 1;
}

}  // namespace nosig
