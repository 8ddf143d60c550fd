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

#include "nosig/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <sstream>

#include "nosig/errors.hpp"

namespace nosig {

std::string format_double(double value) {
    if (value == 0) {
        return "0";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

bool is_scalar(const Json &v) {
    return !v.is_object() && !v.is_array();
}

bool all_scalar(const Json &v) {
    for (const auto &item : v) {
        if (!is_scalar(item)) {
            return false;
        }
    }
    return true;
}

void write(const Json &v, std::string &out, std::size_t indent) {
    switch (v.type()) {
        case Json::value_t::number_float: {
            const double d = v.get<double>();
            out += std::isfinite(d) ? format_double(d) : "null";
            return;
        }
        case Json::value_t::object:
        case Json::value_t::array: {
            const bool object = v.is_object();
            if (v.empty()) {
                out += object ? "{}" : "[]";
                return;
            }
            const bool inline_items = all_scalar(v);
            const std::string pad(indent + 2, ' ');
            out += object ? '{' : '[';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                out += first ? "" : ",";
                first = false;
                if (inline_items) {
                    out += object || it != v.begin() ? " " : "";
                } else {
                    out += '\n' + pad;
                }
                if (object) {
                    out += Json(it.key()).dump() + ": ";
                }
                write(it.value(), out, indent + 2);
            }
            if (inline_items) {
                out += object ? " }" : "]";
            } else {
                out += '\n' + std::string(indent, ' ') + (object ? '}' : ']');
            }
            return;
        }
        default:
            out += v.dump();
    }
}

}  // namespace

std::string to_canonical_json(const Json &value) {
    std::string out;
    write(value, out, 0);
    out += '\n';
    return out;
}

namespace {

Json complex_json(Complex z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json angles_json(const BlochAngles &b) {
    return Json{{"theta", b.theta}, {"phi", b.phi}};
}

Json vector_map_json(const std::map<std::string, CVector> &m) {
    Json out = Json::object();
    for (const auto &[name, v] : m) {
        out[name] = to_json(v);
    }
    return out;
}

}  // namespace

Json to_json(const CVector &v) {
    Json out = Json::array();
    for (Complex z : v.entries()) {
        out.push_back(complex_json(z));
    }
    return out;
}

Json to_json(const CMatrix &m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(complex_json(m(i, j)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(const ScenarioConfig &cfg) {
    const NotGateParams &p = cfg.not_params;
    const MachineOverrides &m = cfg.machine;
    return Json{
        {"scenario", to_string(cfg.kind)},
        {"basis1", angles_json(cfg.basis1)},
        {"basis2", angles_json(cfg.basis2)},
        {"not_gate",
         {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"theta", p.theta}, {"enforce_constraints", p.enforce_constraints}}},
        {"machine",
         {{"enabled", m.enabled},
          {"mu", m.mu},
          {"nu", m.nu},
          {"phi1", m.phi1},
          {"phi2", m.phi2},
          {"memory_dim", m.memory_dim},
          {"memory", vector_map_json(m.memory)},
          {"ancilla_dim", m.ancilla_dim},
          {"ancilla", vector_map_json(m.ancilla)},
          {"sigma", m.sigma ? to_json(*m.sigma) : Json(nullptr)},
          {"cross_outputs", vector_map_json(m.cross_outputs)}}},
        {"signalling_threshold", cfg.signalling_threshold},
    };
}

Json to_json(const SignallingReport &report) {
    return Json{
        {"scenario", to_string(report.kind)},
        {"mode", to_string(report.mode)},
        {"config", to_json(report.config)},
        {"trace_distance", report.distance},
        {"verdict", to_string(report.verdict)},
        {"closed_form_residual", report.closed_form_residual ? Json(*report.closed_form_residual) : Json(nullptr)},
        {"rho_left", to_json(report.rho_left.matrix())},
        {"rho_right", to_json(report.rho_right.matrix())},
        {"tolerances",
         {{"signalling_threshold", report.config.signalling_threshold},
          {"hermiticity", HERMITICITY_TOL},
          {"eigen", EIG_TOL},
          {"equality", EQUALITY_TOL},
          {"norm", NORM_TOL},
          {"zero_probability", ZERO_PROBABILITY}}},
    };
}

namespace {

void expect_object(const Json &v, const std::string &path) {
    if (!v.is_object()) {
        throw BadConfig(path + " must be an object");
    }
}

void expect_keys(const Json &v, std::initializer_list<std::string_view> allowed, const std::string &path) {
    expect_object(v, path);
    for (auto it = v.begin(); it != v.end(); ++it) {
        bool known = false;
        for (std::string_view a : allowed) {
            known = known || it.key() == a;
        }
        if (!known) {
            throw BadConfig("unknown key '" + it.key() + "' in " + path);
        }
    }
}

std::string join(const std::string &path, const std::string &key) {
    return path.empty() ? key : path + "." + key;
}

double number(const Json &v, const std::string &path) {
    if (!v.is_number()) {
        throw BadConfig(path + " must be a number");
    }
    return v.get<double>();
}

bool boolean(const Json &v, const std::string &path) {
    if (!v.is_boolean()) {
        throw BadConfig(path + " must be true or false");
    }
    return v.get<bool>();
}

std::size_t count(const Json &v, const std::string &path) {
    if (!v.is_number_integer() || v.get<long long>() <= 0) {
        throw BadConfig(path + " must be a positive integer");
    }
    return v.get<std::size_t>();
}

Complex complex_entry(const Json &v, const std::string &path) {
    if (v.is_number()) {
        return v.get<double>();
    }
    expect_keys(v, {"re", "im"}, path);
    if (!v.contains("re") || !v.contains("im")) {
        throw BadConfig(path + " needs both re and im");
    }
    return {number(v["re"], join(path, "re")), number(v["im"], join(path, "im"))};
}

CVector vector_from(const Json &v, const std::string &path) {
    if (!v.is_array() || v.empty()) {
        throw BadConfig(path + " must be a non-empty array of amplitudes");
    }
    CVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = complex_entry(v[i], path + "[" + std::to_string(i) + "]");
    }
    return out;
}

std::map<std::string, CVector> vector_map_from(const Json &v, const std::string &path) {
    expect_object(v, path);
    std::map<std::string, CVector> out;
    for (auto it = v.begin(); it != v.end(); ++it) {
        out.emplace(it.key(), vector_from(it.value(), join(path, it.key())));
    }
    return out;
}

void apply_angles(BlochAngles &b, const Json &v, const std::string &path) {
    expect_keys(v, {"theta", "phi"}, path);
    if (v.contains("theta")) {
        b.theta = number(v["theta"], join(path, "theta"));
    }
    if (v.contains("phi")) {
        b.phi = number(v["phi"], join(path, "phi"));
    }
}

void apply_not_gate(NotGateParams &p, const Json &v) {
    const std::string path = "not_gate";
    expect_keys(v, {"a", "b", "c", "d", "theta", "enforce_constraints"}, path);
    for (auto [key, field] : {std::pair{"a", &p.a}, {"b", &p.b}, {"c", &p.c}, {"d", &p.d}, {"theta", &p.theta}}) {
        if (v.contains(key)) {
            *field = number(v[key], join(path, key));
        }
    }
    if (v.contains("enforce_constraints")) {
        p.enforce_constraints = boolean(v["enforce_constraints"], join(path, "enforce_constraints"));
    }
}

void apply_machine(MachineOverrides &m, const Json &v) {
    const std::string path = "machine";
    expect_keys(v,
                {"enabled", "mu", "nu", "phi1", "phi2", "memory_dim", "memory", "ancilla_dim", "ancilla", "sigma",
                 "cross_outputs"},
                path);
    if (v.contains("enabled")) {
        m.enabled = boolean(v["enabled"], join(path, "enabled"));
    }
    for (auto [key, field] : {std::pair{"mu", &m.mu}, {"nu", &m.nu}, {"phi1", &m.phi1}, {"phi2", &m.phi2}}) {
        if (v.contains(key)) {
            *field = number(v[key], join(path, key));
        }
    }
    if (v.contains("memory_dim")) {
        m.memory_dim = count(v["memory_dim"], join(path, "memory_dim"));
    }
    if (v.contains("ancilla_dim")) {
        m.ancilla_dim = count(v["ancilla_dim"], join(path, "ancilla_dim"));
    }
    if (v.contains("memory")) {
        m.memory = vector_map_from(v["memory"], join(path, "memory"));
    }
    if (v.contains("ancilla")) {
        m.ancilla = vector_map_from(v["ancilla"], join(path, "ancilla"));
    }
    if (v.contains("sigma")) {
        if (v["sigma"].is_null()) {
            m.sigma.reset();
        } else {
            m.sigma = vector_from(v["sigma"], join(path, "sigma"));
        }
    }
    if (v.contains("cross_outputs")) {
        m.cross_outputs = vector_map_from(v["cross_outputs"], join(path, "cross_outputs"));
    }
}

std::string name_of(const Json &v, const std::string &path) {
    if (!v.contains("name") || !v["name"].is_string()) {
        throw BadConfig(path + ".name must be a string");
    }
    return v["name"].get<std::string>();
}

void apply_sweep(SweepSpec &spec, const Json &v) {
    const std::string path = "sweep";
    expect_keys(v, {"axes", "minimize", "threads"}, path);
    if (v.contains("axes")) {
        if (!v["axes"].is_array()) {
            throw BadConfig("sweep.axes must be an array");
        }
        spec.axes.clear();
        for (std::size_t i = 0; i < v["axes"].size(); ++i) {
            const Json &a = v["axes"][i];
            const std::string p = "sweep.axes[" + std::to_string(i) + "]";
            expect_keys(a, {"name", "min", "max", "steps"}, p);
            if (!a.contains("min") || !a.contains("max") || !a.contains("steps")) {
                throw BadConfig(p + " needs name, min, max and steps");
            }
            spec.axes.push_back({name_of(a, p), number(a["min"], p + ".min"), number(a["max"], p + ".max"),
                                 count(a["steps"], p + ".steps")});
        }
    }
    if (v.contains("minimize")) {
        if (!v["minimize"].is_array()) {
            throw BadConfig("sweep.minimize must be an array");
        }
        spec.minimize_over.clear();
        for (std::size_t i = 0; i < v["minimize"].size(); ++i) {
            const Json &a = v["minimize"][i];
            const std::string p = "sweep.minimize[" + std::to_string(i) + "]";
            expect_keys(a, {"name", "steps"}, p);
            MinimizeAxis axis{name_of(a, p)};
            if (a.contains("steps")) {
                axis.steps = count(a["steps"], p + ".steps");
            }
            spec.minimize_over.push_back(std::move(axis));
        }
    }
    if (v.contains("threads")) {
        spec.threads = count(v["threads"], "sweep.threads");
    }
}

}  // namespace

void apply_config_json(ScenarioConfig &cfg, const Json &doc, SweepSpec *sweep) {
    expect_keys(doc, {"scenario", "basis1", "basis2", "not_gate", "machine", "signalling_threshold", "sweep"}, "config");
    if (doc.contains("scenario")) {
        if (!doc["scenario"].is_string()) {
            throw BadConfig("scenario must be a string");
        }
        const std::string name = doc["scenario"].get<std::string>();
        const auto kind = parse_scenario_kind(name);
        if (!kind) {
            throw BadConfig("unknown scenario '" + name + "'");
        }
        if (*kind != cfg.kind) {
            throw BadConfig("config is for " + name + ", not " + std::string(to_string(cfg.kind)));
        }
    }
    if (doc.contains("basis1")) {
        apply_angles(cfg.basis1, doc["basis1"], "basis1");
    }
    if (doc.contains("basis2")) {
        apply_angles(cfg.basis2, doc["basis2"], "basis2");
    }
    if (doc.contains("not_gate")) {
        apply_not_gate(cfg.not_params, doc["not_gate"]);
    }
    if (doc.contains("machine")) {
        apply_machine(cfg.machine, doc["machine"]);
    }
    if (doc.contains("signalling_threshold")) {
        cfg.signalling_threshold = number(doc["signalling_threshold"], "signalling_threshold");
    }
    if (doc.contains("sweep")) {
        if (sweep == nullptr) {
            throw BadConfig("a sweep section is only accepted by the sweep command");
        }
        apply_sweep(*sweep, doc["sweep"]);
    }
}

namespace {

void write_matrix(std::ostringstream &out, const char *label, const DensityMatrix &rho) {
    const CMatrix &m = rho.matrix();
    out << label << " (" << m.rows() << "x" << m.cols() << "):\n";
    char buf[64];
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << " ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Complex z = m(i, j);
            std::snprintf(buf, sizeof buf, " %+.6f%+.6fi", z.real() == 0 ? 0.0 : z.real(), z.imag() == 0 ? 0.0 : z.imag());
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace

std::string to_text(const SignallingReport &report) {
    std::ostringstream out;
    out << "scenario: " << to_string(report.kind) << " (" << to_string(report.mode) << ")\n";
    out << "trace distance: " << format_double(report.distance) << '\n';
    out << "verdict: " << to_string(report.verdict) << " (threshold "
        << format_double(report.config.signalling_threshold) << ")\n";
    out << "closed-form residual: "
        << (report.closed_form_residual ? format_double(*report.closed_form_residual) : std::string("n/a")) << '\n';
    const bool remote = report.mode == SignallingMode::remote_change;
    write_matrix(out, remote ? "rho before" : "rho basis 1", report.rho_left);
    write_matrix(out, remote ? "rho after" : "rho basis 2", report.rho_right);
    return out.str();
}

}  // namespace nosig
