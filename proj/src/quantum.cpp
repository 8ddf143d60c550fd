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

#include "nosig/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include "nosig/errors.hpp"
#include "nosig/tolerances.hpp"

namespace nosig {

std::size_t total_dim(std::span<const std::size_t> dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

namespace {

std::string dims_string(std::span<const std::size_t> dims) {
    std::string out = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        out += (i ? "," : "") + std::to_string(dims[i]);
    }
    return out + "]";
}

// Splits the subsystems of `dims` into an ordered "selected" group and the
// ascending remainder, and maps every flat index to (selected index, rest index).
struct Bipartition {
    std::vector<std::size_t> selected_flat;
    std::vector<std::size_t> rest_flat;
    std::size_t selected_dim = 1;
    std::size_t rest_dim = 1;
    Dims rest_dims;
};

Bipartition bipartition(const Dims &dims, std::span<const std::size_t> selected) {
    std::vector<bool> taken(dims.size(), false);
    if (selected.empty()) {
        throw BadSubsystemIndex("empty subsystem set");
    }
    for (std::size_t s : selected) {
        if (s >= dims.size()) {
            throw BadSubsystemIndex("subsystem " + std::to_string(s) + " outside " + dims_string(dims));
        }
        if (taken[s]) {
            throw BadSubsystemIndex("subsystem " + std::to_string(s) + " listed twice");
        }
        taken[s] = true;
    }
    Bipartition out;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (!taken[i]) {
            rest.push_back(i);
            out.rest_dims.push_back(dims[i]);
        }
    }
    for (std::size_t s : selected) {
        out.selected_dim *= dims[s];
    }
    out.rest_dim = total_dim(out.rest_dims);

    const std::size_t n = total_dim(dims);
    out.selected_flat.resize(n);
    out.rest_flat.resize(n);
    std::vector<std::size_t> digits(dims.size());
    for (std::size_t flat = 0; flat < n; ++flat) {
        std::size_t remaining = flat;
        for (std::size_t k = dims.size(); k-- > 0;) {
            digits[k] = remaining % dims[k];
            remaining /= dims[k];
        }
        std::size_t sel = 0;
        for (std::size_t s : selected) {
            sel = sel * dims[s] + digits[s];
        }
        std::size_t res = 0;
        for (std::size_t r : rest) {
            res = res * dims[r] + digits[r];
        }
        out.selected_flat[flat] = sel;
        out.rest_flat[flat] = res;
    }
    return out;
}

Dims strip_unit_dims(Dims dims) {
    Dims out;
    for (std::size_t d : dims) {
        if (d != 1) {
            out.push_back(d);
        }
    }
    if (out.empty()) {
        out.push_back(1);
    }
    return out;
}

}  // namespace

Ket::Ket(Dims dims, CVector amplitudes) : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
    if (dims_.empty() || total_dim(dims_) != amplitudes_.dim()) {
        throw DimMismatch("ket dims " + dims_string(dims_) + " do not match " +
                          std::to_string(amplitudes_.dim()) + " amplitudes");
    }
    const double norm = amplitudes_.norm();
    if (!std::isfinite(norm) || std::abs(norm - 1) > NORM_TOL) {
        throw NotNormalized("ket norm is " + std::to_string(norm));
    }
}

Ket Ket::normalized(Dims dims, CVector amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0) || !std::isfinite(norm)) {
        throw NotNormalized("cannot normalize a null vector");
    }
    amplitudes *= 1.0 / norm;
    return Ket(std::move(dims), std::move(amplitudes));
}

Ket Ket::basis(std::size_t dim, std::size_t index) {
    return Ket({dim}, CVector::basis(dim, index));
}

Ket Ket::phased(Complex phase) const {
    return Ket(dims_, phase * amplitudes_);
}

Ket tensor_product(const Ket &a, const Ket &b) {
    Dims dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return Ket(strip_unit_dims(std::move(dims)), tensor_product(a.amplitudes(), b.amplitudes()));
}

Complex overlap(const Ket &a, const Ket &b) {
    if (a.dims() != b.dims()) {
        throw DimMismatch("overlap of kets with dims " + dims_string(a.dims()) + " and " + dims_string(b.dims()));
    }
    return inner(a.amplitudes(), b.amplitudes());
}

BlochAngles BlochAngles::checked(double theta, double phi) {
    if (!(theta >= 0 && theta <= std::numbers::pi)) {
        throw OutOfRange("Bloch theta " + std::to_string(theta) + " outside [0, pi]");
    }
    if (!(phi >= 0 && phi < 2 * std::numbers::pi)) {
        throw OutOfRange("Bloch phi " + std::to_string(phi) + " outside [0, 2 pi)");
    }
    return BlochAngles{theta, phi};
}

BlochAngles BlochAngles::wrapped(double theta, double phi) {
    if (!std::isfinite(phi)) {
        throw OutOfRange("Bloch phi is not finite");
    }
    double p = std::fmod(phi, 2 * std::numbers::pi);
    if (p < 0) {
        p += 2 * std::numbers::pi;
    }
    if (p >= 2 * std::numbers::pi) {
        p = 0;
    }
    return checked(theta, p);
}

Ket ket_from_bloch(const BlochAngles &angles) {
    const auto checked = BlochAngles::checked(angles.theta, angles.phi);
    const double c = std::cos(checked.theta / 2);
    const double s = std::sin(checked.theta / 2);
    return Ket::normalized({2}, CVector{c, std::polar(s, checked.phi)});
}

BlochAngles bloch_of(const Ket &k) {
    if (k.dims() != Dims{2}) {
        throw NotAQubit("expected a single qubit, got dims " + dims_string(k.dims()));
    }
    const Complex alpha = k.amplitudes()[0];
    const Complex beta = k.amplitudes()[1];
    const double theta = 2 * std::atan2(std::abs(beta), std::abs(alpha));
    double phi = 0;
    if (std::abs(alpha) > 0 && std::abs(beta) > 0) {
        phi = std::arg(beta) - std::arg(alpha);
    }
    return BlochAngles::wrapped(std::min(theta, std::numbers::pi), phi);
}

Ket orthogonal_complement(const Ket &k) {
    const BlochAngles angles = bloch_of(k);
    const double c = std::cos(angles.theta / 2);
    const double s = std::sin(angles.theta / 2);
    return Ket::normalized({2}, CVector{s, -std::polar(c, angles.phi)});
}

QubitBasis::QubitBasis(Ket psi, Ket psi_bar) : psi_(std::move(psi)), psi_bar_(std::move(psi_bar)) {
    if (psi_.dims() != Dims{2} || psi_bar_.dims() != Dims{2}) {
        throw NotAQubit("qubit basis elements must be single qubits");
    }
    if (std::abs(overlap(psi_, psi_bar_)) > NORM_TOL) {
        throw NotOrthonormal("basis states are not orthogonal");
    }
}

QubitBasis QubitBasis::from_bloch(const BlochAngles &angles) {
    Ket psi = ket_from_bloch(angles);
    Ket psi_bar = orthogonal_complement(psi);
    return QubitBasis(std::move(psi), std::move(psi_bar));
}

QubitBasis QubitBasis::computational() {
    return from_bloch(BlochAngles{0, 0});
}

Ket singlet_in_basis(const QubitBasis &basis) {
    CVector amps = tensor_product(basis.psi().amplitudes(), basis.psi_bar().amplitudes()) -
                   tensor_product(basis.psi_bar().amplitudes(), basis.psi().amplitudes());
    amps *= 1 / std::numbers::sqrt2;
    return Ket({2, 2}, std::move(amps));
}

DensityMatrix::DensityMatrix(Dims dims, CMatrix matrix) : dims_(std::move(dims)), matrix_(std::move(matrix)) {
    if (!matrix_.is_square() || dims_.empty() || total_dim(dims_) != matrix_.rows()) {
        throw DimMismatch("density matrix of shape " + std::to_string(matrix_.rows()) + "x" +
                          std::to_string(matrix_.cols()) + " with dims " + dims_string(dims_));
    }
    if (!matrix_.is_hermitian(HERMITICITY_TOL)) {
        throw NotADensityMatrix("matrix is not Hermitian");
    }
    const Complex tr = matrix_.trace();
    if (std::abs(tr - 1.0) > EQUALITY_TOL) {
        throw NotADensityMatrix("trace is " + std::to_string(tr.real()) + "+" + std::to_string(tr.imag()) + "i");
    }
    const auto eigenvalues = hermitian_eigenvalues(matrix_);
    if (eigenvalues.front() < -EQUALITY_TOL) {
        throw NotADensityMatrix("negative eigenvalue " + std::to_string(eigenvalues.front()));
    }
}

DensityMatrix DensityMatrix::maximally_mixed(Dims dims) {
    const std::size_t n = total_dim(dims);
    return DensityMatrix(std::move(dims), (1.0 / static_cast<double>(n)) * CMatrix::identity(n));
}

DensityMatrix density_of(const Ket &k) {
    return DensityMatrix(k.dims(), outer(k.amplitudes(), k.amplitudes()));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::size_t> keep) {
    std::vector<std::size_t> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    const Bipartition part = bipartition(rho.dims(), sorted);
    Dims kept_dims;
    for (std::size_t s : sorted) {
        kept_dims.push_back(rho.dims()[s]);
    }

    CMatrix reduced(part.selected_dim, part.selected_dim);
    const std::size_t n = rho.dim();
    const CMatrix &m = rho.matrix();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (part.rest_flat[i] == part.rest_flat[j]) {
                reduced(part.selected_flat[i], part.selected_flat[j]) += m(i, j);
            }
        }
    }
    return DensityMatrix(std::move(kept_dims), std::move(reduced));
}

DensityMatrix tensor_product(const DensityMatrix &a, const DensityMatrix &b) {
    Dims dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());
    return DensityMatrix(std::move(dims), tensor_product(a.matrix(), b.matrix()));
}

Ensemble::Ensemble(std::vector<EnsembleMember> members) : members_(std::move(members)) {
    if (members_.empty()) {
        throw EmptyEnsemble("ensemble has no members");
    }
    double total = 0;
    for (const auto &m : members_) {
        if (!(m.probability >= 0 && m.probability <= 1)) {
            throw BadConfig("ensemble probability " + std::to_string(m.probability) + " outside [0, 1]");
        }
        if (m.state.dims() != members_.front().state.dims()) {
            throw DimMismatch("ensemble members have different dims");
        }
        total += m.probability;
    }
    if (std::abs(total - 1) > NORM_TOL) {
        throw BadConfig("ensemble probabilities sum to " + std::to_string(total));
    }
}

Ensemble measure_alice(const Ket &state, std::span<const Ket> alice_basis,
                       std::span<const std::size_t> alice_subsystems,
                       std::span<const std::string> outcome_labels) {
    const Bipartition part = bipartition(state.dims(), alice_subsystems);
    if (alice_subsystems.size() == state.subsystem_count()) {
        throw BadSubsystemIndex("measurement must leave at least one unmeasured subsystem");
    }
    Dims alice_dims;
    for (std::size_t s : alice_subsystems) {
        alice_dims.push_back(state.dims()[s]);
    }
    if (alice_basis.size() != part.selected_dim) {
        throw NotOrthonormal("basis has " + std::to_string(alice_basis.size()) + " elements for a " +
                             std::to_string(part.selected_dim) + "-dimensional space");
    }
    if (!outcome_labels.empty() && outcome_labels.size() != alice_basis.size()) {
        throw BadConfig("one label per measurement outcome required");
    }
    for (std::size_t i = 0; i < alice_basis.size(); ++i) {
        if (alice_basis[i].dims() != alice_dims) {
            throw DimMismatch("basis element dims " + dims_string(alice_basis[i].dims()) + " != " +
                              dims_string(alice_dims));
        }
        for (std::size_t j = 0; j <= i; ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(overlap(alice_basis[i], alice_basis[j]) - expected) > EQUALITY_TOL) {
                throw NotOrthonormal("measurement basis is not orthonormal");
            }
        }
    }

    std::vector<EnsembleMember> members;
    const CVector &amps = state.amplitudes();
    for (std::size_t i = 0; i < alice_basis.size(); ++i) {
        const CVector &b = alice_basis[i].amplitudes();
        CVector collapsed(part.rest_dim);
        for (std::size_t flat = 0; flat < amps.dim(); ++flat) {
            collapsed[part.rest_flat[flat]] += std::conj(b[part.selected_flat[flat]]) * amps[flat];
        }
        const double norm = collapsed.norm();
        const double probability = norm * norm;
        if (probability < ZERO_PROBABILITY) {
            continue;
        }
        members.push_back({probability, Ket::normalized(part.rest_dims, std::move(collapsed)),
                           outcome_labels.empty() ? std::string() : outcome_labels[i]});
    }
    return Ensemble(std::move(members));
}

DensityMatrix ensemble_density(const Ensemble &e) {
    const auto &first = e.members().front().state;
    CMatrix total(first.dim(), first.dim());
    for (const auto &m : e.members()) {
        total += m.probability * outer(m.state.amplitudes(), m.state.amplitudes());
    }
    return DensityMatrix(first.dims(), std::move(total));
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dims() != b.dims()) {
        throw DimMismatch("trace distance between dims " + dims_string(a.dims()) + " and " + dims_string(b.dims()));
    }
    const double d = 0.5 * trace_norm(a.matrix() - b.matrix());
    return std::clamp(d, 0.0, 1.0);
}

Ket apply_local(const Ket &state, const CMatrix &op, std::span<const std::size_t> subsystems) {
    const Bipartition part = bipartition(state.dims(), subsystems);
    if (op.rows() != part.selected_dim || op.cols() != part.selected_dim) {
        throw DimMismatch("local operator of shape " + std::to_string(op.rows()) + "x" + std::to_string(op.cols()) +
                          " on a " + std::to_string(part.selected_dim) + "-dimensional factor");
    }
    // lookup[sel][rest] = flat index
    std::vector<std::size_t> lookup(part.selected_dim * part.rest_dim);
    for (std::size_t flat = 0; flat < state.dim(); ++flat) {
        lookup[part.selected_flat[flat] * part.rest_dim + part.rest_flat[flat]] = flat;
    }
    const CVector &amps = state.amplitudes();
    CVector out(state.dim());
    for (std::size_t flat = 0; flat < state.dim(); ++flat) {
        const std::size_t row = part.selected_flat[flat];
        const std::size_t rest = part.rest_flat[flat];
        Complex total = 0;
        for (std::size_t col = 0; col < part.selected_dim; ++col) {
            total += op(row, col) * amps[lookup[col * part.rest_dim + rest]];
        }
        out[flat] = total;
    }
    return Ket(state.dims(), std::move(out));
}

}  // namespace nosig
