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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nosig/linalg.hpp"

namespace nosig {

using Dims = std::vector<std::size_t>;

std::size_t total_dim(std::span<const std::size_t> dims);

/// Unit vector over an explicit list of subsystem dimensions (big-endian).
class Ket {
   public:
    /// Throws NotNormalized unless |amplitudes| == 1 within NORM_TOL, and
    /// DimMismatch unless prod(dims) == amplitudes.dim().
    Ket(Dims dims, CVector amplitudes);

    /// Rescales `amplitudes` to unit norm. Throws NotNormalized on a null vector.
    static Ket normalized(Dims dims, CVector amplitudes);
    /// Computational basis state |index> of a single d-level system.
    static Ket basis(std::size_t dim, std::size_t index);

    const Dims &dims() const { return dims_; }
    const CVector &amplitudes() const { return amplitudes_; }
    std::size_t dim() const { return amplitudes_.dim(); }
    std::size_t subsystem_count() const { return dims_.size(); }

    /// Multiplies by a unit-modulus phase.
    Ket phased(Complex phase) const;

   private:
    Dims dims_;
    CVector amplitudes_;
};

/// Kronecker product of kets. Subsystems of dimension 1 are dropped from the
/// resulting dimension list unless nothing else remains.
Ket tensor_product(const Ket &a, const Ket &b);

/// <a|b>; dims must match.
Complex overlap(const Ket &a, const Ket &b);

struct BlochAngles {
    double theta = 0;  // [0, pi]
    double phi = 0;    // [0, 2 pi)

    /// Throws OutOfRange outside the ranges above.
    static BlochAngles checked(double theta, double phi);
    /// Reduces phi modulo 2 pi first; theta must still be in [0, pi].
    static BlochAngles wrapped(double theta, double phi);

    bool operator==(const BlochAngles &) const = default;
};

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
Ket ket_from_bloch(const BlochAngles &angles);

/// Bloch angles of a single-qubit ket, ignoring its global phase.
BlochAngles bloch_of(const Ket &k);

/// For k = cos(t/2)|0> + e^{i p} sin(t/2)|1> (up to global phase) returns
/// sin(t/2)|0> - e^{i p} cos(t/2)|1>. Throws NotAQubit for other dims.
Ket orthogonal_complement(const Ket &k);

/// An orthonormal qubit basis {psi, psi_bar}.
class QubitBasis {
   public:
    /// Throws NotOrthonormal if <psi|psi_bar> != 0 within NORM_TOL.
    QubitBasis(Ket psi, Ket psi_bar);
    static QubitBasis from_bloch(const BlochAngles &angles);
    static QubitBasis computational();

    const Ket &psi() const { return psi_; }
    const Ket &psi_bar() const { return psi_bar_; }

   private:
    Ket psi_;
    Ket psi_bar_;
};

/// (|psi psi_bar> - |psi_bar psi>)/sqrt(2).
Ket singlet_in_basis(const QubitBasis &basis);

/// Hermitian, trace-one, positive semidefinite matrix over explicit subsystem dims.
class DensityMatrix {
   public:
    /// Validates all three properties (HERMITICITY_TOL, EQUALITY_TOL, eigenvalues >= -EQUALITY_TOL);
    /// throws NotADensityMatrix (or DimMismatch on shape errors).
    DensityMatrix(Dims dims, CMatrix matrix);

    const Dims &dims() const { return dims_; }
    const CMatrix &matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.rows(); }

    static DensityMatrix maximally_mixed(Dims dims);

   private:
    Dims dims_;
    CMatrix matrix_;
};

/// |k><k|.
DensityMatrix density_of(const Ket &k);

/// Traces out every subsystem not listed in `keep`. The kept subsystems
/// appear in ascending index order. Throws BadSubsystemIndex for an empty,
/// duplicated or out-of-range index set.
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::size_t> keep);

/// rho_a (x) rho_b.
DensityMatrix tensor_product(const DensityMatrix &a, const DensityMatrix &b);

struct EnsembleMember {
    double probability = 0;
    Ket state;
    // Optional name binding the member to a registered domain state.
    std::string label;
};

class Ensemble {
   public:
    /// Throws EmptyEnsemble for no members, BadConfig for probabilities outside
    /// [0, 1] or not summing to 1 within NORM_TOL, DimMismatch for mixed dims.
    explicit Ensemble(std::vector<EnsembleMember> members);

    const std::vector<EnsembleMember> &members() const { return members_; }
    std::size_t size() const { return members_.size(); }

   private:
    std::vector<EnsembleMember> members_;
};

/// Projective measurement of `alice_subsystems` of `state` in `alice_basis`.
///
/// Each basis ket lives on the listed Alice subsystems (in the listed order).
/// Member i carries probability ||<b_i|state>||^2 and the normalized collapsed
/// state of the remaining subsystems (ascending order). Outcomes with
/// probability below ZERO_PROBABILITY are dropped. When `outcome_labels` is
/// given it must have one entry per basis element; the label is attached to
/// the corresponding member.
Ensemble measure_alice(const Ket &state, std::span<const Ket> alice_basis,
                       std::span<const std::size_t> alice_subsystems,
                       std::span<const std::string> outcome_labels = {});

/// sum_i p_i |s_i><s_i|.
DensityMatrix ensemble_density(const Ensemble &e);

/// (1/2) ||a - b||_1, clamped to [0, 1]. Throws DimMismatch for different dims.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

/// Applies `op` to the listed subsystems of `state` (big-endian over the
/// listed order) and the identity elsewhere. Throws NotNormalized when `op`
/// is not unitary on the given state.
Ket apply_local(const Ket &state, const CMatrix &op, std::span<const std::size_t> subsystems);

}  // namespace nosig
