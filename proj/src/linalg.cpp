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

#include "nosig/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nosig/errors.hpp"
#include "nosig/tolerances.hpp"

namespace nosig {

CVector CVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw OutOfRange("basis index " + std::to_string(index) + " outside dimension " + std::to_string(dim));
    }
    CVector v(dim);
    v[index] = 1.0;
    return v;
}

double CVector::norm() const {
    double total = 0;
    for (const auto &z : entries_) {
        total += std::norm(z);
    }
    return std::sqrt(total);
}

CVector &CVector::operator+=(const CVector &other) {
    if (other.dim() != dim()) {
        throw DimMismatch("vector addition with dimensions " + std::to_string(dim()) + " and " +
                          std::to_string(other.dim()));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

CVector &CVector::operator-=(const CVector &other) {
    if (other.dim() != dim()) {
        throw DimMismatch("vector subtraction with dimensions " + std::to_string(dim()) + " and " +
                          std::to_string(other.dim()));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

CVector &CVector::operator*=(Complex factor) {
    for (auto &z : entries_) {
        z *= factor;
    }
    return *this;
}

CVector operator+(CVector a, const CVector &b) {
    a += b;
    return a;
}

CVector operator-(CVector a, const CVector &b) {
    a -= b;
    return a;
}

CVector operator*(Complex factor, CVector v) {
    v *= factor;
    return v;
}

Complex inner(const CVector &a, const CVector &b) {
    if (a.dim() != b.dim()) {
        throw DimMismatch("inner product of dimensions " + std::to_string(a.dim()) + " and " +
                          std::to_string(b.dim()));
    }
    Complex total = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimMismatch("matrix of shape " + std::to_string(rows_) + "x" + std::to_string(cols_) + " given " +
                          std::to_string(entries_.size()) + " entries");
    }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DimMismatch("ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
    CMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix result(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            result(c, r) = std::conj((*this)(r, c));
        }
    }
    return result;
}

Complex CMatrix::trace() const {
    if (!is_square()) {
        throw NotSquare("trace of a " + std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
    }
    Complex total = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        total += (*this)(i, i);
    }
    return total;
}

double CMatrix::frobenius_norm() const {
    double total = 0;
    for (const auto &z : entries_) {
        total += std::norm(z);
    }
    return std::sqrt(total);
}

double CMatrix::max_abs_diff(const CMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimMismatch("comparing matrices of different shape");
    }
    double worst = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    }
    return worst;
}

bool CMatrix::is_hermitian(double tol) const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimMismatch("matrix addition with different shapes");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimMismatch("matrix subtraction with different shapes");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

CMatrix &CMatrix::operator*=(Complex factor) {
    for (auto &z : entries_) {
        z *= factor;
    }
    return *this;
}

CMatrix operator+(CMatrix a, const CMatrix &b) {
    a += b;
    return a;
}

CMatrix operator-(CMatrix a, const CMatrix &b) {
    a -= b;
    return a;
}

CMatrix operator*(Complex factor, CMatrix m) {
    m *= factor;
    return m;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimMismatch("matrix product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                          " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    CMatrix result(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                result(r, c) += ark * b(k, c);
            }
        }
    }
    return result;
}

CVector operator*(const CMatrix &m, const CVector &v) {
    if (m.cols() != v.dim()) {
        throw DimMismatch("matrix-vector product of " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + " and dimension " + std::to_string(v.dim()));
    }
    CVector result(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Complex total = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            total += m(r, c) * v[c];
        }
        result[r] = total;
    }
    return result;
}

CMatrix outer(const CVector &a, const CVector &b) {
    CMatrix result(a.dim(), b.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < b.dim(); ++c) {
            result(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return result;
}

CMatrix tensor_product(const CMatrix &a, const CMatrix &b) {
    CMatrix result(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex factor = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    result(ar * b.rows() + br, ac * b.cols() + bc) = factor * b(br, bc);
                }
            }
        }
    }
    return result;
}

CVector tensor_product(const CVector &a, const CVector &b) {
    CVector result(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            result[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return result;
}

namespace {

constexpr int MAX_JACOBI_SWEEPS = 100;

double off_diagonal_norm(const CMatrix &a) {
    double total = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r != c) {
                total += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(total);
}

// Zeroes a(p, q) with the unitary G = diag(1, conj(e)) * [[c, s], [-s, c]]
// acting on coordinates (p, q), where e = a(p,q)/|a(p,q)|. Updates a <- G^H a G
// and v <- v G.
void rotate(CMatrix &a, CMatrix &v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0) {
        return;
    }
    const Complex e_bar = std::conj(apq / r);
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2 * r);
    const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
    const double c = 1 / std::sqrt(t * t + 1);
    const double s = t * c;

    const Complex g_pp = c;
    const Complex g_pq = s;
    const Complex g_qp = -s * e_bar;
    const Complex g_qq = c * e_bar;

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * g_pp + akq * g_qp;
        a(k, q) = akp * g_pq + akq * g_qq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
        a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * g_pp + vkq * g_qp;
        v(k, q) = vkp * g_pq + vkq * g_qq;
    }
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const CMatrix &m) {
    if (!m.is_square()) {
        throw NotSquare("eigenvalues of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " matrix");
    }
    if (!m.is_hermitian(HERMITICITY_TOL)) {
        throw NotHermitian("matrix is not Hermitian within " + std::to_string(HERMITICITY_TOL));
    }
    const std::size_t n = m.rows();
    CMatrix a = 0.5 * (m + m.adjoint());
    CMatrix v = CMatrix::identity(n);
    const double scale = std::max(1.0, a.frobenius_norm());

    int sweep = 0;
    while (off_diagonal_norm(a) >= EIG_TOL * scale) {
        if (++sweep > MAX_JACOBI_SWEEPS) {
            throw ConvergenceFailure("Jacobi did not converge in " + std::to_string(MAX_JACOBI_SWEEPS) +
                                     " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(a, v, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEigensystem result{std::vector<double>(n), CMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        result.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            result.vectors(r, k) = v(r, order[k]);
        }
    }
    return result;
}

std::vector<double> hermitian_eigenvalues(const CMatrix &m) {
    return hermitian_eigensystem(m).values;
}

double trace_norm(const CMatrix &m) {
    double total = 0;
    for (double lambda : hermitian_eigenvalues(m)) {
        total += std::abs(lambda);
    }
    return total;
}

}  // namespace nosig
