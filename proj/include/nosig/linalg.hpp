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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace nosig {

using Complex = std::complex<double>;

/// Dense complex column vector.
class CVector {
   public:
    CVector() = default;
    explicit CVector(std::size_t dim) : entries_(dim) {}
    explicit CVector(std::vector<Complex> entries) : entries_(std::move(entries)) {}
    CVector(std::initializer_list<Complex> entries) : entries_(entries) {}

    static CVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return entries_.size(); }
    Complex &operator[](std::size_t i) { return entries_[i]; }
    const Complex &operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Complex> entries() const { return entries_; }

    double norm() const;

    CVector &operator+=(const CVector &other);
    CVector &operator-=(const CVector &other);
    CVector &operator*=(Complex factor);

    bool operator==(const CVector &other) const = default;

   private:
    std::vector<Complex> entries_;
};

CVector operator+(CVector a, const CVector &b);
CVector operator-(CVector a, const CVector &b);
CVector operator*(Complex factor, CVector v);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const CVector &a, const CVector &b);

/// Dense complex matrix, row-major.
class CMatrix {
   public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(std::span<const double> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const Complex> entries() const { return entries_; }

    CMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// Largest entrywise modulus of (this - other). Shapes must agree.
    double max_abs_diff(const CMatrix &other) const;
    /// True when |m(i,j) - conj(m(j,i))| <= tol for every entry.
    bool is_hermitian(double tol) const;

    CMatrix &operator+=(const CMatrix &other);
    CMatrix &operator-=(const CMatrix &other);
    CMatrix &operator*=(Complex factor);

    bool operator==(const CMatrix &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

CMatrix operator+(CMatrix a, const CMatrix &b);
CMatrix operator-(CMatrix a, const CMatrix &b);
CMatrix operator*(Complex factor, CMatrix m);
CMatrix operator*(const CMatrix &a, const CMatrix &b);
CVector operator*(const CMatrix &m, const CVector &v);

/// |a><b|
CMatrix outer(const CVector &a, const CVector &b);

/// Kronecker products, big-endian: the first factor is the most significant index.
CMatrix tensor_product(const CMatrix &a, const CMatrix &b);
CVector tensor_product(const CVector &a, const CVector &b);

struct HermitianEigensystem {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // column k is the eigenvector of values[k]
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
///
/// Throws NotSquare for non-square input and NotHermitian when any entry
/// differs from the conjugate of its transpose partner by more than
/// HERMITICITY_TOL. The input is symmetrized before rotating, so the
/// returned values are exactly real.
HermitianEigensystem hermitian_eigensystem(const CMatrix &m);

/// Eigenvalues only, ascending.
std::vector<double> hermitian_eigenvalues(const CMatrix &m);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const CMatrix &m);

}  // namespace nosig
