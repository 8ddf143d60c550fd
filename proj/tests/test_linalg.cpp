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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "nosig/errors.hpp"
#include "nosig/linalg.hpp"
#include "nosig/random.hpp"
#include "oracles.hpp"

using namespace nosig;

namespace {

CMatrix rebuild(const HermitianEigensystem &es) {
    const std::size_t n = es.values.size();
    CMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        d(i, i) = es.values[i];
    }
    return es.vectors * d * es.vectors.adjoint();
}

}  // namespace

TEST(Linalg, KroneckerIsBigEndian) {
    const CVector v = tensor_product(CVector{1.0, 2.0}, CVector{3.0, 5.0, 7.0});
    ASSERT_EQ(v.dim(), 6u);
    EXPECT_EQ(v[0], Complex(3.0));
    EXPECT_EQ(v[2], Complex(7.0));
    EXPECT_EQ(v[3], Complex(6.0));
    EXPECT_EQ(v[5], Complex(14.0));

    const CMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    const CMatrix k = tensor_product(x, CMatrix::identity(2));
    EXPECT_EQ(k(0, 2), Complex(1.0));
    EXPECT_EQ(k(1, 3), Complex(1.0));
    EXPECT_EQ(k(0, 1), Complex(0.0));
}

TEST(Linalg, InnerIsConjugateLinearInFirstArgument) {
    const CVector a{Complex(0, 1), 0.0};
    const CVector b{1.0, 0.0};
    EXPECT_EQ(inner(a, b), Complex(0, -1));
    EXPECT_EQ(inner(b, a), Complex(0, 1));
}

TEST(Linalg, OuterAndAdjoint) {
    const CVector a{1.0, Complex(0, 1)};
    const CMatrix m = outer(a, a);
    EXPECT_EQ(m(0, 1), Complex(0, -1));
    EXPECT_EQ(m(1, 0), Complex(0, 1));
    EXPECT_TRUE(m.is_hermitian(0));
    EXPECT_EQ(m.trace(), Complex(2.0));
    EXPECT_EQ(m.adjoint(), m);
}

TEST(Linalg, MatrixProductShapes) {
    const CMatrix a(2, 3);
    const CMatrix b(3, 4);
    const CMatrix c = a * b;
    EXPECT_EQ(c.rows(), 2u);
    EXPECT_EQ(c.cols(), 4u);
}

TEST(Linalg, EigensystemReconstructsRandomHermitian) {
    Rng rng(11);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const CMatrix h = random_hermitian(rng, n, 3.0);
            const auto es = hermitian_eigensystem(h);
            ASSERT_EQ(es.values.size(), n);
            EXPECT_TRUE(std::is_sorted(es.values.begin(), es.values.end()));
            EXPECT_LT(rebuild(es).max_abs_diff(h), 1e-10);
            EXPECT_LT((es.vectors.adjoint() * es.vectors).max_abs_diff(CMatrix::identity(n)), 1e-10);
        }
    }
}

TEST(Linalg, EigenvaluesMatchQuadraticFormula) {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const CMatrix h = random_hermitian(rng, 2);
        const auto want = oracle::eigenvalues_2x2(h(0, 0).real(), h(0, 1), h(1, 1).real());
        const auto got = hermitian_eigenvalues(h);
        EXPECT_NEAR(got[0], want[0], 1e-12);
        EXPECT_NEAR(got[1], want[1], 1e-12);
    }
}

TEST(Linalg, EigenvaluesMatchCubicRoots) {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const CMatrix h = random_hermitian(rng, 3);
        std::array<std::array<oracle::C, 3>, 3> m;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                m[i][j] = h(i, j);
            }
        }
        const auto want = oracle::eigenvalues_3x3(m);
        const auto got = hermitian_eigenvalues(h);
        for (std::size_t k = 0; k < 3; ++k) {
            EXPECT_NEAR(got[k], want[k], 1e-10);
        }
    }
}

TEST(Linalg, DegenerateAndDiagonalInputs) {
    const auto id = hermitian_eigensystem(CMatrix::identity(4));
    for (double v : id.values) {
        EXPECT_DOUBLE_EQ(v, 1.0);
    }
    const std::vector<double> diag{3.0, -1.0, 2.0};
    const auto values = hermitian_eigenvalues(CMatrix::diagonal(diag));
    EXPECT_EQ(values, (std::vector<double>{-1.0, 2.0, 3.0}));
    EXPECT_TRUE(hermitian_eigenvalues(CMatrix(0, 0)).empty());
}

TEST(Linalg, LargeNormMatrixConverges) {
    Rng rng(14);
    const CMatrix h = Complex(1e8) * random_hermitian(rng, 6);
    const auto es = hermitian_eigensystem(h);
    EXPECT_LT(rebuild(es).max_abs_diff(h), 1e-8 * h.frobenius_norm());
}

TEST(Linalg, RejectsBadInput) {
    EXPECT_THROW(hermitian_eigensystem(CMatrix(2, 3)), NotSquare);
    const CMatrix skew{{0.0, 1.0}, {0.0, 0.0}};
    EXPECT_THROW(hermitian_eigensystem(skew), NotHermitian);
    EXPECT_THROW(CMatrix(2, 2) + CMatrix(3, 3), DimMismatch);
}

TEST(Linalg, TraceNorm) {
    const std::vector<double> diag{1.0, -2.0, 0.5};
    EXPECT_NEAR(trace_norm(CMatrix::diagonal(diag)), 3.5, 1e-14);
    const CMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    EXPECT_NEAR(trace_norm(x), 2.0, 1e-14);
}

TEST(Linalg, ErrorsAreRuntimeErrors) {
    try {
        hermitian_eigensystem(CMatrix(1, 2));
        FAIL();
    } catch (const std::runtime_error &e) {
        EXPECT_NE(std::string(e.what()), "");
    }
}
