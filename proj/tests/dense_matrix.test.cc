// Copyright 2026 The gencube Authors
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

#include "gencube/dense_matrix.h"

#include <gtest/gtest.h>

#include <cmath>

#include "test_helpers.h"

using namespace gencube;

TEST(dense_matrix, kron_of_identities) {
    auto k = kron(DenseMatrix::identity(2), DenseMatrix::identity(4));
    ASSERT_EQ(k.dim(), 8u);
    ASSERT_LT(k.max_abs_diff(DenseMatrix::identity(8)), 1e-15);
}

TEST(dense_matrix, partial_trace_of_product) {
    std::mt19937_64 rng(1);
    auto a = gencube_test::random_hermitian(2, rng);
    auto b = gencube_test::random_hermitian(4, rng);
    std::vector<size_t> traced{1, 2};
    auto r = partial_trace_qubits(kron(a, b), 3, traced);
    ASSERT_LT(r.max_abs_diff(a * b.trace()), 1e-12);
    std::vector<size_t> first{0};
    ASSERT_LT(partial_trace_qubits(kron(a, b), 3, first).max_abs_diff(b * a.trace()), 1e-12);
}

TEST(dense_matrix, partial_transpose_of_product) {
    std::mt19937_64 rng(2);
    auto a = gencube_test::random_hermitian(2, rng);
    auto b = gencube_test::random_hermitian(2, rng);
    std::vector<size_t> second{1};
    ASSERT_LT(partial_transpose_qubits(kron(a, b), 2, second).max_abs_diff(kron(a, b.transpose())), 1e-15);
    std::vector<size_t> both{0, 1};
    ASSERT_LT(partial_transpose_qubits(kron(a, b), 2, both).max_abs_diff(kron(a, b).transpose()), 1e-15);
}

TEST(dense_matrix, eigenvalues_of_paulis) {
    for (int k = 1; k < 4; k++) {
        auto e = eigenvalues_hermitian(pauli_matrix(k));
        ASSERT_NEAR(e[0], -1, 1e-13);
        ASSERT_NEAR(e[1], 1, 1e-13);
    }
}

TEST(dense_matrix, eigenvalues_match_power_sums) {
    std::mt19937_64 rng(3);
    for (size_t dim : {2, 3, 4, 7, 16}) {
        for (int rep = 0; rep < 5; rep++) {
            auto h = gencube_test::random_hermitian(dim, rng);
            auto e = eigenvalues_hermitian(h);
            ASSERT_EQ(e.size(), dim);
            ASSERT_TRUE(std::is_sorted(e.begin(), e.end()));
            DenseMatrix power = DenseMatrix::identity(dim);
            for (int k = 1; k <= static_cast<int>(dim); k++) {
                power = power * h;
                double s = 0;
                for (double x : e) {
                    s += std::pow(x, k);
                }
                double expected = power.trace().real();
                ASSERT_NEAR(s, expected, 1e-9 * std::max(1.0, std::abs(expected))) << "dim " << dim << " k " << k;
            }
        }
    }
}

TEST(dense_matrix, eigenvalues_reject_non_hermitian) {
    DenseMatrix m(2, {0, 1, 0, 0});
    ASSERT_THROW(eigenvalues_hermitian(m), std::invalid_argument);
}

TEST(dense_matrix, ket_projector_is_rank_one) {
    std::vector<Complex> ket{Complex{0.6, 0}, Complex{0, 0.8}};
    auto p = ket_projector(ket);
    ASSERT_LT((p * p).max_abs_diff(p), 1e-15);
    ASSERT_NEAR(p.trace().real(), 1, 1e-15);
}
