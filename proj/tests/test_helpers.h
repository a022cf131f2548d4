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

#ifndef _GENCUBE_TEST_HELPERS_H
#define _GENCUBE_TEST_HELPERS_H

#include <random>

#include "gencube/pauli_rep.h"

namespace gencube_test {

inline gencube::DenseMatrix random_hermitian(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> n;
    gencube::DenseMatrix m(dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = n(rng);
        for (size_t j = i + 1; j < dim; j++) {
            gencube::Complex c{n(rng), n(rng)};
            m(i, j) = c;
            m(j, i) = std::conj(c);
        }
    }
    return m;
}

inline gencube::PauliCoeffs2Q random_coeffs(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1, 1);
    gencube::PauliCoeffs2Q a;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            a.a[i][j] = u(rng);
        }
    }
    a.a[0][0] = 1;
    return a;
}

inline gencube::BlochOp random_unit_bloch(std::mt19937_64 &rng) {
    std::normal_distribution<double> n;
    double x = n(rng), y = n(rng), z = n(rng);
    double r = std::sqrt(x * x + y * y + z * z);
    return gencube::BlochOp::from_bloch(x / r, y / r, z / r);
}

inline gencube::BlochOp random_ball_bloch(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0, 1);
    auto b = random_unit_bloch(rng);
    double r = std::cbrt(u(rng));
    return gencube::BlochOp::from_bloch(r * b.bloch[0], r * b.bloch[1], r * b.bloch[2]);
}

}  // namespace gencube_test

#endif
