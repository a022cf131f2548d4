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

#include "gencube/pauli_rep.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gencube {

BlochOp BlochOp::from_bloch(double x, double y, double z) {
    return BlochOp{1.0, {x, y, z}};
}

std::string BlochOp::str() const {
    std::stringstream ss;
    ss << "(" << bloch[0] << ", " << bloch[1] << ", " << bloch[2] << ")";
    if (trace_coeff != 1.0) {
        ss << "*tr" << trace_coeff;
    }
    return ss.str();
}

PauliCoeffs2Q PauliCoeffs2Q::identity() {
    PauliCoeffs2Q r;
    r.a[0][0] = 1;
    return r;
}

PauliCoeffs2Q PauliCoeffs2Q::operator+(const PauliCoeffs2Q &other) const {
    PauliCoeffs2Q r = *this;
    r += other;
    return r;
}

PauliCoeffs2Q &PauliCoeffs2Q::operator+=(const PauliCoeffs2Q &other) {
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            a[i][j] += other.a[i][j];
        }
    }
    return *this;
}

PauliCoeffs2Q PauliCoeffs2Q::operator-(const PauliCoeffs2Q &other) const {
    return *this + other * -1.0;
}

PauliCoeffs2Q PauliCoeffs2Q::operator*(double scale) const {
    PauliCoeffs2Q r = *this;
    for (auto &row : r.a) {
        for (auto &e : row) {
            e *= scale;
        }
    }
    return r;
}

double PauliCoeffs2Q::dot(const PauliCoeffs2Q &other) const {
    double t = 0;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            t += a[i][j] * other.a[i][j];
        }
    }
    return t;
}

double PauliCoeffs2Q::max_abs_diff(const PauliCoeffs2Q &other) const {
    double m = 0;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            m = std::max(m, std::abs(a[i][j] - other.a[i][j]));
        }
    }
    return m;
}

std::string PauliCoeffs2Q::str() const {
    std::stringstream ss;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            ss << (j ? " " : "") << a[i][j];
        }
        ss << "\n";
    }
    return ss.str();
}

const DenseMatrix &pauli_matrix(int index) {
    static const std::array<DenseMatrix, 4> paulis = [] {
        Complex i{0, 1};
        return std::array<DenseMatrix, 4>{
            DenseMatrix(2, {1, 0, 0, 1}),
            DenseMatrix(2, {0, 1, 1, 0}),
            DenseMatrix(2, {0, -i, i, 0}),
            DenseMatrix(2, {1, 0, 0, -1}),
        };
    }();
    if (index < 0 || index > 3) {
        throw std::out_of_range("pauli index");
    }
    return paulis[index];
}

PauliCoeffs2Q product(const BlochOp &u, const BlochOp &v) {
    std::array<double, 4> x{u.trace_coeff, u.bloch[0], u.bloch[1], u.bloch[2]};
    std::array<double, 4> y{v.trace_coeff, v.bloch[0], v.bloch[1], v.bloch[2]};
    PauliCoeffs2Q r;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            r.a[i][j] = x[i] * y[j];
        }
    }
    return r;
}

DenseMatrix to_dense(const BlochOp &op) {
    DenseMatrix r = pauli_matrix(0) * op.trace_coeff;
    for (int k = 0; k < 3; k++) {
        r += pauli_matrix(k + 1) * op.bloch[k];
    }
    return r * 0.5;
}

DenseMatrix to_dense(const PauliCoeffs2Q &coeffs) {
    DenseMatrix r(4);
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            if (coeffs.a[i][j] != 0) {
                r += kron(pauli_matrix(i), pauli_matrix(j)) * (0.25 * coeffs.a[i][j]);
            }
        }
    }
    return r;
}

BlochOp bloch_from_dense(const DenseMatrix &m) {
    if (m.dim() != 2) {
        throw std::invalid_argument("bloch_from_dense requires a 2x2 matrix");
    }
    BlochOp r;
    r.trace_coeff = (m * pauli_matrix(0)).trace().real();
    for (int k = 0; k < 3; k++) {
        r.bloch[k] = (m * pauli_matrix(k + 1)).trace().real();
    }
    return r;
}

PauliCoeffs2Q from_dense(const DenseMatrix &m) {
    if (m.dim() != 4) {
        throw std::invalid_argument("from_dense requires a 4x4 matrix");
    }
    PauliCoeffs2Q r;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            r.a[i][j] = (m * kron(pauli_matrix(i), pauli_matrix(j))).trace().real();
        }
    }
    return r;
}

static void check_sign(int s) {
    if (s != 1 && s != -1) {
        throw std::invalid_argument("measurement outcome must be +1 or -1");
    }
}

double born_probability(const PauliCoeffs2Q &c, PauliAxis p, int s, PauliAxis q, int t) {
    check_sign(s);
    check_sign(t);
    int i = static_cast<int>(p);
    int j = static_cast<int>(q);
    return 0.25 * (c.a[0][0] + s * c.a[i][0] + t * c.a[0][j] + s * t * c.a[i][j]);
}

double born_probability(const BlochOp &op, PauliAxis p, int s) {
    check_sign(s);
    return 0.5 * (op.trace_coeff + s * op.component(p));
}

PauliCoeffs2Q partial_transpose(const PauliCoeffs2Q &coeffs) {
    PauliCoeffs2Q r = coeffs;
    for (int i = 0; i < 4; i++) {
        r.a[i][2] = -r.a[i][2];
    }
    return r;
}

}  // namespace gencube
