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

#ifndef _GENCUBE_PAULI_REP_H
#define _GENCUBE_PAULI_REP_H

#include <array>
#include <string>

#include "gencube/dense_matrix.h"

namespace gencube {

enum class PauliAxis : int { X = 1, Y = 2, Z = 3 };

/// Single-qubit operator a*I/2 + (b X + c Y + d Z)/2 written as (a, b, c, d).
struct BlochOp {
    double trace_coeff = 1.0;
    std::array<double, 3> bloch{};

    static BlochOp from_bloch(double x, double y, double z);
    double component(PauliAxis axis) const {
        return bloch[static_cast<int>(axis) - 1];
    }
    bool operator==(const BlochOp &other) const = default;
    std::string str() const;
};

/// Two-qubit operator (1/4) sum_ij a[i][j] sigma_i (x) sigma_j with indices (I,X,Y,Z).
struct PauliCoeffs2Q {
    std::array<std::array<double, 4>, 4> a{};

    static PauliCoeffs2Q identity();
    double &operator()(int i, int j) {
        return a[i][j];
    }
    double operator()(int i, int j) const {
        return a[i][j];
    }
    PauliCoeffs2Q operator+(const PauliCoeffs2Q &other) const;
    PauliCoeffs2Q operator-(const PauliCoeffs2Q &other) const;
    PauliCoeffs2Q operator*(double scale) const;
    PauliCoeffs2Q &operator+=(const PauliCoeffs2Q &other);
    double dot(const PauliCoeffs2Q &other) const;
    double max_abs_diff(const PauliCoeffs2Q &other) const;
    std::string str() const;
};

/// Pauli matrix by index 0..3 = I, X, Y, Z.
const DenseMatrix &pauli_matrix(int index);

PauliCoeffs2Q product(const BlochOp &u, const BlochOp &v);

DenseMatrix to_dense(const BlochOp &op);
DenseMatrix to_dense(const PauliCoeffs2Q &coeffs);
BlochOp bloch_from_dense(const DenseMatrix &m);
PauliCoeffs2Q from_dense(const DenseMatrix &m);

/// Probability of outcomes (s, t) in {+1,-1} when measuring axis p on the first
/// qubit and axis q on the second.
double born_probability(const PauliCoeffs2Q &coeffs, PauliAxis p, int s, PauliAxis q, int t);
double born_probability(const BlochOp &op, PauliAxis p, int s);

/// Transposes the second qubit, which flips the sign of every Y coefficient on it.
PauliCoeffs2Q partial_transpose(const PauliCoeffs2Q &coeffs);

}  // namespace gencube

#endif
