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

#include "gencube/gates_noise.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gencube/state_spaces.h"

namespace gencube {

namespace {

struct SignedSource {
    int i;
    int j;
    int sign;
};

// Output coefficient (i, j) is sign * input coefficient (src.i, src.j).
constexpr SignedSource CSIGN_TABLE[4][4] = {
    {{0, 0, 1}, {3, 1, 1}, {3, 2, 1}, {0, 3, 1}},
    {{1, 3, 1}, {2, 2, 1}, {2, 1, -1}, {1, 0, 1}},
    {{2, 3, 1}, {1, 2, -1}, {1, 1, 1}, {2, 0, 1}},
    {{3, 0, 1}, {0, 1, 1}, {0, 2, 1}, {3, 3, 1}},
};

constexpr bool csign_table_is_involution() {
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            auto a = CSIGN_TABLE[i][j];
            auto b = CSIGN_TABLE[a.i][a.j];
            if (b.i != i || b.j != j || a.sign * b.sign != 1) {
                return false;
            }
        }
    }
    return true;
}
static_assert(csign_table_is_involution());

}  // namespace

NoiseModel::NoiseModel(NoiseKind kind, double param, AdversarialMap adversary)
    : kind(kind), param(param), adversary(adversary) {
    if (!(param >= 0 && param <= 1)) {
        throw std::invalid_argument("noise parameter must be in [0, 1]");
    }
}

std::string NoiseModel::str() const {
    std::stringstream ss;
    ss << noise_kind_name(kind) << "(" << param << ")";
    return ss.str();
}

std::string noise_kind_name(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::JointDepol:
            return "joint-depol";
        case NoiseKind::LocalDepol:
            return "local-depol";
        case NoiseKind::LocalDephase:
            return "local-dephase";
        case NoiseKind::ErrorPerGate:
            return "epg-dephase";
    }
    throw std::invalid_argument("unknown noise kind");
}

NoiseKind parse_noise_kind(const std::string &name) {
    for (auto k : {NoiseKind::JointDepol, NoiseKind::LocalDepol, NoiseKind::LocalDephase, NoiseKind::ErrorPerGate}) {
        if (noise_kind_name(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown noise model '" + name + "'");
}

Clifford1Q parse_clifford(const std::string &name) {
    for (auto g : {Clifford1Q::X, Clifford1Q::Y, Clifford1Q::Z, Clifford1Q::S, Clifford1Q::H}) {
        if (name == clifford_name(g)) {
            return g;
        }
    }
    throw std::invalid_argument("unknown single-qubit Clifford '" + name + "'");
}

const char *clifford_name(Clifford1Q g) {
    switch (g) {
        case Clifford1Q::X:
            return "X";
        case Clifford1Q::Y:
            return "Y";
        case Clifford1Q::Z:
            return "Z";
        case Clifford1Q::S:
            return "S";
        case Clifford1Q::H:
            return "H";
    }
    return "?";
}

PauliCoeffs2Q csign(const PauliCoeffs2Q &coeffs) {
    PauliCoeffs2Q r;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            const auto &s = CSIGN_TABLE[i][j];
            r.a[i][j] = s.sign * coeffs.a[s.i][s.j];
        }
    }
    return r;
}

DenseMatrix csign_unitary() {
    return DenseMatrix(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
}

PauliCoeffs2Q apply_noise(const PauliCoeffs2Q &coeffs, const NoiseModel &noise) {
    std::array<double, 4> f{1, 1, 1, 1};
    PauliCoeffs2Q r = coeffs;
    switch (noise.kind) {
        case NoiseKind::JointDepol:
            for (int i = 0; i < 4; i++) {
                for (int j = 0; j < 4; j++) {
                    if (i || j) {
                        r.a[i][j] *= 1 - noise.param;
                    }
                }
            }
            return r;
        case NoiseKind::LocalDepol:
            f = {1, 1 - noise.param, 1 - noise.param, 1 - noise.param};
            break;
        case NoiseKind::LocalDephase:
            f = {1, 1 - 2 * noise.param, 1 - 2 * noise.param, 1};
            break;
        case NoiseKind::ErrorPerGate:
            throw std::invalid_argument("error-per-gate noise is not a coefficient scaling");
    }
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            r.a[i][j] *= f[i] * f[j];
        }
    }
    return r;
}

BlochOp clifford1(const BlochOp &op, Clifford1Q gate) {
    auto [b, c, d] = op.bloch;
    BlochOp r = op;
    switch (gate) {
        case Clifford1Q::X:
            r.bloch = {b, -c, -d};
            break;
        case Clifford1Q::Y:
            r.bloch = {-b, c, -d};
            break;
        case Clifford1Q::Z:
            r.bloch = {-b, -c, d};
            break;
        case Clifford1Q::S:
            r.bloch = {-c, b, d};
            break;
        case Clifford1Q::H:
            r.bloch = {d, -c, b};
            break;
    }
    return r;
}

DenseMatrix clifford_unitary(Clifford1Q gate) {
    Complex i{0, 1};
    double h = 1 / std::sqrt(2.0);
    switch (gate) {
        case Clifford1Q::X:
            return pauli_matrix(1);
        case Clifford1Q::Y:
            return pauli_matrix(2);
        case Clifford1Q::Z:
            return pauli_matrix(3);
        case Clifford1Q::S:
            return DenseMatrix(2, {1, 0, 0, i});
        case Clifford1Q::H:
            return DenseMatrix(2, {h, h, h, -h});
    }
    throw std::invalid_argument("unknown gate");
}

PauliCoeffs2Q pipeline(const BlochOp &u, const BlochOp &v, double R, const NoiseModel &noise) {
    return rescale2(apply_noise(csign(rescale2(product(u, v), R)), noise), 1 / R);
}

}  // namespace gencube
