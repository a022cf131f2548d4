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

#ifndef _GENCUBE_GATES_NOISE_H
#define _GENCUBE_GATES_NOISE_H

#include <string>

#include "gencube/pauli_rep.h"

namespace gencube {

enum class NoiseKind { JointDepol, LocalDepol, LocalDephase, ErrorPerGate };

/// Adversarial CP maps available to the error-per-gate model.
enum class AdversarialMap { ZOnFirst };

struct NoiseModel {
    NoiseKind kind = NoiseKind::JointDepol;
    double param = 0;
    AdversarialMap adversary = AdversarialMap::ZOnFirst;

    NoiseModel() = default;
    NoiseModel(NoiseKind kind, double param, AdversarialMap adversary = AdversarialMap::ZOnFirst);
    static NoiseModel none() {
        return {NoiseKind::JointDepol, 0};
    }
    bool operator==(const NoiseModel &other) const = default;
    std::string str() const;
};

/// Name used by the CLI and circuit files, e.g. "joint-depol".
std::string noise_kind_name(NoiseKind kind);
NoiseKind parse_noise_kind(const std::string &name);

enum class Clifford1Q { X, Y, Z, S, H };
Clifford1Q parse_clifford(const std::string &name);
const char *clifford_name(Clifford1Q g);

PauliCoeffs2Q csign(const PauliCoeffs2Q &coeffs);
DenseMatrix csign_unitary();

/// Coefficient scaling for the three non-adversarial noise models.
/// Throws std::invalid_argument for ErrorPerGate.
PauliCoeffs2Q apply_noise(const PauliCoeffs2Q &coeffs, const NoiseModel &noise);

BlochOp clifford1(const BlochOp &op, Clifford1Q gate);
DenseMatrix clifford_unitary(Clifford1Q gate);

/// Un-rescaled output of the noisy CSIGN applied to R-rescaled product inputs.
PauliCoeffs2Q pipeline(const BlochOp &u, const BlochOp &v, double R, const NoiseModel &noise);

}  // namespace gencube

#endif
