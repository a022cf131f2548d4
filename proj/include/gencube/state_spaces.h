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

#ifndef _GENCUBE_STATE_SPACES_H
#define _GENCUBE_STATE_SPACES_H

#include <array>
#include <iosfwd>
#include <vector>

#include "gencube/pauli_rep.h"

namespace gencube {

enum class SpaceKind { Cube, Sphere };

class StateSpaceSpec {
   public:
    StateSpaceSpec(SpaceKind kind, double R);
    static StateSpaceSpec cube(double R = 1.0) {
        return {SpaceKind::Cube, R};
    }
    static StateSpaceSpec sphere(double R = 1.0) {
        return {SpaceKind::Sphere, R};
    }
    SpaceKind kind() const {
        return kind_;
    }
    double R() const {
        return R_;
    }

   private:
    SpaceKind kind_;
    double R_;
};

/// Vertex index bits: x negative = 4, y negative = 2, z negative = 1.
BlochOp cube_vertex(int index, double R = 1.0);
std::array<BlochOp, 8> cube_vertices(double R = 1.0);
/// Index of the vertex whose signs match the Bloch vector. Zero components count as +.
int vertex_index(const BlochOp &op);

bool contains(const StateSpaceSpec &space, const BlochOp &op);

BlochOp rescale(const BlochOp &op, double R);
PauliCoeffs2Q rescale2(const PauliCoeffs2Q &coeffs, double R);

enum class NoiseSite { Measurement, Preparation };
double noise_to_R(NoiseSite site, double p);

struct Povm {
    std::vector<DenseMatrix> elements;
};

class PovmSet {
   public:
    PovmSet(size_t dim, std::vector<Povm> povms);
    size_t dim() const {
        return dim_;
    }
    const std::vector<Povm> &povms() const {
        return povms_;
    }
    size_t total_outcomes() const;

   private:
    size_t dim_;
    std::vector<Povm> povms_;
};

/// Two-outcome qubit measurement along a Bloch axis, ordered (+1, -1).
Povm qubit_projective(std::array<double, 3> axis);

/// Outcome counting condition: sum of outcome counts <= d^2 + N - 1.
bool passes_counting_bound(const PovmSet &povms);

struct CompatibilityResult {
    bool compatible = false;
    bool counting_bound_ok = false;
    /// One operator per outcome combination, first POVM varying slowest.
    std::vector<DenseMatrix> corners;
    double worst_residual = 0;
};

CompatibilityResult operator_compatible(const PovmSet &povms);

/// Reads the text POVM format:
///   dim <d>
///   povm
///   elem <d*d pairs of "re im" in row-major order>
///   projective <nx> <ny> <nz>
/// `projective` is a qubit shortcut adding a whole two-outcome POVM.
PovmSet parse_povm_set(std::istream &in);

}  // namespace gencube

#endif
