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

#ifndef _GENCUBE_CONSTRUCTIONS_H
#define _GENCUBE_CONSTRUCTIONS_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gencube/gates_noise.h"
#include "gencube/separability.h"

namespace gencube {

/// The magic-state pair along +-(1,1,1)/sqrt(3).
struct MagicBasis {
    std::array<Complex, 2> t_ket;
    std::array<Complex, 2> t_bar_ket;
    DenseMatrix t;
    DenseMatrix t_bar;
    /// (sqrt(3) + 1) / 2
    double w;

    static const MagicBasis &get();
};

struct CjParams {
    double alpha;
    double beta;
    double gamma;
    double delta;
    double epsilon;
};

/// Choi state of a two-qubit channel on qubits ordered (A1, A2, B1, B2), where
/// (A1, B1) are the input slots and (A2, B2) the outputs.
struct CjState {
    DenseMatrix rho;
    CjParams params;
};

/// Mixes alpha|TTT> + beta|T'T'T'> and gamma|T'TT'> + delta|TT'T> on (A1, A2, B2),
/// each with a maximally mixed B1, at weights 1/2 + epsilon and 1/2 - epsilon.
/// delta is chosen so that the input marginal is maximally mixed.
CjState build_cj(double alpha, double epsilon);

/// Same mixture with an explicit delta. Throws if the input marginal is not I/4.
CjState build_cj(double alpha, double delta, double epsilon);

/// Choi state of the identity channel.
CjState identity_cj();

/// Reduced state on the input slots (A1, B1).
DenseMatrix cj_input_marginal(const CjState &cj);

/// Output (A2, B2) coefficients of the channel applied to an (A1, B1) input.
PauliCoeffs2Q cj_apply(const CjState &cj, const PauliCoeffs2Q &input);

struct Lemma8Report {
    double alpha;
    double epsilon;
    int feasible_outputs;
    /// Largest over sampled B-side states of the least partial-transpose eigenvalue of the output.
    double non_ppt_witness;
    /// Largest distance of an output's A2 Bloch vector from the T direction.
    double a2_distance_to_t;
    double cj_min_pt_io_split;
    double cj_min_pt_ab_split;
    double marginal_deviation;

    bool all_feasible() const {
        return feasible_outputs == 64;
    }
    bool passes() const;
};

Lemma8Report lemma8_report(double alpha, double epsilon);
void write_report(std::ostream &out, const Lemma8Report &report);

struct Lemma8Search {
    bool found;
    Lemma8Report best;
    std::vector<Lemma8Report> tried;
};

/// Scans a grid of (alpha, epsilon) for parameters passing every Lemma8Report check.
Lemma8Search lemma8_search();

/// (1 - lambda) C(rho) + lambda Z1 C(rho) Z1 for the noiseless CSIGN C.
PauliCoeffs2Q error_per_gate_output(const PauliCoeffs2Q &input, const NoiseModel &noise);

struct ErrorPerGateBounds {
    double lower;
    double upper;
    double magic_identity_residual;
    double w_identity_residual;
    int upper_feasible_outputs;
    std::array<LhvCertificate, 64> upper_certificates;
};

ErrorPerGateBounds error_per_gate_bounds();

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };
PauliCoeffs2Q bell_coefficients(BellState state);

/// Uniform weight on the eight vertex pairs with x1=x2, y1=-y2, z1=z2, adjusted by
/// the one-sided Pauli relating the requested Bell state to |00>+|11>.
LhvCertificate bell_cube_certificate(BellState state = BellState::PhiPlus);

struct Appendix2Report {
    double stated_probability;
    int outside_samples;
    int outside_witnessed;
    int inside_samples;
    int inside_violations;
    double worst_inside_value;
};

/// Negative Pauli probability for the stated vertex inputs and the Bloch-sphere
/// boundary argument checked on random directions.
Appendix2Report appendix2_checks(uint64_t seed = 7, int samples = 1000);

/// Pauli-pair probability P(X=+1, X=-1) after a noiseless CSIGN on inputs u and v.
double appendix2_probability(const BlochOp &u, const BlochOp &v);

/// Largest t in [0, t_max] with center + t * direction cube separable, to within tol.
double separable_extent(const PauliCoeffs2Q &center, const PauliCoeffs2Q &direction, double t_max, double tol = 1e-4);

/// Minimum extent over random unit traceless directions around product(u, v).
/// Throws std::domain_error if either state lies on a cube face.
double separable_ball_radius(const BlochOp &u, const BlochOp &v, int directions, uint64_t seed = 11);

/// Vertices visited by applying X, Y, X, S, X, Y, X to (1,1,1), starting vertex included.
std::vector<BlochOp> clifford_vertex_cycle();

}  // namespace gencube

#endif
