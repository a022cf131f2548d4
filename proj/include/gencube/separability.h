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

#ifndef _GENCUBE_SEPARABILITY_H
#define _GENCUBE_SEPARABILITY_H

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gencube/pauli_rep.h"

namespace gencube {

inline constexpr double FEASIBILITY_TOL = 1e-9;
inline constexpr double PSD_TOL = 1e-9;

/// Weights on the 64 products of cube vertices. Pair index is 8 * u + v where
/// u, v are cube_vertex indices.
struct LhvCertificate {
    std::array<double, 64> weights{};
    double tolerance_used = FEASIBILITY_TOL;

    static size_t pair_index(int u, int v) {
        return 8 * u + v;
    }
};

struct BellFunctional {
    PauliCoeffs2Q dual;
    double violation = 0;
};

struct CubeSeparability {
    std::variant<LhvCertificate, BellFunctional> result;
    bool used_exact = false;
    double infeasibility = 0;

    bool feasible() const {
        return std::holds_alternative<LhvCertificate>(result);
    }
    const LhvCertificate &certificate() const {
        return std::get<LhvCertificate>(result);
    }
    const BellFunctional &functional() const {
        return std::get<BellFunctional>(result);
    }
};

struct LpFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decides membership in the convex hull of products of R-scaled cube vertices.
///
/// The float simplex result is accepted only when its certificate verifies and
/// it is not near degeneracy. Otherwise the problem is re-solved in exact
/// rational arithmetic on inputs rationalized with denominators <= 10^6.
CubeSeparability cube_separable(const PauliCoeffs2Q &A, double R = 1.0);

/// Same decision using only the exact rational solver.
CubeSeparability cube_separable_exact(const PauliCoeffs2Q &A, double R = 1.0);

/// All 36 Pauli-pair Born probabilities of rescale2(A, 1/R) are >= -1e-9.
bool positive_for_pauli(const PauliCoeffs2Q &A, double R = 1.0);

/// Positive and positive under partial transpose, both to -1e-9.
bool quantum_separable_2q(const PauliCoeffs2Q &A);

PauliCoeffs2Q certificate_mixture(const LhvCertificate &cert, double R = 1.0);
double certificate_residual(const LhvCertificate &cert, const PauliCoeffs2Q &A, double R = 1.0);
bool verify_certificate(const LhvCertificate &cert, const PauliCoeffs2Q &A, double R, double tol);
bool verify_functional(const BellFunctional &functional, const PauliCoeffs2Q &A, double R, double tol);

struct Appendix1Entry {
    int item;
    std::string title;
    PauliCoeffs2Q target;
    LhvCertificate certificate;
    bool valid;
    std::string reason;
};

/// The seven explicit vertex-mixture decompositions, fully expanded to
/// 64-pair weights. Items 6 and 7 are parameterized by the dephasing and
/// depolarizing rates; outside their validity region they carry negative
/// weights and are flagged invalid.
std::vector<Appendix1Entry> appendix1_certificates(double dephase_p, double depol_p);
std::vector<Appendix1Entry> appendix1_certificates();

/// Text format: a header, "tolerance <t>", then 64 lines "u_bits v_bits weight".
/// Bits are the (x,y,z) signs of each vertex with 1 meaning -1.
void write_certificate(std::ostream &out, const LhvCertificate &cert);
LhvCertificate read_certificate(std::istream &in);

}  // namespace gencube

#endif
