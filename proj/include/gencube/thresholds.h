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

#ifndef _GENCUBE_THRESHOLDS_H
#define _GENCUBE_THRESHOLDS_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gencube/gates_noise.h"
#include "gencube/state_spaces.h"

namespace gencube {

enum class Criterion { CubeSeparable, QuantumSeparable, PauliPositive };
enum class InputPolicy { WorstVertex, AllVertices, SphereGrid };

struct ThresholdQuery {
    NoiseKind family = NoiseKind::JointDepol;
    StateSpaceSpec space = StateSpaceSpec::cube(1.0);
    Criterion criterion = Criterion::CubeSeparable;
    InputPolicy policy = InputPolicy::WorstVertex;
    int grid_n = 60;
    bool refine = true;
};

struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ThresholdResult {
    double lambda_star = 0;
    BlochOp arg_u;
    BlochOp arg_v;
};

/// Largest sensible noise parameter for a family: 1 for depolarizing noise, 1/2 for dephasing.
double noise_upper_bracket(NoiseKind family);

/// Smallest noise parameter at which the criterion holds for every input allowed by the policy.
ThresholdResult min_noise_detailed(const ThresholdQuery &query, double tol = 1e-7);
double min_noise(const ThresholdQuery &query, double tol = 1e-7);

/// Whether the criterion holds for the pipeline output of one input pair.
bool criterion_holds(const ThresholdQuery &query, const BlochOp &u, const BlochOp &v, double param);

struct AnalyticBound {
    std::string name;
    /// Upper bound on the coefficient scale r.
    double value;
};

struct AnalyticBounds {
    std::vector<AnalyticBound> bounds;
    size_t active = 0;
    double r_max() const {
        return bounds.at(active).value;
    }
};

/// Closed-form positivity bounds on r for rescaled cubes. Spheres have no closed form here and get an empty list.
AnalyticBounds analytic_bound(NoiseKind family, SpaceKind kind, double R);

/// Converts a coefficient scale r to the family's noise parameter.
double noise_from_scale(NoiseKind family, double r);

struct CurveIntersection {
    double R;
    double r;
};
CurveIntersection xy_xz_intersection();
CurveIntersection tdb_intersection();

enum class Method { LP, PPT, AnalyticBound };
const char *method_name(Method m);

struct CurvePoint {
    double R = 0;
    std::optional<double> lambda_star;
    Method method = Method::LP;
    std::string certificate_ref;
    std::string error;
};

/// Evaluates min_noise on `steps` evenly spaced R values. Points are computed
/// concurrently (GENCUBE_THREADS caps the worker count) and returned in R order.
/// Per-point failures are recorded as gaps with an error message.
std::vector<CurvePoint> curve(const ThresholdQuery &query, double R_min, double R_max, int steps);
void write_curve_csv(std::ostream &out, std::span<const CurvePoint> points);

struct AchievabilityBoundary {
    double R_star;
    double r_at_boundary;
};

/// Smallest R for which the state at the active analytic bound is cube separable.
AchievabilityBoundary lhv_achievability_boundary(NoiseKind family);

struct DephasingValidity {
    bool valid;
    double witness;
};

/// Checks that local dephasing at rate p leaves the rescaled CSIGN output a valid state.
/// The witness is the most negative Born probability (cubes) or eigenvalue (spheres).
DephasingValidity dephasing_impossibility(double R, double p, SpaceKind kind = SpaceKind::Cube);

/// Largest coefficient mismatch between the pipeline output for a reflected or
/// shifted pair of sphere angles and the original output conjugated by the
/// compensating local Pauli. Covers theta -> theta + pi (Y (x) Z),
/// phi -> phi + pi (Z (x) Y), theta -> pi - theta (Z (x) I) and phi -> pi - phi (I (x) Z).
double sphere_symmetry_deviation(NoiseKind family, double R, double param, int samples, uint64_t seed = 3);

/// Worker count from GENCUBE_THREADS, defaulting to the hardware concurrency.
unsigned worker_count();

}  // namespace gencube

#endif
