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

#include "gencube/thresholds.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <thread>

#include "gencube/separability.h"

namespace gencube {

namespace {

struct InputPair {
    BlochOp u;
    BlochOp v;
};

BlochOp xz_state(double angle) {
    return BlochOp::from_bloch(std::cos(angle), 0, std::sin(angle));
}

void check_family(NoiseKind family) {
    if (family == NoiseKind::ErrorPerGate) {
        throw std::invalid_argument("threshold sweeps need a coefficient-scaling noise family");
    }
}

/// Returns the smallest parameter in [lo, hi] where pred holds, assuming pred(hi) is true.
template <typename Pred>
double bisect(double lo, double hi, double tol, Pred pred) {
    for (int iter = 0; iter < 60 && hi - lo > tol; iter++) {
        double mid = 0.5 * (lo + hi);
        if (pred(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

/// Max over inputs of each input's threshold, skipping inputs already satisfied at the running max.
ThresholdResult max_threshold(const ThresholdQuery &q, const std::vector<InputPair> &inputs, double lo, double hi,
                              double tol, ThresholdResult best) {
    for (const auto &in : inputs) {
        if (criterion_holds(q, in.u, in.v, best.lambda_star)) {
            continue;
        }
        best.lambda_star = bisect(std::max(lo, best.lambda_star), hi, tol, [&](double x) {
            return criterion_holds(q, in.u, in.v, x);
        });
        best.arg_u = in.u;
        best.arg_v = in.v;
    }
    return best;
}

std::vector<InputPair> sphere_grid(double t0, double t1, double p0, double p1, int n_t, int n_p) {
    std::vector<InputPair> r;
    for (int i = 0; i < n_t; i++) {
        double t = n_t == 1 ? t0 : t0 + (t1 - t0) * i / (n_t - 1);
        for (int j = 0; j < n_p; j++) {
            double p = n_p == 1 ? p0 : p0 + (p1 - p0) * j / (n_p - 1);
            r.push_back({xz_state(t), xz_state(p)});
        }
    }
    return r;
}

double angle_of(const BlochOp &op) {
    return std::atan2(op.bloch[2], op.bloch[0]);
}

}  // namespace

double noise_upper_bracket(NoiseKind family) {
    check_family(family);
    return family == NoiseKind::LocalDephase ? 0.5 : 1.0;
}

bool criterion_holds(const ThresholdQuery &q, const BlochOp &u, const BlochOp &v, double param) {
    NoiseModel noise(q.family, param);
    PauliCoeffs2Q out = pipeline(u, v, q.space.R(), noise);
    switch (q.criterion) {
        case Criterion::CubeSeparable:
            return cube_separable(out, 1.0).feasible();
        case Criterion::QuantumSeparable:
            return quantum_separable_2q(out);
        case Criterion::PauliPositive:
            return positive_for_pauli(out, 1.0);
    }
    return false;
}

ThresholdResult min_noise_detailed(const ThresholdQuery &q, double tol) {
    check_family(q.family);
    bool sphere = q.space.kind() == SpaceKind::Sphere;
    if ((q.policy == InputPolicy::SphereGrid) != sphere) {
        throw std::invalid_argument("sphere spaces use the sphere grid policy and cubes use vertex policies");
    }
    double hi = noise_upper_bracket(q.family);

    std::vector<InputPair> inputs;
    if (q.policy == InputPolicy::WorstVertex) {
        inputs.push_back({cube_vertex(0), cube_vertex(0)});
    } else if (q.policy == InputPolicy::AllVertices) {
        for (int u = 0; u < 8; u++) {
            for (int v = 0; v < 8; v++) {
                inputs.push_back({cube_vertex(u), cube_vertex(v)});
            }
        }
    } else {
        if (q.grid_n < 2) {
            throw std::invalid_argument("sphere grid needs at least 2 points per axis");
        }
        inputs = sphere_grid(0, std::numbers::pi / 2, 0, std::numbers::pi / 2, q.grid_n, q.grid_n);
    }

    bool any_fails_at_zero = false;
    for (const auto &in : inputs) {
        if (!criterion_holds(q, in.u, in.v, hi)) {
            throw BracketError("criterion fails even at maximal noise");
        }
        any_fails_at_zero |= !criterion_holds(q, in.u, in.v, 0);
    }
    if (!any_fails_at_zero) {
        throw BracketError("criterion already holds at zero noise");
    }

    ThresholdResult best{0, inputs.front().u, inputs.front().v};
    best = max_threshold(q, inputs, 0, hi, tol, best);

    if (q.policy == InputPolicy::SphereGrid && q.refine) {
        double h = (std::numbers::pi / 2) / (q.grid_n - 1);
        double ta = angle_of(best.arg_u);
        double pa = angle_of(best.arg_v);
        double t0 = std::max(0.0, ta - h), t1 = std::min(std::numbers::pi / 2, ta + h);
        double p0 = std::max(0.0, pa - h), p1 = std::min(std::numbers::pi / 2, pa + h);
        int nt = static_cast<int>(std::lround((t1 - t0) / (h / 10))) + 1;
        int np = static_cast<int>(std::lround((p1 - p0) / (h / 10))) + 1;
        best = max_threshold(q, sphere_grid(t0, t1, p0, p1, nt, np), 0, hi, tol, best);
    }
    return best;
}

double min_noise(const ThresholdQuery &q, double tol) {
    return min_noise_detailed(q, tol).lambda_star;
}

AnalyticBounds analytic_bound(NoiseKind family, SpaceKind kind, double R) {
    if (!(R > 0)) {
        throw std::invalid_argument("R must be positive");
    }
    AnalyticBounds out;
    if (kind == SpaceKind::Sphere) {
        return out;
    }
    double inf = std::numeric_limits<double>::infinity();
    switch (family) {
        case NoiseKind::LocalDepol:
            out.bounds.push_back({"xy", std::sqrt(1 + R * R) - R});
            out.bounds.push_back({"xz", (R - 1 + std::sqrt((R - 1) * (R - 1) + 4 / R)) / (2 / R)});
            break;
        case NoiseKind::JointDepol: {
            out.bounds.push_back({"tdb1", 1 / (2 * R + 1)});
            double d = 1 + 1 / R - R;
            out.bounds.push_back({"tdb2", d > 0 ? 1 / d : inf});
            break;
        }
        case NoiseKind::LocalDephase:
            out.bounds.push_back({"zx-probs", std::abs(R - 1) < 1e-12 ? std::sqrt(2.0) - 1 : 0.0});
            break;
        case NoiseKind::ErrorPerGate:
            return out;
    }
    for (size_t k = 1; k < out.bounds.size(); k++) {
        if (out.bounds[k].value < out.bounds[out.active].value) {
            out.active = k;
        }
    }
    return out;
}

double noise_from_scale(NoiseKind family, double r) {
    check_family(family);
    return family == NoiseKind::LocalDephase ? (1 - r) / 2 : 1 - r;
}

static CurveIntersection intersect(NoiseKind family, double lo, double hi) {
    auto diff = [&](double R) {
        auto b = analytic_bound(family, SpaceKind::Cube, R);
        return b.bounds[0].value - b.bounds[1].value;
    };
    double flo = diff(lo);
    for (int iter = 0; iter < 200 && hi - lo > 1e-15; iter++) {
        double mid = 0.5 * (lo + hi);
        double fm = diff(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double R = 0.5 * (lo + hi);
    return {R, analytic_bound(family, SpaceKind::Cube, R).bounds[0].value};
}

CurveIntersection xy_xz_intersection() {
    return intersect(NoiseKind::LocalDepol, 0.3, 1.0);
}

CurveIntersection tdb_intersection() {
    return intersect(NoiseKind::JointDepol, 0.3, 1.0);
}

const char *method_name(Method m) {
    switch (m) {
        case Method::LP:
            return "LP";
        case Method::PPT:
            return "PPT";
        case Method::AnalyticBound:
            return "AnalyticBound";
    }
    return "?";
}

unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("GENCUBE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) {
            n = static_cast<unsigned>(v);
        }
    }
    return n;
}

std::vector<CurvePoint> curve(const ThresholdQuery &query, double R_min, double R_max, int steps) {
    if (!(R_min > 0) || !(R_max >= R_min) || steps < 1) {
        throw std::invalid_argument("curve needs 0 < R_min <= R_max and steps >= 1");
    }
    Method method = query.criterion == Criterion::CubeSeparable    ? Method::LP
                    : query.criterion == Criterion::QuantumSeparable ? Method::PPT
                                                                     : Method::AnalyticBound;
    std::vector<CurvePoint> points(steps);
    for (int k = 0; k < steps; k++) {
        points[k].R = steps == 1 ? R_min : R_min + (R_max - R_min) * k / (steps - 1);
        points[k].method = method;
    }
    std::atomic<int> next{0};
    auto work = [&]() {
        int k;
        while ((k = next++) < steps) {
            ThresholdQuery q = query;
            try {
                q.space = StateSpaceSpec(query.space.kind(), points[k].R);
                auto r = min_noise_detailed(q);
                points[k].lambda_star = r.lambda_star;
                points[k].certificate_ref = "u=" + r.arg_u.str() + " v=" + r.arg_v.str();
            } catch (const std::exception &e) {
                points[k].error = e.what();
            }
        }
    };
    unsigned n = std::min<unsigned>(worker_count(), steps);
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < n; t++) {
        threads.emplace_back(work);
    }
    work();
    for (auto &t : threads) {
        t.join();
    }
    return points;
}

void write_curve_csv(std::ostream &out, std::span<const CurvePoint> points) {
    out << "R,lambda_star,method\n";
    char buf[64];
    for (const auto &p : points) {
        std::snprintf(buf, sizeof(buf), "%.9g", p.R);
        out << buf << ",";
        if (p.lambda_star) {
            std::snprintf(buf, sizeof(buf), "%.9g", *p.lambda_star);
            out << buf;
        }
        out << "," << method_name(p.method) << "\n";
    }
}

AchievabilityBoundary lhv_achievability_boundary(NoiseKind family) {
    double lo;
    if (family == NoiseKind::LocalDepol) {
        lo = xy_xz_intersection().R;
    } else if (family == NoiseKind::JointDepol) {
        lo = 1 / std::sqrt(3.0);
    } else {
        throw std::invalid_argument("achievability boundary is defined for the depolarizing families");
    }
    auto r_at = [&](double R) {
        return std::min(1.0, analytic_bound(family, SpaceKind::Cube, R).r_max());
    };
    auto feasible = [&](double R) {
        NoiseModel noise(family, noise_from_scale(family, r_at(R)));
        return cube_separable(pipeline(cube_vertex(0), cube_vertex(0), R, noise), 1.0).feasible();
    };
    double R = bisect(lo, 1.0, 1e-7, feasible);
    return {R, r_at(R)};
}

static PauliCoeffs2Q conjugate_local_paulis(const PauliCoeffs2Q &A, int first, int second) {
    PauliCoeffs2Q r = A;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            bool flip_i = first && i && i != first;
            bool flip_j = second && j && j != second;
            if (flip_i != flip_j) {
                r.a[i][j] = -r.a[i][j];
            }
        }
    }
    return r;
}

double sphere_symmetry_deviation(NoiseKind family, double R, double param, int samples, uint64_t seed) {
    NoiseModel noise(family, param);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    double worst = 0;
    const double pi = std::numbers::pi;
    for (int k = 0; k < samples; k++) {
        double t = angle(rng), p = angle(rng);
        PauliCoeffs2Q base = pipeline(xz_state(t), xz_state(p), R, noise);
        struct Move {
            double t, p;
            int first, second;
        };
        for (const auto &m : {Move{t + pi, p, 2, 3}, Move{t, p + pi, 3, 2}, Move{pi - t, p, 3, 0}, Move{t, pi - p, 0, 3}}) {
            PauliCoeffs2Q moved = pipeline(xz_state(m.t), xz_state(m.p), R, noise);
            worst = std::max(worst, moved.max_abs_diff(conjugate_local_paulis(base, m.first, m.second)));
        }
    }
    return worst;
}

DephasingValidity dephasing_impossibility(double R, double p, SpaceKind kind) {
    if (!(R > 0) || !(p >= 0 && p <= 0.5)) {
        throw std::invalid_argument("dephasing check needs R > 0 and p in [0, 1/2]");
    }
    PauliCoeffs2Q out = pipeline(BlochOp::from_bloch(1, 0, 0), BlochOp::from_bloch(0, 0, 1), R,
                                 NoiseModel(NoiseKind::LocalDephase, p));
    double witness;
    if (kind == SpaceKind::Cube) {
        witness = std::numeric_limits<double>::infinity();
        for (auto a : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
            for (auto b : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
                for (int s : {1, -1}) {
                    for (int t : {1, -1}) {
                        witness = std::min(witness, born_probability(out, a, s, b, t));
                    }
                }
            }
        }
    } else {
        witness = std::min(min_eigenvalue(to_dense(out)), min_eigenvalue(to_dense(partial_transpose(out))));
    }
    bool valid = std::abs(R - 1) <= 1e-12 || std::abs(p - 0.5) <= 1e-12;
    return {valid, witness};
}

}  // namespace gencube
