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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gencube/constructions.h"
#include "gencube/gates_noise.h"
#include "gencube/hn_sim.h"
#include "gencube/separability.h"
#include "gencube/state_spaces.h"
#include "gencube/thresholds.h"

using namespace gencube;

namespace {

struct AcceptanceItem {
    int number;
    std::string title;
    std::function<bool(std::string &)> check;
};

ThresholdQuery cube_query(NoiseKind family, double R = 1, InputPolicy policy = InputPolicy::WorstVertex) {
    ThresholdQuery q;
    q.family = family;
    q.space = StateSpaceSpec::cube(R);
    q.policy = policy;
    return q;
}

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

bool cube_thresholds(std::string &detail) {
    double jd = min_noise(cube_query(NoiseKind::JointDepol));
    double ld = min_noise(cube_query(NoiseKind::LocalDepol));
    double dp = min_noise(cube_query(NoiseKind::LocalDephase));
    detail = "joint " + num(jd) + ", local depol " + num(ld) + ", dephase " + num(dp);
    return std::abs(jd - 2.0 / 3) < 1e-6 && std::abs(ld - (2 - std::sqrt(2.0))) < 1e-6 &&
           std::abs(dp - (1 - 1 / std::sqrt(2.0))) < 1e-6;
}

bool appendix1(std::string &detail) {
    bool ok = true;
    double worst = 0;
    std::set<int> items;
    for (const auto &e : appendix1_certificates()) {
        double res = certificate_residual(e.certificate, e.target);
        worst = std::max(worst, res);
        ok &= e.valid && res < 1e-12 && verify_certificate(e.certificate, e.target, 1, 1e-12);
        items.insert(e.item);
    }
    ok &= items.size() == 7;
    double p6 = 1 - 1 / std::sqrt(2.0), p7 = 2 - std::sqrt(2.0);
    for (double shift : {-1e-3, 1e-3}) {
        auto e = appendix1_certificates(p6 + shift, p7 + shift);
        bool inside = shift > 0;
        for (int k : {6, 7}) {
            bool verifies = verify_certificate(e[k].certificate, e[k].target, 1, 1e-12);
            ok &= e[k].valid == inside && verifies == inside;
        }
    }
    for (int i = 0; i <= 50; i++) {
        double p = 0.5 * i / 50;
        double q6 = 1 - 2 * p, q7 = 1 - p;
        auto e = appendix1_certificates(p, p);
        ok &= e[6].valid == (1 - 2 * q6 - q6 * q6 >= -1e-12);
        ok &= e[7].valid == (1 - 2 * q7 - q7 * q7 >= -1e-12);
    }
    detail = std::to_string(items.size()) + " items, worst residual " + num(worst);
    return ok;
}

bool appendix2(std::string &detail) {
    auto r = appendix2_checks();
    detail = "probability " + num(r.stated_probability) + ", outside " + std::to_string(r.outside_witnessed) + "/" +
             std::to_string(r.outside_samples) + ", inside violations " + std::to_string(r.inside_violations);
    return r.stated_probability == -0.5 && r.outside_samples == 1000 && r.outside_witnessed == 1000 && r.inside_violations == 0;
}

bool local_depol_rescaled(std::string &detail) {
    auto c = xy_xz_intersection();
    auto b = lhv_achievability_boundary(NoiseKind::LocalDepol);
    double t3 = min_noise(cube_query(NoiseKind::LocalDepol, 1 / std::sqrt(3.0)));
    double t2 = min_noise(cube_query(NoiseKind::LocalDepol, 1 / std::sqrt(2.0)));
    detail = "1-r " + num(1 - c.r) + " at 1-R " + num(1 - c.R) + "; R* " + num(b.R_star) + " 1-r " + num(1 - b.r_at_boundary) +
             "; thresholds " + num(t3) + ", " + num(t2);
    return std::abs(1 - c.r - 0.392919) < 1e-4 && std::abs(1 - c.R - 0.479927) < 1e-4 && std::abs(b.R_star - 0.5449) < 1e-3 &&
           std::abs(1 - b.r_at_boundary - 0.40610) < 1e-3 && std::abs(t3 - (1 - 1 / std::sqrt(3.0))) < 1e-4 &&
           std::abs(t2 - (1 - (std::sqrt(3.0) - 1) / std::sqrt(2.0))) < 1e-4;
}

bool joint_depol_rescaled(std::string &detail) {
    auto c = tdb_intersection();
    auto b = lhv_achievability_boundary(NoiseKind::JointDepol);
    double lam = min_noise(cube_query(NoiseKind::JointDepol, 1 / std::sqrt(2.0)));
    auto at = pipeline(cube_vertex(0), cube_vertex(0), c.R, NoiseModel(NoiseKind::JointDepol, 1 - c.r));
    bool infeasible = !cube_separable(at).feasible();
    detail = "intersection (" + num(c.R) + ", " + num(c.r) + "); R* " + num(b.R_star) + "; lambda " + num(lam) +
             "; intersection " + (infeasible ? "infeasible" : "feasible");
    double s3 = std::sqrt(3.0);
    return std::abs(c.R - 1 / s3) < 1e-6 && std::abs(c.r - s3 / (2 + s3)) < 1e-6 && std::abs(b.R_star - 1 / std::sqrt(2.0)) < 1e-3 &&
           std::abs(lam - (1 - 1 / (std::sqrt(2.0) + 1))) < 1e-4 && infeasible;
}

bool rescaled_sphere(std::string &detail) {
    ThresholdQuery q;
    q.space = StateSpaceSpec::sphere(1.73);
    q.criterion = gencube::Criterion::QuantumSeparable;
    q.policy = InputPolicy::SphereGrid;
    q.family = NoiseKind::JointDepol;
    double jd = min_noise(q);
    q.family = NoiseKind::LocalDepol;
    q.space = StateSpaceSpec::sphere(1.16);
    double ld = min_noise(q);
    int sampled = 0, invalid = 0;
    for (double R : {0.5, 0.8, 0.95, 1.05, 1.2, 1.5, 2.0}) {
        for (double p : {0.0, 0.1, 0.25, 0.4, 0.49}) {
            sampled++;
            auto v = dephasing_impossibility(R, p, SpaceKind::Sphere);
            invalid += !v.valid && v.witness < 0;
        }
    }
    detail = "joint " + num(jd) + ", local " + num(ld) + ", dephase invalid " + std::to_string(invalid) + "/" + std::to_string(sampled);
    return std::abs(jd - 0.536) <= 0.005 && std::abs(ld - 0.395) <= 0.005 && invalid == sampled;
}

bool lemma8(std::string &detail) {
    auto s = lemma8_search();
    const auto &r = s.best;
    detail = "best alpha " + num(r.alpha) + " epsilon " + num(r.epsilon) + ": " + std::to_string(r.feasible_outputs) +
             "/64 feasible, witness " + num(r.non_ppt_witness) + ", marginal " + num(r.marginal_deviation) + ", pt " +
             num(r.cj_min_pt_io_split) + " / " + num(r.cj_min_pt_ab_split);
    return s.found && r.epsilon > 0 && r.all_feasible() && r.non_ppt_witness < -1e-8 && r.marginal_deviation <= 1e-10 &&
           r.cj_min_pt_io_split < -1e-8 && r.cj_min_pt_ab_split < -1e-8;
}

bool error_per_gate(std::string &detail) {
    auto b = error_per_gate_bounds();
    detail = "lower " + num(b.lower) + ", w residual " + num(b.w_identity_residual) + ", upper " +
             std::to_string(b.upper_feasible_outputs) + "/64";
    return b.lower == 0.2 && b.w_identity_residual < 1e-12 && b.upper_feasible_outputs == 64;
}

bool symmetry(std::string &detail) {
    double worst = 0;
    for (auto family : {NoiseKind::JointDepol, NoiseKind::LocalDepol, NoiseKind::LocalDephase}) {
        for (double R : {1.0, 0.8, 1.3}) {
            double a = min_noise(cube_query(family, R));
            double b = min_noise(cube_query(family, R, InputPolicy::AllVertices));
            worst = std::max(worst, std::abs(a - b));
        }
    }
    std::set<int> seen;
    auto cycle = clifford_vertex_cycle();
    for (const auto &v : cycle) {
        seen.insert(vertex_index(v));
    }
    detail = "max policy gap " + num(worst) + ", orbit visits " + std::to_string(seen.size());
    return worst < 1e-6 && cycle.size() == 8 && seen.size() == 8;
}

bool hn_simulator(std::string &detail) {
    const char *suite[] = {"t_pair_joint_depol.circ", "bell_local_depol.circ", "adaptive_correction.circ",
                           "three_qubit_chain.circ", "midcircuit_measurement.circ"};
    bool ok = true;
    double worst = 0;
    for (const char *name : suite) {
        std::ifstream f(std::string(GENCUBE_TEST_DATA_DIR) + "/circuits/" + name);
        Circuit c = parse_circuit(f);
        auto h = simulate_hn(c, 100000, 2024);
        double d = tvd(normalize(h), simulate_dense(c));
        worst = std::max(worst, d);
        ok &= d < 0.02 && h == simulate_hn(c, 100000, 2024);
    }
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-1, 1);
    DenseMatrix U = csign_unitary();
    double map_err = 0;
    for (int k = 0; k < 100; k++) {
        PauliCoeffs2Q a = PauliCoeffs2Q::identity();
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 4; j++) {
                if (i + j > 0) {
                    a(i, j) = u(rng);
                }
            }
        }
        map_err = std::max(map_err, to_dense(csign(a)).max_abs_diff(U * to_dense(a) * U.dagger()));
    }
    detail = "worst tvd " + num(worst) + ", csign map error " + num(map_err);
    return ok && map_err < 1e-12;
}

Povm random_basis(std::mt19937_64 &rng, size_t d) {
    std::normal_distribution<double> g;
    std::vector<std::vector<Complex>> vs;
    while (vs.size() < d) {
        std::vector<Complex> v(d);
        for (auto &x : v) {
            x = Complex(g(rng), g(rng));
        }
        for (const auto &w : vs) {
            Complex ip = 0;
            for (size_t i = 0; i < d; i++) {
                ip += std::conj(w[i]) * v[i];
            }
            for (size_t i = 0; i < d; i++) {
                v[i] -= ip * w[i];
            }
        }
        double n = 0;
        for (auto &x : v) {
            n += std::norm(x);
        }
        for (auto &x : v) {
            x /= std::sqrt(n);
        }
        vs.push_back(v);
    }
    Povm p;
    for (const auto &v : vs) {
        p.elements.push_back(ket_projector(v));
    }
    return p;
}

bool compatibility(std::string &detail) {
    auto xyz = operator_compatible(PovmSet(2, {qubit_projective({1, 0, 0}), qubit_projective({0, 1, 0}), qubit_projective({0, 0, 1})}));
    bool ok = xyz.compatible && xyz.corners.size() == 8;
    for (size_t k = 0; ok && k < 8; k++) {
        ok &= xyz.corners[k].max_abs_diff(to_dense(cube_vertex(static_cast<int>(k)))) < 1e-10;
    }
    std::mt19937_64 rng(77);
    std::vector<Povm> four;
    for (int k = 0; k < 4; k++) {
        four.push_back(random_basis(rng, 2));
    }
    auto generic = operator_compatible(PovmSet(2, four));
    ok &= !generic.compatible;
    bool counting = true;
    for (size_t d : {2u, 3u}) {
        size_t limit = d + 1;
        for (size_t n = 1; n <= limit + 1; n++) {
            std::vector<Povm> bases;
            for (size_t k = 0; k < n; k++) {
                bases.push_back(random_basis(rng, d));
            }
            PovmSet set(d, bases);
            bool expected = set.total_outcomes() <= d * d + n - 1;
            counting &= passes_counting_bound(set) == expected;
            counting &= (n <= limit) == expected;
        }
    }
    detail = std::string("xyz ") + (xyz.compatible ? "compatible" : "incompatible") + ", four generic " +
             (generic.compatible ? "compatible" : "incompatible") + ", counting bound " + (counting ? "ok" : "wrong");
    return ok && counting;
}

bool lp_soundness(std::string &detail) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> pick(0, 63);
    std::exponential_distribution<double> expo(1);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> scale(0, 0.3);
    int agree = 0, feasible = 0, functionals = 0;
    bool ok = true;
    for (int k = 0; k < 500; k++) {
        int terms = 1 + k % 8;
        PauliCoeffs2Q A;
        std::vector<double> w(terms);
        double total = 0;
        for (auto &x : w) {
            x = expo(rng);
            total += x;
        }
        for (int t = 0; t < terms; t++) {
            int idx = pick(rng);
            A += product(cube_vertex(idx / 8), cube_vertex(idx % 8)) * (w[t] / total);
        }
        double s = k % 5 == 0 ? 0 : scale(rng);
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 4; j++) {
                if (i + j > 0) {
                    A(i, j) += s * g(rng);
                }
            }
        }
        A(0, 0) = 1;
        auto fast = cube_separable(A);
        auto exact = cube_separable_exact(A);
        agree += fast.feasible() == exact.feasible();
        feasible += fast.feasible();
        if (fast.feasible()) {
            ok &= verify_certificate(fast.certificate(), A, 1, fast.certificate().tolerance_used);
        } else {
            const auto &f = fast.functional();
            bool nonneg = true;
            for (int u = 0; u < 8; u++) {
                for (int v = 0; v < 8; v++) {
                    nonneg &= f.dual.dot(product(cube_vertex(u), cube_vertex(v))) >= -1e-9;
                }
            }
            ok &= nonneg && f.dual.dot(A) < 0 && verify_functional(f, A, 1, 1e-9);
            functionals += nonneg;
        }
    }
    detail = std::to_string(agree) + "/500 agree, " + std::to_string(feasible) + " feasible, " + std::to_string(functionals) +
             " verified functionals";
    return ok && agree == 500;
}

}  // namespace

int main() {
    std::vector<AcceptanceItem> criteria{
        {1, "cube thresholds", cube_thresholds},
        {2, "vertex-mixture certificates", appendix1},
        {3, "sphere necessity witnesses", appendix2},
        {4, "rescaled cube, local depolarizing", local_depol_rescaled},
        {5, "rescaled cube, joint depolarizing", joint_depol_rescaled},
        {6, "rescaled sphere", rescaled_sphere},
        {7, "separability preserving entangling channel", lemma8},
        {8, "error per gate bounds", error_per_gate},
        {9, "symmetry reductions", symmetry},
        {10, "vertex sampling simulator", hn_simulator},
        {11, "operator compatibility", compatibility},
        {12, "linear program soundness", lp_soundness},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        std::string detail;
        bool pass;
        try {
            pass = c.check(detail);
        } catch (const std::exception &e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        failures += !pass;
        std::printf("%s %d %s: %s\n", pass ? "PASS" : "FAIL", c.number, c.title.c_str(), detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
