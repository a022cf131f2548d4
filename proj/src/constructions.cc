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

#include "gencube/constructions.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>

#include "gencube/state_spaces.h"

namespace gencube {

const MagicBasis &MagicBasis::get() {
    static const MagicBasis basis = [] {
        double theta = std::acos(1 / std::sqrt(3.0));
        double c = std::cos(theta / 2);
        double s = std::sin(theta / 2);
        Complex phase = std::polar(1.0, std::acos(-1.0) / 4);
        MagicBasis b;
        b.t_ket = {c, phase * s};
        b.t_bar_ket = {-std::conj(phase) * s, c};
        b.t = ket_projector(b.t_ket);
        b.t_bar = ket_projector(b.t_bar_ket);
        b.w = (std::sqrt(3.0) + 1) / 2;
        return b;
    }();
    return basis;
}

namespace {

std::vector<Complex> ket3(const std::array<Complex, 2> &a, const std::array<Complex, 2> &b, const std::array<Complex, 2> &c) {
    auto ab = kron_ket(a, b);
    return kron_ket(ab, c);
}

/// Adds weight * |psi><psi| (psi on A1, A2, B2) tensored with I/2 on B1.
void add_with_mixed_b1(DenseMatrix &rho, const std::vector<Complex> &psi, double weight) {
    auto full = [](size_t k3, size_t b1) {
        size_t a1 = (k3 >> 2) & 1, a2 = (k3 >> 1) & 1, b2 = k3 & 1;
        return a1 * 8 + a2 * 4 + b1 * 2 + b2;
    };
    for (size_t i = 0; i < 8; i++) {
        for (size_t j = 0; j < 8; j++) {
            Complex e = weight * 0.5 * psi[i] * std::conj(psi[j]);
            for (size_t b1 = 0; b1 < 2; b1++) {
                rho(full(i, b1), full(j, b1)) += e;
            }
        }
    }
}

CjState assemble(double alpha, double delta, double epsilon) {
    if (!(alpha > 0 && alpha <= 1) || !(delta >= 0 && delta <= 1) || !(epsilon >= 0 && epsilon < 0.5)) {
        throw std::invalid_argument("CJ parameters out of range");
    }
    const auto &m = MagicBasis::get();
    CjParams p{alpha, std::sqrt(std::max(0.0, 1 - alpha * alpha)), std::sqrt(std::max(0.0, 1 - delta * delta)), delta,
               epsilon};
    const auto &T = m.t_ket;
    const auto &B = m.t_bar_ket;
    auto ttt = ket3(T, T, T), bbb = ket3(B, B, B), btb = ket3(B, T, B), tbt = ket3(T, B, T);
    std::vector<Complex> psi1(8), psi2(8);
    for (size_t k = 0; k < 8; k++) {
        psi1[k] = p.alpha * ttt[k] + p.beta * bbb[k];
        psi2[k] = p.gamma * btb[k] + p.delta * tbt[k];
    }
    CjState cj{DenseMatrix(16), p};
    add_with_mixed_b1(cj.rho, psi1, 0.5 + epsilon);
    add_with_mixed_b1(cj.rho, psi2, 0.5 - epsilon);
    return cj;
}

double marginal_deviation(const CjState &cj) {
    return cj_input_marginal(cj).max_abs_diff(DenseMatrix::identity(4) * 0.25);
}

}  // namespace

CjState build_cj(double alpha, double epsilon) {
    if (!(epsilon >= 0 && epsilon < 0.5)) {
        throw std::invalid_argument("epsilon must be in [0, 1/2)");
    }
    double delta2 = (0.5 - (0.5 + epsilon) * alpha * alpha) / (0.5 - epsilon);
    if (!(delta2 >= -1e-15 && delta2 <= 1 + 1e-15)) {
        throw std::invalid_argument("alpha and epsilon give delta^2 outside [0, 1]");
    }
    return assemble(alpha, std::sqrt(std::clamp(delta2, 0.0, 1.0)), epsilon);
}

CjState build_cj(double alpha, double delta, double epsilon) {
    CjState cj = assemble(alpha, delta, epsilon);
    if (marginal_deviation(cj) > 1e-10) {
        throw std::invalid_argument("CJ input marginal is not maximally mixed");
    }
    return cj;
}

CjState identity_cj() {
    std::vector<Complex> phi{std::sqrt(0.5), 0, 0, std::sqrt(0.5)};
    DenseMatrix pair = ket_projector(phi);
    // pair acts on (A1, A2) and on (B1, B2), which is already the register order.
    return {kron(pair, pair), CjParams{1, 0, 1, 0, 0}};
}

DenseMatrix cj_input_marginal(const CjState &cj) {
    std::vector<size_t> outputs{1, 3};
    return partial_trace_qubits(cj.rho, 4, outputs);
}

PauliCoeffs2Q cj_apply(const CjState &cj, const PauliCoeffs2Q &input) {
    DenseMatrix in = to_dense(input);
    DenseMatrix out(4);
    auto full = [](size_t i, size_t o) {
        size_t a1 = i >> 1, b1 = i & 1, a2 = o >> 1, b2 = o & 1;
        return a1 * 8 + a2 * 4 + b1 * 2 + b2;
    };
    for (size_t o = 0; o < 4; o++) {
        for (size_t o2 = 0; o2 < 4; o2++) {
            Complex acc = 0;
            for (size_t i = 0; i < 4; i++) {
                for (size_t i2 = 0; i2 < 4; i2++) {
                    acc += in(i, i2) * 4.0 * cj.rho(full(i, o), full(i2, o2));
                }
            }
            out(o, o2) = acc;
        }
    }
    return from_dense(out);
}

bool Lemma8Report::passes() const {
    return all_feasible() && epsilon > 0 && non_ppt_witness < -1e-8 && cj_min_pt_io_split < -1e-8 &&
           cj_min_pt_ab_split < -1e-8 && marginal_deviation <= 1e-10;
}

Lemma8Report lemma8_report(double alpha, double epsilon) {
    CjState cj = build_cj(alpha, epsilon);
    Lemma8Report r{};
    r.alpha = alpha;
    r.epsilon = epsilon;
    r.marginal_deviation = marginal_deviation(cj);

    double s = 1 / std::sqrt(3.0);
    for (int u = 0; u < 8; u++) {
        for (int v = 0; v < 8; v++) {
            PauliCoeffs2Q out = cj_apply(cj, product(cube_vertex(u), cube_vertex(v)));
            if (cube_separable(out, 1.0).feasible()) {
                r.feasible_outputs++;
            }
            double dx = out.a[1][0] - s, dy = out.a[2][0] - s, dz = out.a[3][0] - s;
            r.a2_distance_to_t = std::max(r.a2_distance_to_t, std::sqrt(dx * dx + dy * dy + dz * dz));
        }
    }

    const auto &m = MagicBasis::get();
    std::array<Complex, 2> plus{(m.t_ket[0] + m.t_bar_ket[0]) / std::sqrt(2.0), (m.t_ket[1] + m.t_bar_ket[1]) / std::sqrt(2.0)};
    DenseMatrix a_side = ket_projector(plus);
    std::vector<BlochOp> b_samples{
        BlochOp::from_bloch(1, 0, 0), BlochOp::from_bloch(-1, 0, 0), BlochOp::from_bloch(0, 1, 0),
        BlochOp::from_bloch(0, -1, 0), BlochOp::from_bloch(0, 0, 1), BlochOp::from_bloch(0, 0, -1),
        BlochOp::from_bloch(s, s, s), BlochOp::from_bloch(-s, -s, -s),
    };
    r.non_ppt_witness = -std::numeric_limits<double>::infinity();
    for (const auto &b : b_samples) {
        PauliCoeffs2Q in = from_dense(kron(a_side, to_dense(b)));
        PauliCoeffs2Q out = cj_apply(cj, in);
        r.non_ppt_witness = std::max(r.non_ppt_witness, min_eigenvalue(to_dense(partial_transpose(out))));
    }

    std::vector<size_t> io_split{0, 2};
    std::vector<size_t> ab_split{0, 1};
    r.cj_min_pt_io_split = min_eigenvalue(partial_transpose_qubits(cj.rho, 4, io_split));
    r.cj_min_pt_ab_split = min_eigenvalue(partial_transpose_qubits(cj.rho, 4, ab_split));
    return r;
}

void write_report(std::ostream &out, const Lemma8Report &r) {
    out << "alpha: " << r.alpha << "\n";
    out << "epsilon: " << r.epsilon << "\n";
    out << "feasible_outputs: " << r.feasible_outputs << "/64\n";
    out << "non_ppt_witness: " << r.non_ppt_witness << "\n";
    out << "a2_distance_to_t: " << r.a2_distance_to_t << "\n";
    out << "cj_min_pt_io_split: " << r.cj_min_pt_io_split << "\n";
    out << "cj_min_pt_ab_split: " << r.cj_min_pt_ab_split << "\n";
    out << "marginal_deviation: " << r.marginal_deviation << "\n";
    out << "passes: " << (r.passes() ? "true" : "false") << "\n";
}

Lemma8Search lemma8_search() {
    Lemma8Search result{false, {}, {}};
    bool have_best = false;
    for (double alpha : {0.9, 0.95, 0.98, 0.99, 0.995, 0.998, 0.999, 0.9995}) {
        double eps_max = (1 / (alpha * alpha) - 1) / 2;
        for (double eps : {1e-4, 3e-4, 5e-4, 1e-3, 2e-3, 5e-3, 1e-2}) {
            if (eps >= eps_max) {
                continue;
            }
            Lemma8Report r = lemma8_report(alpha, eps);
            result.tried.push_back(r);
            bool better = !have_best || r.passes() > result.best.passes() ||
                          (r.passes() == result.best.passes() && r.feasible_outputs > result.best.feasible_outputs);
            if (better) {
                result.best = r;
                have_best = true;
            }
            if (r.passes()) {
                result.found = true;
                return result;
            }
        }
    }
    return result;
}

PauliCoeffs2Q error_per_gate_output(const PauliCoeffs2Q &input, const NoiseModel &noise) {
    if (noise.kind != NoiseKind::ErrorPerGate) {
        throw std::invalid_argument("error_per_gate_output needs an error-per-gate noise model");
    }
    PauliCoeffs2Q c = csign(input);
    PauliCoeffs2Q z = c;
    for (int j = 0; j < 4; j++) {
        z.a[1][j] = -z.a[1][j];
        z.a[2][j] = -z.a[2][j];
    }
    return c * (1 - noise.param) + z * noise.param;
}

ErrorPerGateBounds error_per_gate_bounds() {
    const auto &m = MagicBasis::get();
    ErrorPerGateBounds b{};
    DenseMatrix target = (pauli_matrix(0) + pauli_matrix(1) + pauli_matrix(2) + pauli_matrix(3)) * 0.5;
    b.magic_identity_residual = target.max_abs_diff(m.t * m.w - m.t_bar * (m.w - 1));
    double norm_sum = m.w * m.w + (m.w - 1) * (m.w - 1);
    b.w_identity_residual = std::abs(norm_sum - 2);
    // Worst Pauli probability -1/2 of the noiseless gate against a best case of norm_sum.
    b.lower = 0.5 / (0.5 + norm_sum);
    b.upper = 0.5;
    NoiseModel noise(NoiseKind::ErrorPerGate, b.upper);
    for (int u = 0; u < 8; u++) {
        for (int v = 0; v < 8; v++) {
            auto res = cube_separable(error_per_gate_output(product(cube_vertex(u), cube_vertex(v)), noise), 1.0);
            if (res.feasible()) {
                b.upper_feasible_outputs++;
                b.upper_certificates[LhvCertificate::pair_index(u, v)] = res.certificate();
            }
        }
    }
    return b;
}

PauliCoeffs2Q bell_coefficients(BellState state) {
    PauliCoeffs2Q r = PauliCoeffs2Q::identity();
    std::array<double, 3> d{1, -1, 1};
    switch (state) {
        case BellState::PhiPlus:
            break;
        case BellState::PhiMinus:
            d = {-1, 1, 1};
            break;
        case BellState::PsiPlus:
            d = {1, 1, -1};
            break;
        case BellState::PsiMinus:
            d = {-1, -1, -1};
            break;
    }
    for (int k = 0; k < 3; k++) {
        r.a[k + 1][k + 1] = d[k];
    }
    return r;
}

LhvCertificate bell_cube_certificate(BellState state) {
    Clifford1Q side_flip = Clifford1Q::X;
    bool flip = true;
    switch (state) {
        case BellState::PhiPlus:
            flip = false;
            break;
        case BellState::PhiMinus:
            side_flip = Clifford1Q::Z;
            break;
        case BellState::PsiPlus:
            side_flip = Clifford1Q::X;
            break;
        case BellState::PsiMinus:
            side_flip = Clifford1Q::Y;
            break;
    }
    LhvCertificate cert;
    for (int u = 0; u < 8; u++) {
        BlochOp a = cube_vertex(u);
        BlochOp b = BlochOp::from_bloch(a.bloch[0], -a.bloch[1], a.bloch[2]);
        if (flip) {
            b = clifford1(b, side_flip);
        }
        cert.weights[LhvCertificate::pair_index(u, vertex_index(b))] += 1.0 / 8;
    }
    return cert;
}

double appendix2_probability(const BlochOp &u, const BlochOp &v) {
    return born_probability(csign(product(u, v)), PauliAxis::X, 1, PauliAxis::X, -1);
}

Appendix2Report appendix2_checks(uint64_t seed, int samples) {
    Appendix2Report r{};
    r.stated_probability = appendix2_probability(BlochOp::from_bloch(1, 1, 1), BlochOp::from_bloch(1, 1, -1));

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit;
    auto random_unit = [&]() {
        std::array<double, 3> x;
        double n;
        do {
            x = {normal(rng), normal(rng), normal(rng)};
            n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        } while (n < 1e-12);
        return std::array<double, 3>{x[0] / n, x[1] / n, x[2] / n};
    };
    // With V = (C, -B, -A) the probability is (1 + v.V) / 4.
    auto second_from_V = [](const std::array<double, 3> &V) {
        return BlochOp::from_bloch(-V[2], -V[1], V[0]);
    };

    r.worst_inside_value = std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; k++) {
        auto dir = random_unit();
        double scale = 1.01 + 0.5 * unit(rng);
        BlochOp v = BlochOp::from_bloch(scale * dir[0], scale * dir[1], scale * dir[2]);
        std::array<double, 3> V{-dir[0], -dir[1], -dir[2]};
        r.outside_samples++;
        if (appendix2_probability(v, second_from_V(V)) < 0) {
            r.outside_witnessed++;
        }

        double radius = std::cbrt(unit(rng));
        BlochOp inside = BlochOp::from_bloch(radius * dir[0], radius * dir[1], radius * dir[2]);
        auto W = random_unit();
        for (const auto &cand : {W, V}) {
            double p = appendix2_probability(inside, second_from_V(cand));
            r.worst_inside_value = std::min(r.worst_inside_value, p);
            r.inside_samples++;
            if (p < -1e-12) {
                r.inside_violations++;
            }
        }
    }
    return r;
}

double separable_extent(const PauliCoeffs2Q &center, const PauliCoeffs2Q &direction, double t_max, double tol) {
    auto ok = [&](double t) {
        return cube_separable(center + direction * t, 1.0).feasible();
    };
    if (!ok(0)) {
        return 0;
    }
    if (ok(t_max)) {
        return t_max;
    }
    double lo = 0, hi = t_max;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (ok(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

double separable_ball_radius(const BlochOp &u, const BlochOp &v, int directions, uint64_t seed) {
    for (const auto *op : {&u, &v}) {
        for (double c : op->bloch) {
            if (std::abs(c) >= 1 - 1e-12) {
                throw std::domain_error("center lies on a cube face; the separable radius is 0");
            }
        }
    }
    PauliCoeffs2Q center = product(u, v);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    double radius = std::numeric_limits<double>::infinity();
    for (int d = 0; d < directions; d++) {
        PauliCoeffs2Q dir;
        double n2 = 0;
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 4; j++) {
                if (i || j) {
                    dir.a[i][j] = normal(rng);
                    n2 += dir.a[i][j] * dir.a[i][j];
                }
            }
        }
        dir = dir * (1 / std::sqrt(n2));
        radius = std::min(radius, separable_extent(center, dir, 2.0));
    }
    return radius;
}

std::vector<BlochOp> clifford_vertex_cycle() {
    std::vector<BlochOp> r{cube_vertex(0)};
    for (auto g : {Clifford1Q::X, Clifford1Q::Y, Clifford1Q::X, Clifford1Q::S, Clifford1Q::X, Clifford1Q::Y, Clifford1Q::X}) {
        r.push_back(clifford1(r.back(), g));
    }
    return r;
}

}  // namespace gencube
