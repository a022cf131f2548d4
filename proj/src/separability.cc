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

#include "gencube/separability.h"

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "gencube/simplex.h"
#include "gencube/state_spaces.h"

namespace gencube {

namespace {

constexpr double FLOAT_PIVOT_EPS = 1e-12;
constexpr double TRUST_FEASIBLE_BELOW = 1e-10;
constexpr double TRUST_INFEASIBLE_ABOVE = 1e-7;
constexpr long RATIONAL_MAX_DEN = 1000000;

std::vector<double> flatten(const PauliCoeffs2Q &A) {
    std::vector<double> b;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            b.push_back(A.a[i][j]);
        }
    }
    return b;
}

PauliCoeffs2Q unflatten(const std::vector<double> &v) {
    PauliCoeffs2Q r;
    for (int k = 0; k < 16; k++) {
        r.a[k / 4][k % 4] = v[k];
    }
    return r;
}

std::array<PauliCoeffs2Q, 64> vertex_products(double R) {
    std::array<PauliCoeffs2Q, 64> r;
    for (int u = 0; u < 8; u++) {
        for (int v = 0; v < 8; v++) {
            r[LhvCertificate::pair_index(u, v)] = product(cube_vertex(u, R), cube_vertex(v, R));
        }
    }
    return r;
}

/// Last continued-fraction convergent with denominator <= max_den.
mpq_class rationalize(double x, long max_den) {
    if (!std::isfinite(x) || std::abs(x) > 1e12) {
        throw std::invalid_argument("cannot rationalize value");
    }
    double v = std::abs(x);
    long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int iter = 0; iter < 64; iter++) {
        double a_d = std::floor(v);
        if (k1 > 0 && a_d > max_den) {
            break;
        }
        long long a = static_cast<long long>(a_d);
        long long h2 = a * h1 + h0;
        long long k2 = a * k1 + k0;
        if (k2 > max_den) {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        double frac = v - a_d;
        if (frac < 1e-15) {
            break;
        }
        v = 1 / frac;
    }
    mpq_class r(mpz_class(static_cast<long>(h1)), mpz_class(static_cast<long>(k1)));
    r.canonicalize();
    return x < 0 ? mpq_class(-r) : r;
}

LhvCertificate certificate_from_primal(const std::vector<double> &x) {
    LhvCertificate cert;
    for (size_t k = 0; k < 64; k++) {
        cert.weights[k] = std::max(0.0, x[k]);
    }
    return cert;
}

BellFunctional functional_from_dual(const std::vector<double> &y, const PauliCoeffs2Q &A) {
    BellFunctional f;
    std::vector<double> neg(16);
    for (size_t k = 0; k < 16; k++) {
        neg[k] = -y[k];
    }
    f.dual = unflatten(neg);
    f.violation = -f.dual.dot(A);
    return f;
}

}  // namespace

PauliCoeffs2Q certificate_mixture(const LhvCertificate &cert, double R) {
    auto products = vertex_products(R);
    PauliCoeffs2Q r;
    for (size_t k = 0; k < 64; k++) {
        if (cert.weights[k] != 0) {
            r += products[k] * cert.weights[k];
        }
    }
    return r;
}

double certificate_residual(const LhvCertificate &cert, const PauliCoeffs2Q &A, double R) {
    return certificate_mixture(cert, R).max_abs_diff(A);
}

bool verify_certificate(const LhvCertificate &cert, const PauliCoeffs2Q &A, double R, double tol) {
    double total = 0;
    for (double w : cert.weights) {
        if (!(w >= -tol)) {
            return false;
        }
        total += w;
    }
    if (std::abs(total - 1) > tol) {
        return false;
    }
    return certificate_residual(cert, A, R) <= tol;
}

bool verify_functional(const BellFunctional &functional, const PauliCoeffs2Q &A, double R, double tol) {
    for (const auto &V : vertex_products(R)) {
        if (functional.dual.dot(V) < -tol) {
            return false;
        }
    }
    double value = functional.dual.dot(A);
    return value < 0 && std::abs(value + functional.violation) <= tol;
}

CubeSeparability cube_separable_exact(const PauliCoeffs2Q &A, double R) {
    if (!(R > 0)) {
        throw std::invalid_argument("R must be positive");
    }
    mpq_class Rq = rationalize(R, RATIONAL_MAX_DEN);
    std::vector<std::vector<mpq_class>> M(16, std::vector<mpq_class>(64));
    for (int u = 0; u < 8; u++) {
        for (int v = 0; v < 8; v++) {
            std::array<mpq_class, 4> x{1, (u & 4) ? -Rq : Rq, (u & 2) ? -Rq : Rq, (u & 1) ? -Rq : Rq};
            std::array<mpq_class, 4> y{1, (v & 4) ? -Rq : Rq, (v & 2) ? -Rq : Rq, (v & 1) ? -Rq : Rq};
            for (int i = 0; i < 4; i++) {
                for (int j = 0; j < 4; j++) {
                    M[4 * i + j][LhvCertificate::pair_index(u, v)] = x[i] * y[j];
                }
            }
        }
    }
    std::vector<mpq_class> b;
    for (double e : flatten(A)) {
        b.push_back(rationalize(e, RATIONAL_MAX_DEN));
    }
    auto sol = solve_phase1<mpq_class>(M, b, mpq_class(0));

    CubeSeparability out;
    out.used_exact = true;
    out.infeasibility = sol.infeasibility.get_d();
    if (sol.infeasibility <= mpq_class(FEASIBILITY_TOL)) {
        std::vector<double> x;
        for (const auto &e : sol.x) {
            x.push_back(e.get_d());
        }
        LhvCertificate cert = certificate_from_primal(x);
        cert.tolerance_used = std::max(FEASIBILITY_TOL, certificate_residual(cert, A, R));
        out.result = cert;
        return out;
    }
    std::vector<double> y;
    for (const auto &e : sol.y) {
        y.push_back(e.get_d());
    }
    BellFunctional f = functional_from_dual(y, A);
    if (!(f.violation > 0)) {
        throw LpFailure("exact LP separation vanished after rationalization");
    }
    out.result = f;
    return out;
}

CubeSeparability cube_separable(const PauliCoeffs2Q &A, double R) {
    if (!(R > 0)) {
        throw std::invalid_argument("R must be positive");
    }
    auto products = vertex_products(R);
    std::vector<std::vector<double>> M(16, std::vector<double>(64));
    for (size_t k = 0; k < 64; k++) {
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 4; j++) {
                M[4 * i + j][k] = products[k].a[i][j];
            }
        }
    }
    auto sol = solve_phase1<double>(M, flatten(A), FLOAT_PIVOT_EPS);

    if (sol.infeasibility <= TRUST_FEASIBLE_BELOW) {
        LhvCertificate cert = certificate_from_primal(sol.x);
        if (verify_certificate(cert, A, R, FEASIBILITY_TOL)) {
            return {cert, false, sol.infeasibility};
        }
    } else if (sol.infeasibility >= TRUST_INFEASIBLE_ABOVE) {
        BellFunctional f = functional_from_dual(sol.y, A);
        if (verify_functional(f, A, R, FEASIBILITY_TOL)) {
            return {f, false, sol.infeasibility};
        }
    }
    return cube_separable_exact(A, R);
}

bool positive_for_pauli(const PauliCoeffs2Q &A, double R) {
    PauliCoeffs2Q unscaled = rescale2(A, 1 / R);
    for (auto p : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
        for (auto q : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
            for (int s : {1, -1}) {
                for (int t : {1, -1}) {
                    if (born_probability(unscaled, p, s, q, t) < -PSD_TOL) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool quantum_separable_2q(const PauliCoeffs2Q &A) {
    return min_eigenvalue(to_dense(A)) >= -PSD_TOL && min_eigenvalue(to_dense(partial_transpose(A))) >= -PSD_TOL;
}

namespace {

/// Accumulates weighted vertex pairs given as sign triples.
struct MixtureBuilder {
    LhvCertificate cert;

    static int index(std::array<int, 3> s) {
        return (s[0] < 0 ? 4 : 0) | (s[1] < 0 ? 2 : 0) | (s[2] < 0 ? 1 : 0);
    }
    void add(std::array<int, 3> u, std::array<int, 3> v, double w) {
        cert.weights[LhvCertificate::pair_index(index(u), index(v))] += w;
    }
    void add(const LhvCertificate &other, double w) {
        for (size_t k = 0; k < 64; k++) {
            cert.weights[k] += w * other.weights[k];
        }
    }
};

PauliCoeffs2Q coeffs(std::array<std::array<double, 4>, 4> a) {
    PauliCoeffs2Q r;
    r.a = a;
    return r;
}

}  // namespace

std::vector<Appendix1Entry> appendix1_certificates(double dephase_p, double depol_p) {
    std::vector<Appendix1Entry> out;
    const std::array<int, 2> pm{1, -1};

    MixtureBuilder c1;
    c1.add({1, 1, 1}, {1, 1, 1}, 0.5);
    c1.add({-1, -1, -1}, {-1, -1, -1}, 0.5);
    out.push_back({1, "all-equal correlations", coeffs({{{1, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}}}),
                   c1.cert, true, ""});

    MixtureBuilder c2;
    for (int q : pm) {
        for (int r : pm) {
            c2.add({1, -1, r}, {1, -1, q}, 1.0 / 8);
            c2.add({-1, 1, r}, {-1, 1, q}, 1.0 / 8);
        }
    }
    out.push_back({2, "xy anti-correlations", coeffs({{{1, 0, 0, 0}, {0, 1, -1, 0}, {0, -1, 1, 0}, {0, 0, 0, 0}}}),
                   c2.cert, true, ""});

    MixtureBuilder c3;
    for (int p : pm) {
        for (int q : pm) {
            for (int r : pm) {
                for (int s : pm) {
                    c3.add({-q, -p, s}, {p, q, r}, 1.0 / 16);
                }
            }
        }
    }
    out.push_back({3, "xy swap anti-correlations", coeffs({{{1, 0, 0, 0}, {0, 0, -1, 0}, {0, -1, 0, 0}, {0, 0, 0, 0}}}),
                   c3.cert, true, ""});

    MixtureBuilder c4;
    c4.add({1, 1, 1}, {1, 1, 1}, 1.0 / 3);
    c4.add(c3.cert, 2.0 / 3);
    double t = 1.0 / 3;
    out.push_back({4, "joint depolarizing", coeffs({{{1, t, t, t}, {t, t, -t, t}, {-0.0 + t, -t, t, t}, {t, t, t, t}}}),
                   c4.cert, true, ""});

    MixtureBuilder c5a;
    c5a.add({1, 1, 1}, {1, 1, 1}, 0.5);
    c5a.add({-1, -1, 1}, {1, 1, 1}, 0.5);
    out.push_back({5, "dephasing helper (first side)", coeffs({{{1, 1, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 1, 1, 1}}}),
                   c5a.cert, true, ""});
    MixtureBuilder c5b;
    c5b.add({1, 1, 1}, {1, 1, 1}, 0.5);
    c5b.add({1, 1, 1}, {-1, -1, 1}, 0.5);
    out.push_back({5, "dephasing helper (second side)", coeffs({{{1, 0, 0, 1}, {1, 0, 0, 1}, {1, 0, 0, 1}, {1, 0, 0, 1}}}),
                   c5b.cert, true, ""});

    {
        double q = 1 - 2 * dephase_p;
        double c0 = 1 - 2 * q - q * q;
        MixtureBuilder m0;
        for (int x1 : pm) {
            for (int y1 : pm) {
                for (int x2 : pm) {
                    for (int y2 : pm) {
                        m0.add({x1, y1, 1}, {x2, y2, 1}, 1.0 / 16);
                    }
                }
            }
        }
        MixtureBuilder m2;
        m2.add({1, -1, 1}, {1, -1, 1}, 0.5);
        m2.add({-1, 1, 1}, {-1, 1, 1}, 0.5);
        MixtureBuilder c6;
        c6.add(m0.cert, c0);
        c6.add(c5a.cert, q);
        c6.add(c5b.cert, q);
        c6.add(m2.cert, q * q);
        double q2 = q * q;
        Appendix1Entry e{6, "local dephasing",
                         coeffs({{{1, q, q, 1}, {q, q2, -q2, q}, {q, -q2, q2, q}, {1, q, q, 1}}}), c6.cert, true, ""};
        if (!(dephase_p >= 0 && dephase_p <= 0.5)) {
            e.valid = false;
            e.reason = "dephasing rate outside [0, 1/2]";
        } else if (c0 < -1e-12) {
            e.valid = false;
            e.reason = "requires 1-2(1-2p)-(1-2p)^2 >= 0";
        }
        out.push_back(e);
    }

    {
        double q = 1 - depol_p;
        double c0 = 1 - 2 * q - q * q;
        MixtureBuilder e00;
        MixtureBuilder mrow;
        MixtureBuilder mcol;
        for (int u = 0; u < 8; u++) {
            for (int v = 0; v < 8; v++) {
                e00.cert.weights[LhvCertificate::pair_index(u, v)] += 1.0 / 64;
            }
            mrow.cert.weights[LhvCertificate::pair_index(u, 0)] += 1.0 / 8;
            mcol.cert.weights[LhvCertificate::pair_index(0, u)] += 1.0 / 8;
        }
        MixtureBuilder c7;
        c7.add(e00.cert, c0);
        c7.add(mrow.cert, q - q * q);
        c7.add(mcol.cert, q - q * q);
        c7.add(c4.cert, 3 * q * q);
        double q2 = q * q;
        Appendix1Entry e{7, "local depolarizing",
                         coeffs({{{1, q, q, q}, {q, q2, -q2, q2}, {q, -q2, q2, q2}, {q, q2, q2, q2}}}), c7.cert, true, ""};
        if (!(depol_p >= 0 && depol_p <= 1)) {
            e.valid = false;
            e.reason = "depolarizing rate outside [0, 1]";
        } else if (c0 < -1e-12) {
            e.valid = false;
            e.reason = "requires 1-2(1-p)-(1-p)^2 >= 0";
        }
        out.push_back(e);
    }
    return out;
}

std::vector<Appendix1Entry> appendix1_certificates() {
    return appendix1_certificates(1 - 1 / std::sqrt(2.0), 2 - std::sqrt(2.0));
}

static std::string vertex_bits(int index) {
    std::string s;
    s += (index & 4) ? '1' : '0';
    s += (index & 2) ? '1' : '0';
    s += (index & 1) ? '1' : '0';
    return s;
}

static int parse_vertex_bits(const std::string &s) {
    if (s.size() != 3 || s.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument("bad vertex bits '" + s + "'");
    }
    return (s[0] == '1' ? 4 : 0) | (s[1] == '1' ? 2 : 0) | (s[2] == '1' ? 1 : 0);
}

void write_certificate(std::ostream &out, const LhvCertificate &cert) {
    char buf[64];
    out << "# lhv certificate: u_bits v_bits weight; bits are (x,y,z) signs, 1 = -1\n";
    std::snprintf(buf, sizeof(buf), "%.17g", cert.tolerance_used);
    out << "tolerance " << buf << "\n";
    for (int u = 0; u < 8; u++) {
        for (int v = 0; v < 8; v++) {
            std::snprintf(buf, sizeof(buf), "%.17g", cert.weights[LhvCertificate::pair_index(u, v)]);
            out << vertex_bits(u) << " " << vertex_bits(v) << " " << buf << "\n";
        }
    }
}

LhvCertificate read_certificate(std::istream &in) {
    LhvCertificate cert;
    std::array<bool, 64> seen{};
    std::string line;
    bool have_tol = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::stringstream ss(line);
        std::string first;
        ss >> first;
        if (first == "tolerance") {
            if (!(ss >> cert.tolerance_used)) {
                throw std::invalid_argument("bad tolerance line");
            }
            have_tol = true;
            continue;
        }
        std::string second;
        double w;
        if (!(ss >> second >> w)) {
            throw std::invalid_argument("bad certificate line '" + line + "'");
        }
        size_t k = LhvCertificate::pair_index(parse_vertex_bits(first), parse_vertex_bits(second));
        if (seen[k]) {
            throw std::invalid_argument("duplicate certificate entry");
        }
        seen[k] = true;
        cert.weights[k] = w;
    }
    if (!have_tol) {
        throw std::invalid_argument("certificate has no tolerance line");
    }
    for (bool s : seen) {
        if (!s) {
            throw std::invalid_argument("certificate must list all 64 vertex pairs");
        }
    }
    return cert;
}

}  // namespace gencube
