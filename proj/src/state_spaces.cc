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

#include "gencube/state_spaces.h"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gencube {

StateSpaceSpec::StateSpaceSpec(SpaceKind kind, double R) : kind_(kind), R_(R) {
    if (!(R > 0) || !std::isfinite(R)) {
        throw std::invalid_argument("state space rescaling R must be positive");
    }
}

BlochOp cube_vertex(int index, double R) {
    if (index < 0 || index >= 8) {
        throw std::out_of_range("cube vertex index");
    }
    return BlochOp::from_bloch(
        (index & 4) ? -R : R,
        (index & 2) ? -R : R,
        (index & 1) ? -R : R);
}

std::array<BlochOp, 8> cube_vertices(double R) {
    std::array<BlochOp, 8> r;
    for (int k = 0; k < 8; k++) {
        r[k] = cube_vertex(k, R);
    }
    return r;
}

int vertex_index(const BlochOp &op) {
    return (op.bloch[0] < 0 ? 4 : 0) | (op.bloch[1] < 0 ? 2 : 0) | (op.bloch[2] < 0 ? 1 : 0);
}

bool contains(const StateSpaceSpec &space, const BlochOp &op) {
    const auto &b = op.bloch;
    if (space.kind() == SpaceKind::Cube) {
        for (double c : b) {
            if (std::abs(c) > space.R() + 1e-12) {
                return false;
            }
        }
        return true;
    }
    return std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]) <= space.R() + 1e-12;
}

static void check_R(double R) {
    if (!(R > 0) || !std::isfinite(R)) {
        throw std::invalid_argument("rescaling R must be positive");
    }
}

BlochOp rescale(const BlochOp &op, double R) {
    check_R(R);
    BlochOp r = op;
    for (auto &c : r.bloch) {
        c *= R;
    }
    return r;
}

PauliCoeffs2Q rescale2(const PauliCoeffs2Q &coeffs, double R) {
    check_R(R);
    PauliCoeffs2Q r = coeffs;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            int order = (i != 0) + (j != 0);
            if (order == 1) {
                r.a[i][j] *= R;
            } else if (order == 2) {
                r.a[i][j] *= R * R;
            }
        }
    }
    return r;
}

double noise_to_R(NoiseSite site, double p) {
    if (!(p >= 0 && p < 1)) {
        throw std::invalid_argument("depolarizing rate must be in [0, 1)");
    }
    return site == NoiseSite::Measurement ? 1 / (1 - p) : 1 - p;
}

PovmSet::PovmSet(size_t dim, std::vector<Povm> povms) : dim_(dim), povms_(std::move(povms)) {
    if (dim < 2) {
        throw std::invalid_argument("POVM dimension must be at least 2");
    }
    if (povms_.empty()) {
        throw std::invalid_argument("POVM set is empty");
    }
    for (const auto &p : povms_) {
        if (p.elements.empty()) {
            throw std::invalid_argument("POVM has no elements");
        }
        DenseMatrix total(dim);
        for (const auto &e : p.elements) {
            if (e.dim() != dim) {
                throw std::invalid_argument("POVM element has the wrong dimension");
            }
            if (!e.is_hermitian(1e-10) || min_eigenvalue(e) < -1e-10) {
                throw std::invalid_argument("POVM element is not positive");
            }
            total += e;
        }
        if (total.max_abs_diff(DenseMatrix::identity(dim)) > 1e-10) {
            throw std::invalid_argument("POVM elements do not sum to identity");
        }
    }
}

size_t PovmSet::total_outcomes() const {
    size_t t = 0;
    for (const auto &p : povms_) {
        t += p.elements.size();
    }
    return t;
}

Povm qubit_projective(std::array<double, 3> axis) {
    double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (!(n > 0)) {
        throw std::invalid_argument("measurement axis must be nonzero");
    }
    BlochOp plus = BlochOp::from_bloch(axis[0] / n, axis[1] / n, axis[2] / n);
    BlochOp minus = BlochOp::from_bloch(-axis[0] / n, -axis[1] / n, -axis[2] / n);
    return Povm{{to_dense(plus), to_dense(minus)}};
}

bool passes_counting_bound(const PovmSet &povms) {
    size_t d = povms.dim();
    return povms.total_outcomes() <= d * d + povms.povms().size() - 1;
}

namespace {

/// Basis of Hermitian d x d matrices: diagonal units, then symmetric and antisymmetric off-diagonals.
std::vector<DenseMatrix> hermitian_basis(size_t d) {
    std::vector<DenseMatrix> basis;
    for (size_t k = 0; k < d; k++) {
        DenseMatrix m(d);
        m(k, k) = 1;
        basis.push_back(m);
    }
    for (size_t i = 0; i < d; i++) {
        for (size_t j = i + 1; j < d; j++) {
            DenseMatrix re(d);
            re(i, j) = 1;
            re(j, i) = 1;
            basis.push_back(re);
            DenseMatrix im(d);
            im(i, j) = Complex{0, -1};
            im(j, i) = Complex{0, 1};
            basis.push_back(im);
        }
    }
    return basis;
}

/// Solves (M^T M) x = M^T b by Gaussian elimination with partial pivoting.
/// Columns without a usable pivot are treated as free and set to zero.
std::vector<double> normal_equations(const std::vector<std::vector<double>> &M, const std::vector<double> &b) {
    size_t n = M.front().size();
    std::vector<std::vector<double>> G(n, std::vector<double>(n + 1, 0));
    double scale = 0;
    for (size_t r = 0; r < M.size(); r++) {
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < n; j++) {
                G[i][j] += M[r][i] * M[r][j];
            }
            G[i][n] += M[r][i] * b[r];
        }
    }
    for (size_t i = 0; i < n; i++) {
        scale = std::max(scale, std::abs(G[i][i]));
    }
    double tiny = 1e-12 * std::max(scale, 1.0);

    size_t row = 0;
    std::vector<size_t> pivot_cols;
    for (size_t col = 0; col < n && row < n; col++) {
        size_t best = row;
        for (size_t r = row + 1; r < n; r++) {
            if (std::abs(G[r][col]) > std::abs(G[best][col])) {
                best = r;
            }
        }
        if (std::abs(G[best][col]) < tiny) {
            continue;
        }
        std::swap(G[row], G[best]);
        for (size_t r = 0; r < n; r++) {
            if (r == row || G[r][col] == 0) {
                continue;
            }
            double f = G[r][col] / G[row][col];
            for (size_t c = col; c <= n; c++) {
                G[r][c] -= f * G[row][c];
            }
        }
        pivot_cols.push_back(col);
        row++;
    }
    std::vector<double> x(n, 0);
    for (size_t k = 0; k < pivot_cols.size(); k++) {
        x[pivot_cols[k]] = G[k][n] / G[k][pivot_cols[k]];
    }
    return x;
}

/// Steps a mixed-radix counter with the first POVM varying slowest. Returns false after the last value.
bool advance_choice(std::vector<size_t> &choice, const PovmSet &povms) {
    for (size_t p = choice.size(); p-- > 0;) {
        if (++choice[p] < povms.povms()[p].elements.size()) {
            return true;
        }
        choice[p] = 0;
    }
    return false;
}

}  // namespace

CompatibilityResult operator_compatible(const PovmSet &povms) {
    CompatibilityResult result;
    result.counting_bound_ok = passes_counting_bound(povms);
    size_t d = povms.dim();
    auto basis = hermitian_basis(d);

    // Rows of tr(element * H_k) for every element, then the trace row.
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<size_t, size_t>> labels;
    for (size_t p = 0; p < povms.povms().size(); p++) {
        const auto &elements = povms.povms()[p].elements;
        for (size_t e = 0; e < elements.size(); e++) {
            std::vector<double> row;
            for (const auto &h : basis) {
                row.push_back((elements[e] * h).trace().real());
            }
            rows.push_back(std::move(row));
            labels.emplace_back(p, e);
        }
    }
    std::vector<double> trace_row;
    for (const auto &h : basis) {
        trace_row.push_back(h.trace().real());
    }
    rows.push_back(trace_row);

    std::vector<size_t> choice(povms.povms().size(), 0);
    result.compatible = true;
    while (true) {
        std::vector<double> b;
        for (const auto &[p, e] : labels) {
            b.push_back(choice[p] == e ? 1.0 : 0.0);
        }
        b.push_back(1.0);

        auto x = normal_equations(rows, b);
        double res2 = 0;
        double b2 = 0;
        for (size_t r = 0; r < rows.size(); r++) {
            double v = 0;
            for (size_t k = 0; k < x.size(); k++) {
                v += rows[r][k] * x[k];
            }
            res2 += (v - b[r]) * (v - b[r]);
            b2 += b[r] * b[r];
        }
        double rel = std::sqrt(res2 / b2);
        result.worst_residual = std::max(result.worst_residual, rel);
        if (rel >= 1e-8) {
            result.compatible = false;
        }
        DenseMatrix corner(d);
        for (size_t k = 0; k < x.size(); k++) {
            corner += basis[k] * x[k];
        }
        result.corners.push_back(corner);

        if (!advance_choice(choice, povms)) {
            break;
        }
    }
    if (!result.compatible) {
        result.corners.clear();
    }
    return result;
}

PovmSet parse_povm_set(std::istream &in) {
    size_t dim = 0;
    std::vector<Povm> povms;
    std::string line;
    size_t line_no = 0;
    auto fail = [&](const std::string &msg) {
        throw std::invalid_argument("povm file line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::stringstream ss(line);
        std::string word;
        if (!(ss >> word)) {
            continue;
        }
        if (word == "dim") {
            if (!(ss >> dim) || dim < 2) {
                fail("bad dimension");
            }
        } else if (word == "povm") {
            povms.emplace_back();
        } else if (word == "elem") {
            if (dim == 0 || povms.empty()) {
                fail("elem before dim/povm");
            }
            std::vector<Complex> data;
            double re, im;
            while (ss >> re >> im) {
                data.emplace_back(re, im);
            }
            if (data.size() != dim * dim) {
                fail("elem needs " + std::to_string(dim * dim) + " complex entries");
            }
            povms.back().elements.emplace_back(dim, std::move(data));
        } else if (word == "projective") {
            if (dim != 2) {
                fail("projective shortcut requires dim 2");
            }
            std::array<double, 3> axis{};
            if (!(ss >> axis[0] >> axis[1] >> axis[2])) {
                fail("projective needs three axis components");
            }
            povms.push_back(qubit_projective(axis));
        } else {
            fail("unknown keyword '" + word + "'");
        }
    }
    if (dim == 0) {
        throw std::invalid_argument("povm file has no dim line");
    }
    return PovmSet(dim, std::move(povms));
}

}  // namespace gencube
