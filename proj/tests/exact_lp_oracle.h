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

#ifndef _GENCUBE_TESTS_EXACT_LP_ORACLE_H
#define _GENCUBE_TESTS_EXACT_LP_ORACLE_H

#include <gmpxx.h>

#include <vector>

#include "gencube/pauli_rep.h"

namespace gencube_test {

/// Revised simplex over the rationals. Minimizes the sum of artificial
/// variables for { w >= 0 : M w = b } and returns the optimum. Dantzig pricing,
/// switching to smallest-index pricing after a run of degenerate pivots.
inline mpq_class exact_phase1_optimum(const std::vector<std::vector<mpq_class>> &M_in, const std::vector<mpq_class> &b_in) {
    size_t m = M_in.size();
    size_t n = M_in[0].size();
    std::vector<std::vector<mpq_class>> M = M_in;
    std::vector<mpq_class> b = b_in;
    for (size_t i = 0; i < m; i++) {
        if (b[i] < 0) {
            b[i] = -b[i];
            for (auto &x : M[i]) {
                x = -x;
            }
        }
    }
    // Columns 0..n-1 structural, n..n+m-1 artificial.
    auto column = [&](size_t j) {
        std::vector<mpq_class> c(m, 0);
        if (j < n) {
            for (size_t i = 0; i < m; i++) {
                c[i] = M[i][j];
            }
        } else {
            c[j - n] = 1;
        }
        return c;
    };
    std::vector<size_t> basis(m);
    std::vector<std::vector<mpq_class>> Binv(m, std::vector<mpq_class>(m, 0));
    for (size_t i = 0; i < m; i++) {
        basis[i] = n + i;
        Binv[i][i] = 1;
    }
    std::vector<mpq_class> xb = b;
    int degenerate_run = 0;
    for (int iter = 0; iter < 20000; iter++) {
        // Duals y = c_B^T B^-1, cost 1 on artificials.
        std::vector<mpq_class> y(m, 0);
        for (size_t i = 0; i < m; i++) {
            if (basis[i] >= n) {
                for (size_t k = 0; k < m; k++) {
                    y[k] += Binv[i][k];
                }
            }
        }
        bool bland = degenerate_run > 30;
        size_t enter = n + m;
        mpq_class best = 0;
        for (size_t j = 0; j < n + m; j++) {
            bool in_basis = false;
            for (size_t bj : basis) {
                in_basis |= bj == j;
            }
            if (in_basis) {
                continue;
            }
            auto c = column(j);
            mpq_class reduced = j >= n ? mpq_class(1) : mpq_class(0);
            for (size_t i = 0; i < m; i++) {
                reduced -= y[i] * c[i];
            }
            if (reduced < 0 && (enter == n + m || (!bland && reduced < best))) {
                enter = j;
                best = reduced;
                if (bland) {
                    break;
                }
            }
        }
        if (enter == n + m) {
            break;
        }
        auto a = column(enter);
        std::vector<mpq_class> d(m, 0);
        for (size_t i = 0; i < m; i++) {
            for (size_t k = 0; k < m; k++) {
                d[i] += Binv[i][k] * a[k];
            }
        }
        size_t leave = m;
        mpq_class ratio;
        for (size_t i = 0; i < m; i++) {
            if (d[i] > 0) {
                mpq_class r = xb[i] / d[i];
                if (leave == m || r < ratio || (r == ratio && basis[i] < basis[leave])) {
                    leave = i;
                    ratio = r;
                }
            }
        }
        if (leave == m) {
            break;
        }
        degenerate_run = ratio == 0 ? degenerate_run + 1 : 0;
        mpq_class piv = d[leave];
        for (size_t k = 0; k < m; k++) {
            Binv[leave][k] /= piv;
        }
        xb[leave] /= piv;
        for (size_t i = 0; i < m; i++) {
            if (i != leave && d[i] != 0) {
                mpq_class f = d[i];
                for (size_t k = 0; k < m; k++) {
                    Binv[i][k] -= f * Binv[leave][k];
                }
                xb[i] -= f * xb[leave];
            }
        }
        basis[leave] = enter;
    }
    mpq_class opt = 0;
    for (size_t i = 0; i < m; i++) {
        if (basis[i] >= n) {
            opt += xb[i];
        }
    }
    return opt;
}

/// Exact L1 distance-like infeasibility of A against products of R-scaled
/// cube vertices, with all doubles converted exactly.
inline mpq_class exact_cube_infeasibility(const gencube::PauliCoeffs2Q &A, double R) {
    mpq_class Rq(R);
    std::vector<std::vector<mpq_class>> M(16, std::vector<mpq_class>(64));
    std::vector<mpq_class> b(16);
    for (int p = 0; p < 4; p++) {
        for (int q = 0; q < 4; q++) {
            b[4 * p + q] = mpq_class(A.a[p][q]);
            for (int u = 0; u < 8; u++) {
                for (int v = 0; v < 8; v++) {
                    mpq_class su = p == 0 ? mpq_class(1) : ((u >> (3 - p)) & 1 ? -Rq : Rq);
                    mpq_class sv = q == 0 ? mpq_class(1) : ((v >> (3 - q)) & 1 ? -Rq : Rq);
                    M[4 * p + q][8 * u + v] = su * sv;
                }
            }
        }
    }
    return exact_phase1_optimum(M, b);
}

}  // namespace gencube_test

#endif
