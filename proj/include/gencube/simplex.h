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

#ifndef _GENCUBE_SIMPLEX_H
#define _GENCUBE_SIMPLEX_H

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gencube {

template <typename Scalar>
struct Phase1Result {
    /// Minimum total artificial slack. Zero iff M x = b, x >= 0 is feasible.
    Scalar infeasibility;
    std::vector<Scalar> x;
    /// Dual row prices in the caller's row signs. When infeasible, -y is a
    /// Farkas certificate: (-y).M_k >= 0 for every column and (-y).b < 0.
    std::vector<Scalar> y;
    size_t pivots = 0;
};

/// Phase-one dense tableau simplex with Bland's rule.
///
/// `eps` is the pivot and reduced-cost tolerance; pass zero for exact scalars.
template <typename Scalar>
Phase1Result<Scalar> solve_phase1(
    const std::vector<std::vector<Scalar>> &M, const std::vector<Scalar> &b, const Scalar &eps, size_t max_pivots = 100000) {
    size_t m = M.size();
    if (m == 0 || b.size() != m) {
        throw std::invalid_argument("solve_phase1: row count mismatch");
    }
    size_t n = M.front().size();
    size_t width = n + m + 1;
    size_t rhs = n + m;

    std::vector<int> flip(m, 1);
    std::vector<std::vector<Scalar>> T(m, std::vector<Scalar>(width, Scalar(0)));
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; i++) {
        if (M[i].size() != n) {
            throw std::invalid_argument("solve_phase1: ragged matrix");
        }
        if (b[i] < Scalar(0)) {
            flip[i] = -1;
        }
        for (size_t j = 0; j < n; j++) {
            T[i][j] = flip[i] < 0 ? Scalar(-M[i][j]) : M[i][j];
        }
        T[i][n + i] = Scalar(1);
        T[i][rhs] = flip[i] < 0 ? Scalar(-b[i]) : b[i];
        basis[i] = n + i;
    }
    std::vector<Scalar> z(width, Scalar(0));
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < n; j++) {
            z[j] -= T[i][j];
        }
        z[rhs] -= T[i][rhs];
    }

    Phase1Result<Scalar> result;
    while (true) {
        size_t enter = width;
        for (size_t j = 0; j < rhs; j++) {
            if (z[j] < Scalar(-eps)) {
                enter = j;
                break;
            }
        }
        if (enter == width) {
            break;
        }
        size_t leave = m;
        Scalar best_ratio(0);
        for (size_t i = 0; i < m; i++) {
            if (!(T[i][enter] > eps)) {
                continue;
            }
            Scalar ratio = T[i][rhs] / T[i][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) {
            throw std::runtime_error("solve_phase1: unbounded direction in a bounded problem");
        }
        if (++result.pivots > max_pivots) {
            throw std::runtime_error("solve_phase1: pivot limit exceeded");
        }

        Scalar pivot = T[leave][enter];
        for (auto &e : T[leave]) {
            e /= pivot;
        }
        for (size_t i = 0; i < m; i++) {
            if (i == leave || T[i][enter] == Scalar(0)) {
                continue;
            }
            Scalar f = T[i][enter];
            for (size_t j = 0; j < width; j++) {
                T[i][j] -= f * T[leave][j];
            }
        }
        Scalar f = z[enter];
        for (size_t j = 0; j < width; j++) {
            z[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    result.infeasibility = -z[rhs];
    result.x.assign(n, Scalar(0));
    for (size_t i = 0; i < m; i++) {
        if (basis[i] < n) {
            result.x[basis[i]] = T[i][rhs];
        }
    }
    result.y.resize(m);
    for (size_t i = 0; i < m; i++) {
        Scalar yi = Scalar(1) - z[n + i];
        result.y[i] = flip[i] < 0 ? Scalar(-yi) : yi;
    }
    return result;
}

}  // namespace gencube

#endif
