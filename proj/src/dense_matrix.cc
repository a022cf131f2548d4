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

#include "gencube/dense_matrix.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gencube {

DenseMatrix::DenseMatrix(size_t dim) : dim_(dim), data_(dim * dim) {
}

DenseMatrix::DenseMatrix(size_t dim, std::vector<Complex> data) : dim_(dim), data_(std::move(data)) {
    if (data_.size() != dim * dim) {
        throw std::invalid_argument("DenseMatrix data size does not match dimension");
    }
}

DenseMatrix DenseMatrix::identity(size_t dim) {
    DenseMatrix r(dim);
    for (size_t k = 0; k < dim; k++) {
        r(k, k) = 1;
    }
    return r;
}

static void require_same_dim(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix &other) const {
    DenseMatrix r = *this;
    r += other;
    return r;
}

DenseMatrix &DenseMatrix::operator+=(const DenseMatrix &other) {
    require_same_dim(*this, other);
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix &other) const {
    require_same_dim(*this, other);
    DenseMatrix r = *this;
    for (size_t k = 0; k < data_.size(); k++) {
        r.data_[k] -= other.data_[k];
    }
    return r;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &other) const {
    require_same_dim(*this, other);
    DenseMatrix r(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t k = 0; k < dim_; k++) {
            Complex a = (*this)(i, k);
            if (a == Complex{0, 0}) {
                continue;
            }
            for (size_t j = 0; j < dim_; j++) {
                r(i, j) += a * other(k, j);
            }
        }
    }
    return r;
}

DenseMatrix DenseMatrix::operator*(Complex scale) const {
    DenseMatrix r = *this;
    for (auto &e : r.data_) {
        e *= scale;
    }
    return r;
}

DenseMatrix DenseMatrix::dagger() const {
    DenseMatrix r(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix r(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            r(j, i) = (*this)(i, j);
        }
    }
    return r;
}

Complex DenseMatrix::trace() const {
    Complex t = 0;
    for (size_t k = 0; k < dim_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

double DenseMatrix::max_abs_diff(const DenseMatrix &other) const {
    require_same_dim(*this, other);
    double m = 0;
    for (size_t k = 0; k < data_.size(); k++) {
        m = std::max(m, std::abs(data_[k] - other.data_[k]));
    }
    return m;
}

bool DenseMatrix::is_hermitian(double tol) const {
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = i; j < dim_; j++) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

std::string DenseMatrix::str() const {
    std::stringstream ss;
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            ss << (j ? " " : "") << (*this)(i, j);
        }
        ss << "\n";
    }
    return ss.str();
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    size_t n = a.dim() * b.dim();
    DenseMatrix r(n);
    for (size_t i1 = 0; i1 < a.dim(); i1++) {
        for (size_t j1 = 0; j1 < a.dim(); j1++) {
            Complex f = a(i1, j1);
            for (size_t i2 = 0; i2 < b.dim(); i2++) {
                for (size_t j2 = 0; j2 < b.dim(); j2++) {
                    r(i1 * b.dim() + i2, j1 * b.dim() + j2) = f * b(i2, j2);
                }
            }
        }
    }
    return r;
}

DenseMatrix ket_projector(std::span<const Complex> ket) {
    DenseMatrix r(ket.size());
    for (size_t i = 0; i < ket.size(); i++) {
        for (size_t j = 0; j < ket.size(); j++) {
            r(i, j) = ket[i] * std::conj(ket[j]);
        }
    }
    return r;
}

std::vector<Complex> kron_ket(std::span<const Complex> a, std::span<const Complex> b) {
    std::vector<Complex> r;
    r.reserve(a.size() * b.size());
    for (auto x : a) {
        for (auto y : b) {
            r.push_back(x * y);
        }
    }
    return r;
}

static void check_register(const DenseMatrix &m, size_t num_qubits, std::span<const size_t> qubits) {
    if (num_qubits >= 31 || m.dim() != (size_t{1} << num_qubits)) {
        throw std::invalid_argument("matrix dimension does not match qubit count");
    }
    for (auto q : qubits) {
        if (q >= num_qubits) {
            throw std::invalid_argument("qubit index out of range");
        }
    }
}

static size_t qubit_mask(size_t num_qubits, std::span<const size_t> qubits) {
    size_t mask = 0;
    for (auto q : qubits) {
        mask |= size_t{1} << (num_qubits - 1 - q);
    }
    return mask;
}

DenseMatrix partial_transpose_qubits(const DenseMatrix &m, size_t num_qubits, std::span<const size_t> qubits) {
    check_register(m, num_qubits, qubits);
    size_t mask = qubit_mask(num_qubits, qubits);
    DenseMatrix r(m.dim());
    for (size_t i = 0; i < m.dim(); i++) {
        for (size_t j = 0; j < m.dim(); j++) {
            size_t i2 = (i & ~mask) | (j & mask);
            size_t j2 = (j & ~mask) | (i & mask);
            r(i2, j2) = m(i, j);
        }
    }
    return r;
}

DenseMatrix partial_trace_qubits(const DenseMatrix &m, size_t num_qubits, std::span<const size_t> traced) {
    check_register(m, num_qubits, traced);
    size_t mask = qubit_mask(num_qubits, traced);
    std::vector<size_t> kept_bits;
    for (size_t b = num_qubits; b-- > 0;) {
        if (!(mask & (size_t{1} << b))) {
            kept_bits.push_back(b);
        }
    }
    auto compress = [&](size_t x) {
        size_t r = 0;
        for (auto b : kept_bits) {
            r = (r << 1) | ((x >> b) & 1);
        }
        return r;
    };
    DenseMatrix r(size_t{1} << kept_bits.size());
    for (size_t i = 0; i < m.dim(); i++) {
        for (size_t j = 0; j < m.dim(); j++) {
            if ((i & mask) == (j & mask)) {
                r(compress(i), compress(j)) += m(i, j);
            }
        }
    }
    return r;
}

std::vector<double> eigenvalues_hermitian(const DenseMatrix &m) {
    if (!m.is_hermitian(1e-9)) {
        throw std::invalid_argument("eigenvalues_hermitian requires a Hermitian matrix");
    }
    size_t n = m.dim();
    size_t N = 2 * n;
    std::vector<double> a(N * N);
    auto at = [&](size_t r, size_t c) -> double & {
        return a[r * N + c];
    };
    double frob = 0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            double re = m(i, j).real();
            double im = m(i, j).imag();
            at(i, j) = re;
            at(i + n, j + n) = re;
            at(i, j + n) = -im;
            at(i + n, j) = im;
            frob += 2 * (re * re + im * im);
        }
    }
    double threshold = 1e-13 * std::max(1.0, std::sqrt(frob));

    for (int sweep = 0; sweep < 100; sweep++) {
        double off = 0;
        for (size_t p = 0; p < N; p++) {
            for (size_t q = 0; q < N; q++) {
                if (p != q) {
                    off += at(p, q) * at(p, q);
                }
            }
        }
        if (std::sqrt(off) < threshold) {
            break;
        }
        for (size_t p = 0; p + 1 < N; p++) {
            for (size_t q = p + 1; q < N; q++) {
                double apq = at(p, q);
                if (std::abs(apq) < 1e-300) {
                    continue;
                }
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (size_t k = 0; k < N; k++) {
                    double akp = at(k, p);
                    double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (size_t k = 0; k < N; k++) {
                    double apk = at(p, k);
                    double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                at(p, q) = 0;
                at(q, p) = 0;
            }
        }
    }

    std::vector<double> doubled(N);
    for (size_t k = 0; k < N; k++) {
        doubled[k] = at(k, k);
    }
    std::sort(doubled.begin(), doubled.end());
    std::vector<double> result(n);
    for (size_t k = 0; k < n; k++) {
        result[k] = 0.5 * (doubled[2 * k] + doubled[2 * k + 1]);
    }
    return result;
}

double min_eigenvalue(const DenseMatrix &m) {
    return eigenvalues_hermitian(m).front();
}

}  // namespace gencube
