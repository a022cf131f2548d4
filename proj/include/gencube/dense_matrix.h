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

#ifndef _GENCUBE_DENSE_MATRIX_H
#define _GENCUBE_DENSE_MATRIX_H

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gencube {

using Complex = std::complex<double>;

/// Square complex matrix stored row-major.
///
/// Qubit registers use the convention that qubit 0 is the most significant
/// tensor factor.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    explicit DenseMatrix(size_t dim);
    DenseMatrix(size_t dim, std::vector<Complex> data);
    static DenseMatrix identity(size_t dim);

    size_t dim() const {
        return dim_;
    }
    Complex &operator()(size_t r, size_t c) {
        return data_[r * dim_ + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return data_[r * dim_ + c];
    }
    const std::vector<Complex> &data() const {
        return data_;
    }

    DenseMatrix operator+(const DenseMatrix &other) const;
    DenseMatrix operator-(const DenseMatrix &other) const;
    DenseMatrix operator*(const DenseMatrix &other) const;
    DenseMatrix operator*(Complex scale) const;
    DenseMatrix &operator+=(const DenseMatrix &other);

    DenseMatrix dagger() const;
    DenseMatrix transpose() const;
    Complex trace() const;
    double max_abs_diff(const DenseMatrix &other) const;
    bool is_hermitian(double tol) const;
    std::string str() const;

   private:
    size_t dim_ = 0;
    std::vector<Complex> data_;
};

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix ket_projector(std::span<const Complex> ket);
std::vector<Complex> kron_ket(std::span<const Complex> a, std::span<const Complex> b);

/// Transposes the listed qubits of a matrix acting on `num_qubits` qubits.
DenseMatrix partial_transpose_qubits(const DenseMatrix &m, size_t num_qubits, std::span<const size_t> qubits);

/// Traces out the listed qubits. The remaining qubits keep their relative order.
DenseMatrix partial_trace_qubits(const DenseMatrix &m, size_t num_qubits, std::span<const size_t> traced);

/// Eigenvalues of a Hermitian matrix in ascending order.
///
/// Uses cyclic Jacobi rotations on the real symmetric embedding
/// [[Re, -Im], [Im, Re]], whose spectrum is the original spectrum doubled.
/// Throws std::invalid_argument if the matrix is not Hermitian.
std::vector<double> eigenvalues_hermitian(const DenseMatrix &m);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const DenseMatrix &m);

}  // namespace gencube

#endif
