// Copyright 2026 The Collapse Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace collapse {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

// Tolerances used across the library. Invariant checks use `validate`;
// contracts on computed results use `contract`. Eigenvalues in
// [-eig_clamp, 0] are clamped to zero before sqrt/log; magnitudes below
// `zero_eig` are treated as exact zeros in entropic formulas.
namespace tol {
inline constexpr double validate = 1e-9;
inline constexpr double contract = 1e-8;
inline constexpr double eig_clamp = 1e-9;
inline constexpr double zero_eig = 1e-12;
}  // namespace tol

// Dense complex square matrix, row-major, dimensions 2..8.
class ComplexMatrix {
 public:
  static constexpr int kMinDim = 2;
  static constexpr int kMaxDim = 8;

  explicit ComplexMatrix(int dim);  // zero-filled
  ComplexMatrix(int dim, CVec entries);

  static ComplexMatrix identity(int dim);
  // |u><v| for vectors of equal length.
  static ComplexMatrix outer(const CVec& u, const CVec& v);
  // Row-by-row construction, convenient for presets and tests.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  int dim() const { return dim_; }
  Complex& operator()(int r, int c) { return entries_[r * dim_ + c]; }
  const Complex& operator()(int r, int c) const { return entries_[r * dim_ + c]; }
  const CVec& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;          // largest entry magnitude
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);

  bool is_hermitian(double eps = tol::validate) const;
  bool is_unitary(double eps = tol::validate) const;

 private:
  int dim_;
  CVec entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
CVec operator*(const ComplexMatrix& m, const CVec& v);

// Largest entry magnitude of (a - b).
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

Complex inner(const CVec& u, const CVec& v);  // <u|v>
double norm(const CVec& v);

// Eigendecomposition of a Hermitian matrix: m = vectors * diag(values) *
// vectors^dagger, eigenvalues ascending, columns of `vectors` orthonormal.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

// Cyclic Jacobi diagonalization. The input must be Hermitian within
// tol::validate; iteration stops once the Frobenius norm of the
// off-diagonal part falls below 1e-13.
EigenSystem eigen_hermitian(const ComplexMatrix& m);

// Principal square root of a Hermitian PSD matrix via eigendecomposition.
// Eigenvalues in [-tol::eig_clamp, 0] are clamped to zero; smaller ones
// are rejected as a validation error.
ComplexMatrix operator_sqrt(const ComplexMatrix& m);

}  // namespace collapse
