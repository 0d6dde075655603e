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

#include "collapse/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "collapse/errors.hpp"

namespace collapse {

namespace {

void check_dim(int dim) {
  if (dim < ComplexMatrix::kMinDim || dim > ComplexMatrix::kMaxDim) {
    throw DimensionError("matrix dimension " + std::to_string(dim) +
                         " outside supported range 2..8");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), entries_(dim * dim) {
  check_dim(dim);
}

ComplexMatrix::ComplexMatrix(int dim, CVec entries)
    : dim_(dim), entries_(std::move(entries)) {
  check_dim(dim);
  if (entries_.size() != static_cast<size_t>(dim) * dim) {
    throw DimensionError("entry count does not match dim*dim");
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(const CVec& u, const CVec& v) {
  if (u.size() != v.size()) throw DimensionError("outer: length mismatch");
  const int d = static_cast<int>(u.size());
  ComplexMatrix m(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const int d = static_cast<int>(rows.size());
  ComplexMatrix m(d);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != d) {
      throw DimensionError("from_rows: ragged row");
    }
    int c = 0;
    for (const auto& e : row) m(r, c++) = e;
    ++r;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(c, r));
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) throw DimensionError("matrix addition: dim mismatch");
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (dim_ != rhs.dim_) throw DimensionError("matrix subtraction: dim mismatch");
  for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

bool ComplexMatrix::is_hermitian(double eps) const {
  for (int r = 0; r < dim_; ++r)
    for (int c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > eps) return false;
  return true;
}

bool ComplexMatrix::is_unitary(double eps) const {
  return max_abs_diff(adjoint() * (*this), identity(dim_)) <= eps;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) throw DimensionError("matrix product: dim mismatch");
  const int d = lhs.dim();
  ComplexMatrix out(d);
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k) {
      const Complex l = lhs(r, k);
      if (l == Complex{}) continue;
      for (int c = 0; c < d; ++c) out(r, c) += l * rhs(k, c);
    }
  return out;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) m(r, c) *= scalar;
  return m;
}

CVec operator*(const ComplexMatrix& m, const CVec& v) {
  if (v.size() != static_cast<size_t>(m.dim())) {
    throw DimensionError("matrix-vector product: dim mismatch");
  }
  CVec out(m.dim());
  for (int r = 0; r < m.dim(); ++r) {
    Complex s = 0.0;
    for (int c = 0; c < m.dim(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("max_abs_diff: dim mismatch");
  double m = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

Complex inner(const CVec& u, const CVec& v) {
  if (u.size() != v.size()) throw DimensionError("inner: length mismatch");
  Complex s = 0.0;
  for (size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(const CVec& v) {
  double s = 0.0;
  for (const auto& e : v) s += std::norm(e);
  return std::sqrt(s);
}

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

EigenSystem eigen_hermitian(const ComplexMatrix& m) {
  if (!m.is_hermitian()) {
    throw ValidationError("eigen_hermitian: input is not Hermitian");
  }
  const int d = m.dim();

  // Work on the exactly Hermitian part so rounding in the caller cannot
  // drift the iteration.
  ComplexMatrix a(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  ComplexMatrix v = ComplexMatrix::identity(d);

  constexpr double kOffTol = 1e-13;
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (offdiag_norm(a) > kOffTol) {
    if (++sweep > kMaxSweeps) {
      throw Error("eigen_hermitian: Jacobi iteration failed to converge");
    }
    for (int p = 0; p < d - 1; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const Complex g = a(p, q);
        const double r = std::abs(g);
        if (r < 1e-300) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        // Unitary J differing from identity in the (p,q) block:
        //   J_pp = c, J_pq = s e^{i phi}, J_qp = -s e^{-i phi}, J_qq = c
        // with phi = arg a_pq, chosen so (J^dagger A J)_pq = 0.
        const Complex phase = g / r;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- J^dagger A J
        for (int k = 0; k < d; ++k) {  // column update A J
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * phase * akp + c * akq;
        }
        for (int k = 0; k < d; ++k) {  // row update J^dagger A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
        a(p, q) = std::conj(a(q, p));  // keep exactly Hermitian
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);

        for (int k = 0; k < d; ++k) {  // accumulate V <- V J
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(phase) * vkq;
          v(k, q) = s * phase * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out{std::vector<double>(d), ComplexMatrix(d)};
  for (int c = 0; c < d; ++c) {
    out.values[c] = a(order[c], order[c]).real();
    for (int r = 0; r < d; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

ComplexMatrix operator_sqrt(const ComplexMatrix& m) {
  EigenSystem eig = eigen_hermitian(m);
  const int d = m.dim();
  ComplexMatrix out(d);
  for (int k = 0; k < d; ++k) {
    double lambda = eig.values[k];
    if (lambda < -tol::eig_clamp) {
      throw ValidationError("operator_sqrt: eigenvalue " +
                            std::to_string(lambda) + " below -1e-9");
    }
    lambda = std::max(lambda, 0.0);
    const double root = std::sqrt(lambda);
    if (root == 0.0) continue;
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        out(r, c) += root * eig.vectors(r, k) * std::conj(eig.vectors(c, k));
  }
  return out;
}

}  // namespace collapse
