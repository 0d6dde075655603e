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

#include "collapse/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "collapse/errors.hpp"

namespace collapse {

namespace {

double real_trace_product(const DensityMatrix& rho, const ComplexMatrix& e) {
  // tr(rho E) for Hermitian E; the imaginary part is rounding noise.
  Complex t = 0.0;
  const ComplexMatrix& r = rho.op();
  for (int i = 0; i < r.dim(); ++i)
    for (int k = 0; k < r.dim(); ++k) t += r(i, k) * e(k, i);
  return t.real();
}

}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("distribution: empty");
  double sum = 0.0;
  for (auto& p : probs_) {
    if (p < -tol::zero_eig) {
      throw ValidationError("distribution: negative probability " +
                            std::to_string(p));
    }
    if (p < 0.0) p = 0.0;
    if (p > 1.0 + tol::validate) {
      throw ValidationError("distribution: probability above one");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::validate) {
    throw ValidationError("distribution: total " + std::to_string(sum) +
                          " not within 1e-9 of 1");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix op) : op_(std::move(op)) {
  if (!op_.is_hermitian()) {
    throw ValidationError("density matrix: not Hermitian within 1e-9");
  }
  if (std::abs(op_.trace() - Complex(1.0)) > tol::validate) {
    throw ValidationError("density matrix: trace not 1 within 1e-9");
  }
  const EigenSystem eig = eigen_hermitian(op_);
  if (eig.values.front() < -tol::eig_clamp) {
    throw ValidationError("density matrix: eigenvalue " +
                          std::to_string(eig.values.front()) + " below -1e-9");
  }
}

DensityMatrix DensityMatrix::pure(const CVec& psi) {
  const double n = norm(psi);
  if (n < tol::zero_eig) throw ValidationError("pure state: zero vector");
  CVec u = psi;
  for (auto& e : u) e /= n;
  return DensityMatrix(ComplexMatrix::outer(u, u));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0 / dim;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::from_bloch(double x, double y, double z) {
  if (x * x + y * y + z * z > 1.0 + tol::validate) {
    throw ValidationError("bloch vector outside the unit ball");
  }
  ComplexMatrix m = ComplexMatrix::from_rows(
      {{0.5 * (1.0 + z), 0.5 * Complex(x, -y)},
       {0.5 * Complex(x, y), 0.5 * (1.0 - z)}});
  return DensityMatrix(std::move(m));
}

Measurement::Measurement(std::vector<ComplexMatrix> effects, MeasurementKind kind,
                         std::optional<std::vector<CVec>> basis)
    : effects_(std::move(effects)), kind_(kind), basis_(std::move(basis)) {
  validate();
}

Measurement Measurement::povm(std::vector<ComplexMatrix> effects) {
  return Measurement(std::move(effects), MeasurementKind::GeneralPovm,
                     std::nullopt);
}

Measurement Measurement::projective(std::vector<ComplexMatrix> effects) {
  return Measurement(std::move(effects), MeasurementKind::Projective,
                     std::nullopt);
}

Measurement Measurement::from_basis(std::vector<CVec> basis) {
  std::vector<ComplexMatrix> effects;
  effects.reserve(basis.size());
  for (auto& v : basis) {
    const double n = norm(v);
    if (std::abs(n - 1.0) > tol::validate) {
      throw ValidationError("basis vector is not unit length");
    }
    effects.push_back(ComplexMatrix::outer(v, v));
  }
  return Measurement(std::move(effects), MeasurementKind::RankOneProjective,
                     std::move(basis));
}

Measurement Measurement::sigma_z() {
  return from_basis({{1.0, 0.0}, {0.0, 1.0}});
}

Measurement Measurement::sigma_x() {
  const double s = std::sqrt(0.5);
  return from_basis({{s, s}, {s, -s}});
}

Measurement Measurement::sigma_y() {
  const double s = std::sqrt(0.5);
  return from_basis({{s, Complex(0.0, 1.0) * s}, {s, Complex(0.0, -1.0) * s}});
}

Measurement Measurement::rotated_qubit_basis(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return from_basis({{c, s}, {-s, c}});
}

const std::vector<CVec>& Measurement::basis() const {
  if (!basis_) {
    throw UnsupportedError("measurement has no basis (not rank-one projective)");
  }
  return *basis_;
}

void Measurement::validate() const {
  if (effects_.empty()) throw ValidationError("measurement: no effects");
  const int d = effects_.front().dim();
  ComplexMatrix sum(d);
  for (const auto& e : effects_) {
    if (e.dim() != d) throw DimensionError("measurement: mixed effect dims");
    if (!e.is_hermitian()) {
      throw ValidationError("measurement: effect not Hermitian");
    }
    if (eigen_hermitian(e).values.front() < -tol::eig_clamp) {
      throw ValidationError("measurement: effect not PSD");
    }
    sum += e;
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(d)) > tol::validate) {
    throw ValidationError("measurement: effects do not sum to identity");
  }
  if (kind_ == MeasurementKind::Projective ||
      kind_ == MeasurementKind::RankOneProjective) {
    for (size_t i = 0; i < effects_.size(); ++i) {
      if (max_abs_diff(effects_[i] * effects_[i], effects_[i]) > tol::validate) {
        throw ValidationError("measurement: projective effect not idempotent");
      }
      for (size_t j = i + 1; j < effects_.size(); ++j) {
        if ((effects_[i] * effects_[j]).max_abs() > tol::validate) {
          throw ValidationError("measurement: projective effects not orthogonal");
        }
      }
    }
  }
  if (kind_ == MeasurementKind::RankOneProjective) {
    if (!basis_ || basis_->size() != effects_.size()) {
      throw ValidationError("measurement: rank-one basis missing");
    }
    for (size_t i = 0; i < effects_.size(); ++i) {
      const ComplexMatrix proj = ComplexMatrix::outer((*basis_)[i], (*basis_)[i]);
      if (max_abs_diff(effects_[i], proj) > tol::validate) {
        throw ValidationError("measurement: effect does not match its basis vector");
      }
    }
  } else if (basis_) {
    throw ValidationError("measurement: basis given for non-rank-one kind");
  }
}

Distribution outcome_distribution(const Measurement& m, const DensityMatrix& rho) {
  if (m.dim() != rho.dim()) {
    throw DimensionError("outcome_distribution: dimension mismatch");
  }
  std::vector<double> p;
  p.reserve(m.outcomes());
  for (const auto& e : m.effects()) p.push_back(real_trace_product(rho, e));
  return Distribution(std::move(p));
}

DensityMatrix lueders_channel(const Measurement& m, const DensityMatrix& rho) {
  if (m.dim() != rho.dim()) {
    throw DimensionError("lueders_channel: dimension mismatch");
  }
  ComplexMatrix out(rho.dim());
  for (const auto& e : m.effects()) {
    const ComplexMatrix root = operator_sqrt(e);
    out += root * rho.op() * root;
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix realized_instrument(const Measurement& m,
                                  const std::vector<ComplexMatrix>& unitaries,
                                  const DensityMatrix& rho) {
  if (m.dim() != rho.dim()) {
    throw DimensionError("realized_instrument: dimension mismatch");
  }
  if (unitaries.size() != static_cast<size_t>(m.outcomes())) {
    throw DimensionError("realized_instrument: one unitary per effect required");
  }
  ComplexMatrix out(rho.dim());
  for (int i = 0; i < m.outcomes(); ++i) {
    const ComplexMatrix& u = unitaries[i];
    if (u.dim() != m.dim() || !u.is_unitary()) {
      throw ValidationError("realized_instrument: operator " +
                            std::to_string(i) + " is not unitary");
    }
    const ComplexMatrix root = operator_sqrt(m.effects()[i]);
    out += u * (root * rho.op() * root) * u.adjoint();
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix dephase(const Measurement& basis, const DensityMatrix& rho) {
  if (basis.kind() != MeasurementKind::RankOneProjective) {
    throw UnsupportedError("dephase: basis must be rank-one projective");
  }
  if (basis.dim() != rho.dim()) {
    throw DimensionError("dephase: dimension mismatch");
  }
  ComplexMatrix out(rho.dim());
  for (const auto& e : basis.effects()) out += e * rho.op() * e;
  return DensityMatrix(std::move(out));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("trace_distance: dimension mismatch");
  }
  const EigenSystem eig = eigen_hermitian(a.op() - b.op());
  double sum = 0.0;
  for (const double v : eig.values) sum += std::abs(v);
  return 0.5 * sum;
}

double tv_distance(const Distribution& q, const Distribution& q2) {
  if (q.size() != q2.size()) {
    throw DimensionError("tv_distance: outcome count mismatch");
  }
  double sum = 0.0;
  for (int i = 0; i < q.size(); ++i) sum += std::abs(q[i] - q2[i]);
  return 0.5 * sum;
}

double shannon_entropy(const Distribution& p) {
  double h = 0.0;
  for (const double x : p.probs())
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

double collision_uncertainty(const Distribution& p) {
  double s = 0.0;
  for (const double x : p.probs()) s += x * x;
  return std::sqrt(std::max(0.0, 1.0 - s));
}

double collision_entropy(const Distribution& p) {
  double s = 0.0;
  for (const double x : p.probs()) s += x * x;
  return -std::log2(s);
}

double renyi_half_entropy(const Distribution& q) {
  double s = 0.0;
  for (const double x : q.probs()) s += std::sqrt(x);
  return 2.0 * std::log2(s);
}

double kl_divergence(const Distribution& q, const Distribution& q2) {
  if (q.size() != q2.size()) {
    throw DimensionError("kl_divergence: outcome count mismatch");
  }
  double sum = 0.0;
  for (int i = 0; i < q.size(); ++i) {
    if (q[i] <= tol::zero_eig) continue;
    if (q2[i] <= tol::zero_eig) {
      return std::numeric_limits<double>::infinity();
    }
    sum += q[i] * std::log2(q[i] / q2[i]);
  }
  return sum;
}

double relative_entropy_to_dephased(const DensityMatrix& rho,
                                    const Measurement& basis) {
  if (basis.kind() != MeasurementKind::RankOneProjective) {
    throw UnsupportedError(
        "relative_entropy_to_dephased: basis must be rank-one projective");
  }
  if (basis.dim() != rho.dim()) {
    throw DimensionError("relative_entropy_to_dephased: dimension mismatch");
  }
  // tr rho log2 rho from the spectrum of rho; tr rho log2 Delta(rho)
  // reduces to sum_i d_i log2 d_i with d_i = <b_i|rho|b_i> because
  // Delta(rho) is diagonal in the basis and tr(rho |b_i><b_i|) = d_i.
  const EigenSystem eig = eigen_hermitian(rho.op());
  double tr_rho_log_rho = 0.0;
  for (const double v : eig.values) {
    if (v > tol::zero_eig) tr_rho_log_rho += v * std::log2(v);
  }
  double tr_rho_log_deph = 0.0;
  for (const auto& e : basis.effects()) {
    // d_i = <b_i|rho|b_i> is simultaneously the weight of rho on |b_i>
    // and the eigenvalue of Delta(rho) there, so a support mismatch
    // cannot occur; d_i <= 1e-12 contributes 0 log 0 = 0.
    const double d = real_trace_product(rho, e);
    if (d > tol::zero_eig) tr_rho_log_deph += d * std::log2(d);
  }
  return std::max(0.0, tr_rho_log_rho - tr_rho_log_deph);
}

OverlapMatrix overlap_matrix(const Measurement& a, const Measurement& b) {
  if (a.kind() != MeasurementKind::RankOneProjective ||
      b.kind() != MeasurementKind::RankOneProjective) {
    throw UnsupportedError("overlap_matrix: both measurements must be rank-one");
  }
  if (a.dim() != b.dim()) {
    throw DimensionError("overlap_matrix: dimension mismatch");
  }
  const int d = a.dim();
  OverlapMatrix c(d, std::vector<double>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      c[i][j] = std::norm(inner(a.basis()[i], b.basis()[j]));
  return c;
}

double overlap_factor(const OverlapMatrix& c) {
  double sum = 0.0;
  for (size_t j = 0; j < c.size(); ++j) {
    double col = 0.0;
    for (size_t i = 0; i < c.size(); ++i) col += c[i][j] * c[i][j];
    sum += std::sqrt(std::max(0.0, 1.0 - col));
  }
  return sum;
}

double max_overlap(const OverlapMatrix& c) {
  double m = 0.0;
  for (const auto& row : c)
    for (const double x : row) m = std::max(m, x);
  return m;
}

}  // namespace collapse
