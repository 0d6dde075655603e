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

#include <optional>
#include <vector>

#include "collapse/matrix.hpp"

namespace collapse {

// Probability vector over measurement outcomes. Entries in [-1e-12, 0)
// are clamped to zero on construction; the total must be 1 within 1e-9.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs);

  const std::vector<double>& probs() const { return probs_; }
  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[i]; }

 private:
  std::vector<double> probs_;
};

// Hermitian, positive semidefinite, unit-trace operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix op);

  // |psi><psi| for a state vector (normalized here).
  static DensityMatrix pure(const CVec& psi);
  static DensityMatrix maximally_mixed(int dim);
  // Qubit state (I + x sx + y sy + z sz)/2; requires |(x,y,z)| <= 1.
  static DensityMatrix from_bloch(double x, double y, double z);

  const ComplexMatrix& op() const { return op_; }
  int dim() const { return op_.dim(); }

 private:
  ComplexMatrix op_;
};

enum class MeasurementKind { GeneralPovm, Projective, RankOneProjective };

// Ordered POVM. Projective measurements must have idempotent, mutually
// orthogonal effects; rank-one projective measurements additionally carry
// the basis vectors their effects project onto.
class Measurement {
 public:
  static Measurement povm(std::vector<ComplexMatrix> effects);
  static Measurement projective(std::vector<ComplexMatrix> effects);
  static Measurement from_basis(std::vector<CVec> basis);

  static Measurement sigma_z();
  static Measurement sigma_x();
  static Measurement sigma_y();
  // Qubit basis {cos(t/2)|0> + sin(t/2)|1>, -sin(t/2)|0> + cos(t/2)|1>};
  // its overlap with the sigma_z basis is c00 = cos^2(t/2).
  static Measurement rotated_qubit_basis(double theta);

  int dim() const { return effects_.front().dim(); }
  int outcomes() const { return static_cast<int>(effects_.size()); }
  const std::vector<ComplexMatrix>& effects() const { return effects_; }
  MeasurementKind kind() const { return kind_; }
  const std::vector<CVec>& basis() const;  // rank-one projective only

 private:
  Measurement(std::vector<ComplexMatrix> effects, MeasurementKind kind,
              std::optional<std::vector<CVec>> basis);
  void validate() const;

  std::vector<ComplexMatrix> effects_;
  MeasurementKind kind_;
  std::optional<std::vector<CVec>> basis_;
};

// p_i = tr(rho M_i).
Distribution outcome_distribution(const Measurement& m, const DensityMatrix& rho);

// Minimally disturbing state update rho -> sum_i sqrt(M_i) rho sqrt(M_i).
DensityMatrix lueders_channel(const Measurement& m, const DensityMatrix& rho);

// General instrument rho -> sum_i U_i sqrt(M_i) rho sqrt(M_i) U_i^dagger;
// one unitary per effect. All-identity unitaries reduce to the channel above.
DensityMatrix realized_instrument(const Measurement& m,
                                  const std::vector<ComplexMatrix>& unitaries,
                                  const DensityMatrix& rho);

// Remove off-diagonal terms of rho in a rank-one projective basis.
DensityMatrix dephase(const Measurement& basis, const DensityMatrix& rho);

// (1/2) tr |a - b|.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// (1/2) sum_j |q_j - q2_j|.
double tv_distance(const Distribution& q, const Distribution& q2);

// -sum p_i log2 p_i, with 0 log 0 = 0. Bits.
double shannon_entropy(const Distribution& p);

// sqrt(1 - sum p_i^2); zero exactly when one outcome is certain.
double collision_uncertainty(const Distribution& p);

// Collision (Renyi-2) entropy -log2 sum p_i^2 in bits.
double collision_entropy(const Distribution& p);

// 2 log2 sum_j sqrt(q_j). Bits.
double renyi_half_entropy(const Distribution& q);

// sum_j q_j log2(q_j / q2_j); +infinity when q has support where q2 has
// none, 0-probability terms contribute nothing.
double kl_divergence(const Distribution& q, const Distribution& q2);

// S(rho || Delta(rho)) in bits, Delta the dephasing in the given basis.
double relative_entropy_to_dephased(const DensityMatrix& rho,
                                    const Measurement& basis);

// Squared overlaps c_ij = |<a_i|b_j>|^2; doubly stochastic.
using OverlapMatrix = std::vector<std::vector<double>>;
OverlapMatrix overlap_matrix(const Measurement& a, const Measurement& b);

// delta_{A:B} = sum_j sqrt(1 - sum_i c_ij^2). sqrt(2) for mutually
// unbiased qubit bases, 0 for identical ones.
double overlap_factor(const OverlapMatrix& c);

// Largest entry of an overlap matrix (the incompatibility parameter c).
double max_overlap(const OverlapMatrix& c);

}  // namespace collapse
