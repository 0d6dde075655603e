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

#include "collapse/quantum.hpp"

namespace collapse {

// What is assumed about the measurement devices. Trusted von Neumann
// pairs carry the squared-overlap matrix of the two bases and are
// restricted to qubits, where the underlying relation is known to be
// optimal.
class TrustLevel {
 public:
  enum class Kind { UntrustedPovm, ProjectiveUncharacterized, TrustedVonNeumann };

  static TrustLevel untrusted_povm();
  static TrustLevel projective_uncharacterized();
  static TrustLevel trusted_von_neumann(OverlapMatrix overlaps);

  Kind kind() const { return kind_; }
  const OverlapMatrix& overlaps() const;

 private:
  TrustLevel(Kind kind, std::optional<OverlapMatrix> overlaps);
  Kind kind_;
  std::optional<OverlapMatrix> overlaps_;
};

// Declared worst-case deviations of the real devices from their models.
struct NoiseParams {
  double epsilon_a = 0.0;
  double epsilon_b = 0.0;

  NoiseParams(double eps_a = 0.0, double eps_b = 0.0);
};

enum class Theorem { T1, T2, T3, T4, T5, UncertaintyBaseline };

// A certified randomness lower bound in bits with its provenance.
struct CertBound {
  double bits;
  Theorem theorem;
  double disturbance_used;
  std::optional<double> tau;
  bool adjusted;  // noise subtraction was applied
};

// Noise-robust disturbance: d_re - eps_a for POVM/projective levels,
// d_re - eps_a - 2 eps_b for trusted von Neumann pairs, clamped at 0.
double adjust_disturbance(double d_re, const NoiseParams& noise,
                          const TrustLevel& level);

// -log2(1/2 + 1/2 sqrt(1 - 2 d^2)); any binary POVM obeying the minimal
// state-update rule. Domain d in [0, sqrt(2)/2].
CertBound bound_theorem1(double d);

// -log2(1/2 + 1/2 sqrt(1 - 4 d^2)); binary projective generating
// measurement. Domain d in [0, 1/2].
CertBound bound_theorem2(double d);

// tau = sqrt(2) d / delta_ab. Zero disturbance with zero overlap factor
// is 0; positive disturbance between identical bases is inconsistent.
double modified_disturbance(double d, double delta_ab);

// -log2(1/2 + 1/2 sqrt(1 - 4 tau^2)); trusted qubit von Neumann pair.
CertBound bound_theorem3(double tau);

// Asymptotic rate KL(q||q'), capped at log2 of A's outcome count.
CertBound bound_theorem4(const Distribution& q, const Distribution& q_prime,
                         int a_outcomes);

// Asymptotic rate 4 tau^2 for trusted qubit von Neumann pairs.
CertBound bound_theorem5(double tau);

// Preparation-uncertainty baseline max(0, -log2(c_max) - H_1/2(q)).
CertBound bound_uncertainty_baseline(double c_max, const Distribution& q);

// Measured inputs to certification; build from EmpiricalStats or from
// analytic statistics. a_outcomes is the generating measurement's
// outcome count (Theorems 1-3 and 5 require it to be 2).
struct DisturbanceData {
  Distribution q;
  Distribution q_prime;
  double d;
  int a_outcomes;
};

// Every bound applicable at the given trust level, each on its own
// noise-adjusted disturbance (T1/T2 subtract eps_a; T3/T5 additionally
// subtract 2 eps_b; T4 and the baseline use the raw distributions).
std::vector<CertBound> certify(const DisturbanceData& data,
                               const TrustLevel& level,
                               const NoiseParams& noise,
                               const std::optional<Distribution>& p = std::nullopt);

// Largest of a list of bounds.
const CertBound& best_bound(const std::vector<CertBound>& bounds);

// One row of the theorem-comparison sweep; bounds outside their analytic
// domain are absent.
struct Fig2Row {
  double d;
  std::optional<double> t1_bits;
  std::optional<double> t2_bits;
  std::optional<double> t3_bits;
};

// Bounds of Theorems 1-3 as functions of disturbance for a binary qubit
// pair with basis overlap c00 in (1/2, 1).
std::vector<Fig2Row> sweep_figure2(double c00, const std::vector<double>& d_grid);

// One row of the baseline-comparison sweep: the asymptotic KL bound
// extremized over all qubit states compatible with the B statistics q,
// next to the uncertainty-relation baseline for the same q.
struct Fig3Row {
  double q0;
  double baseline_bits;
  double kl_min_bits;
  double kl_max_bits;
};

std::vector<Fig3Row> sweep_figure3(double c,
                                   const std::vector<Distribution>& q_grid,
                                   int search_budget);

}  // namespace collapse
