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

#include <cstdint>
#include <string>
#include <vector>

#include "collapse/quantum.hpp"

namespace collapse::oracle {

// Convex decomposition of a state into weighted pure states.
struct Decomposition {
  Distribution weights;
  std::vector<CVec> states;
};

// Direction of the approximation error of a budgeted search result.
enum class Bias { Exact, LowerBound, UpperEstimate };

struct OracleEstimate {
  double value;
  Bias bias;
};

// Haar pure state for rank 1; Haar basis mixed with uniform-simplex
// weights for higher ranks. Deterministic in the seed.
DensityMatrix random_state(int dim, int rank, std::uint64_t seed);

// RankOneProjective: Haar unitary columns. Projective: random orthogonal
// subspace split into `outcomes` groups. GeneralPovm: Gram-normalized
// random positive effects.
Measurement random_measurement(int dim, int outcomes, MeasurementKind kind,
                               std::uint64_t seed);

// Decompositions via the unitary-mixing construction: every isometry V
// applied to the weighted eigenvectors of rho yields one. Includes the
// eigendecomposition itself, Haar-random isometries with up to rank+2
// components, and, for qubit rank-2 states, a deterministic grid of 2x2
// mixing rotations so the canonical basis decompositions are always hit.
std::vector<Decomposition> decompositions_of(const DensityMatrix& rho,
                                             int budget, std::uint64_t seed);

// max over sampled decompositions of sum_n r_n max_i p(i|A; phi_n).
// Exact for pure states; a lower bound converging from below otherwise.
double guessing_probability(const DensityMatrix& rho, const Measurement& a,
                            int budget, std::uint64_t seed);

// -log2 of the guessing probability; an upper estimate for mixed states.
OracleEstimate hmin_classical(const DensityMatrix& rho, const Measurement& a,
                              int budget, std::uint64_t seed);

// min over sampled decompositions of sum_n r_n H(p_{phi_n}); an upper
// estimate of the asymptotic rate, converging from above. Projective
// generating measurements only.
OracleEstimate hmin_asy_classical(const DensityMatrix& rho, const Measurement& a,
                                  int budget, std::uint64_t seed);

// Numerical verification of the four uncertainty-disturbance chains on
// random instances. Violations beyond 1e-9 are counted, not thrown.
struct ChainReport {
  std::string name;
  int instances = 0;
  int violations = 0;
  double max_violation = 0.0;  // worst (rhs - lhs) observed, <= 0 when clean
  double min_slack = 0.0;      // tightest margin observed across all links
};

struct LemmaReport {
  std::vector<ChainReport> chains;
  bool all_clean() const;
};

// chains: (i) POVM under the minimal update, (ii) projective, (iii)
// qubit von Neumann pairs with the overlap factor, (iv) the entropic
// chain H(p) >= S(rho||Delta rho) >= KL(q||q').
LemmaReport verify_lemma_chains(int instances, const std::vector<int>& dims,
                                std::uint64_t seed);

// Ordering of the asymptotic bounds on random qubit von Neumann
// instances: 4 tau^2 >= KL(q||q') and KL(q||q') >= -log2 c - H_1/2(q).
LemmaReport verify_bound_orderings(int instances, std::uint64_t seed);

// Shows why the minimal-update assumption matters: a branch-rotating
// realization can push the observed disturbance beyond the uncertainty
// bound that holds under the minimal update.
struct RealizationDemoReport {
  // Fixed example: sigma_z with the collapsed |1> branch rotated to |0>,
  // measured on the |1> eigenstate.
  double fixed_case_disturbance;   // observed D_{A->B}
  double fixed_case_bound_bits;    // bound naively computed from it
  double fixed_case_true_hmin;     // exact H_min of the eigenstate
  bool fixed_case_sound;           // bound <= true value
  // Searched instance where the realized disturbance exceeds the
  // POVM-chain uncertainty, which the minimal update forbids.
  bool violation_found;
  double violation_delta;          // uncertainty delta_{A;rho}
  double violation_disturbance;    // realized D_{A->B}
  CVec violation_state;            // the state achieving it
  std::string summary;
};

RealizationDemoReport adversarial_realization_demo(std::uint64_t seed);

}  // namespace collapse::oracle
