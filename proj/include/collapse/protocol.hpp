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
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "collapse/quantum.hpp"

namespace collapse {

// How the generating measurement acts on the state. IdealLueders is the
// minimally disturbing update; RealizationUnitaries rotates each collapsed
// branch; NoisyChannel is an arbitrary trace-preserving map standing in
// for an imperfect apparatus.
struct IdealLueders {};
struct RealizationUnitaries {
  std::vector<ComplexMatrix> unitaries;
};
struct NoisyChannel {
  std::vector<ComplexMatrix> kraus;
};
using Realization = std::variant<IdealLueders, RealizationUnitaries, NoisyChannel>;

// Generating measurement with its declared realization and worst-case
// channel deviation epsilon_a = max_rho D(Lambda_re(rho), rho').
class InstrumentSpec {
 public:
  InstrumentSpec(Measurement measurement, Realization realization,
                 double epsilon_a = 0.0);

  const Measurement& measurement() const { return measurement_; }
  const Realization& realization() const { return realization_; }
  double epsilon_a() const { return epsilon_a_; }

 private:
  Measurement measurement_;
  Realization realization_;
  double epsilon_a_;
};

// Testing measurement; `real_effects`, when present, are the POVM the
// apparatus actually implements, with worst-case statistics deviation
// epsilon_b from the declared ideal effects.
class TestMeasurementSpec {
 public:
  explicit TestMeasurementSpec(
      Measurement measurement,
      std::optional<std::vector<ComplexMatrix>> real_effects = std::nullopt,
      double epsilon_b = 0.0);

  const Measurement& measurement() const { return measurement_; }
  const std::optional<std::vector<ComplexMatrix>>& real_effects() const {
    return real_effects_;
  }
  double epsilon_b() const { return epsilon_b_; }

 private:
  Measurement measurement_;
  std::optional<std::vector<ComplexMatrix>> real_effects_;
  double epsilon_b_;
};

// Full protocol description: state, instruments, particle counts, seed.
// n_u of the n trials take the upper (reference) path.
struct Scenario {
  Scenario(DensityMatrix rho, InstrumentSpec instrument_a,
           TestMeasurementSpec test_b, std::uint64_t n, std::uint64_t n_u,
           std::uint64_t seed);

  DensityMatrix rho;
  InstrumentSpec instrument_a;
  TestMeasurementSpec test_b;
  std::uint64_t n;
  std::uint64_t n_u;
  std::uint64_t seed;
};

// Finite-sample tallies of one protocol run. d_hat is the total-variation
// distance between the per-path frequency estimates; raw_outcomes_a holds
// the lower-path generating-measurement outcomes in trial order, one
// base-36 symbol each.
struct EmpiricalStats {
  std::vector<std::uint64_t> counts_q;        // upper path
  std::vector<std::uint64_t> counts_q_prime;  // lower path
  Distribution q_hat;
  Distribution q_prime_hat;
  double d_hat;
  std::string raw_outcomes_a;
};

// True randomness spent on choosing the upper-path subset.
struct SeedLedger {
  std::uint64_t t_bits;        // ceil(log2 C(n, n_u)), exact
  double per_run_cost;         // t_bits / (n - n_u)
  double asymptotic_estimate;  // sqrt(n) log2 sqrt(n), the n_u=ceil(sqrt n) rate
};

// Exact analytic counterpart of a run: q, q' and the disturbance d
// computed by matrix algebra from the ideal effects of B and the declared
// realization of A.
struct AnalyticStats {
  Distribution q;
  Distribution q_prime;
  double d;
};

// Outcome distribution of the declared measurement together with the
// post-measurement state under the declared realization.
std::pair<Distribution, DensityMatrix> apply_real_instrument(
    const InstrumentSpec& spec, const DensityMatrix& rho);

// Monte Carlo execution of the five protocol steps. Deterministic given
// the scenario seed: the upper-path subset comes from a seeded
// Fisher-Yates selection and every trial draws from its own stream keyed
// by (seed, trial index), so results do not depend on evaluation order.
// Lower-path trials sample an A outcome, collapse the state conditioned
// on it, then sample B from the collapsed state. Set COLLAPSE_RNG_THREADS
// to evaluate trials in parallel.
EmpiricalStats run_protocol(const Scenario& s);

AnalyticStats analytic_statistics(const Scenario& s);

// Exact big-integer seed accounting for choosing n_u of n trials.
SeedLedger seed_cost(std::uint64_t n, std::uint64_t n_u);

// Empirical lower estimates of epsilon_a / epsilon_b: maximize the
// defining expressions over `samples` random full-spectrum input states.
// Useful for sanity-checking user-declared epsilons, not for certifying
// a maximum.
std::pair<double, double> empirical_epsilons(const InstrumentSpec& spec_a,
                                             const TestMeasurementSpec& spec_b,
                                             int samples, std::uint64_t seed);

// Noise-model presets.
std::vector<ComplexMatrix> depolarizing_kraus(int dim, double lambda);
std::vector<ComplexMatrix> amplitude_damping_kraus(double gamma);  // qubit
// Kraus set of outer(inner(.)): all pairwise products.
std::vector<ComplexMatrix> compose_kraus(const std::vector<ComplexMatrix>& outer,
                                         const std::vector<ComplexMatrix>& inner);
// Instrument whose channel is `noise` applied after the Lueders update of m.
InstrumentSpec noisy_lueders(const Measurement& m,
                             const std::vector<ComplexMatrix>& noise,
                             double epsilon_a);

}  // namespace collapse
