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

#include "collapse/protocol.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "collapse/errors.hpp"
#include "collapse/parallel.hpp"
#include "collapse/rng.hpp"

namespace collapse {

namespace {

constexpr char kSymbols[] = "0123456789abcdefghijklmnopqrstuvwxyz";

char outcome_symbol(int outcome) {
  if (outcome < 0 || outcome >= 36) {
    throw UnsupportedError("more than 36 outcomes cannot be symbolized");
  }
  return kSymbols[outcome];
}

DensityMatrix apply_kraus(const std::vector<ComplexMatrix>& kraus,
                          const DensityMatrix& rho) {
  ComplexMatrix out(rho.dim());
  for (const auto& k : kraus) out += k * rho.op() * k.adjoint();
  return DensityMatrix(std::move(out));
}

void validate_kraus(const std::vector<ComplexMatrix>& kraus, int dim) {
  if (kraus.empty()) throw ValidationError("noisy channel: no Kraus operators");
  ComplexMatrix sum(dim);
  for (const auto& k : kraus) {
    if (k.dim() != dim) throw DimensionError("noisy channel: Kraus dim mismatch");
    sum += k.adjoint() * k;
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(dim)) > tol::validate) {
    throw ValidationError("noisy channel: Kraus operators not trace preserving");
  }
}

// Per-outcome collapsed states sqrt(M_i) rho sqrt(M_i) / p_i; outcomes of
// probability zero keep a placeholder that is never sampled.
std::vector<ComplexMatrix> conditional_states(const Measurement& m,
                                              const DensityMatrix& rho,
                                              const Distribution& p) {
  std::vector<ComplexMatrix> out;
  out.reserve(m.outcomes());
  for (int i = 0; i < m.outcomes(); ++i) {
    const ComplexMatrix root = operator_sqrt(m.effects()[i]);
    ComplexMatrix branch = root * rho.op() * root;
    if (p[i] > tol::zero_eig) {
      branch = Complex(1.0 / p[i]) * branch;
    }
    out.push_back(std::move(branch));
  }
  return out;
}

Distribution distribution_from_effects(const std::vector<ComplexMatrix>& effects,
                                       const ComplexMatrix& state) {
  std::vector<double> p;
  p.reserve(effects.size());
  for (const auto& e : effects) {
    Complex t = 0.0;
    for (int i = 0; i < state.dim(); ++i)
      for (int k = 0; k < state.dim(); ++k) t += state(i, k) * e(k, i);
    p.push_back(t.real());
  }
  return Distribution(std::move(p));
}

}  // namespace

InstrumentSpec::InstrumentSpec(Measurement measurement, Realization realization,
                               double epsilon_a)
    : measurement_(std::move(measurement)),
      realization_(std::move(realization)),
      epsilon_a_(epsilon_a) {
  if (epsilon_a_ < 0.0 || epsilon_a_ > 1.0) {
    throw ValidationError("epsilon_a must lie in [0, 1]");
  }
  if (const auto* real = std::get_if<RealizationUnitaries>(&realization_)) {
    if (real->unitaries.size() != static_cast<size_t>(measurement_.outcomes())) {
      throw DimensionError("realization: one unitary per effect required");
    }
    for (const auto& u : real->unitaries) {
      if (u.dim() != measurement_.dim() || !u.is_unitary()) {
        throw ValidationError("realization: operator is not unitary");
      }
    }
  } else if (const auto* noisy = std::get_if<NoisyChannel>(&realization_)) {
    validate_kraus(noisy->kraus, measurement_.dim());
  }
}

TestMeasurementSpec::TestMeasurementSpec(
    Measurement measurement,
    std::optional<std::vector<ComplexMatrix>> real_effects, double epsilon_b)
    : measurement_(std::move(measurement)),
      real_effects_(std::move(real_effects)),
      epsilon_b_(epsilon_b) {
  if (epsilon_b_ < 0.0 || epsilon_b_ > 1.0) {
    throw ValidationError("epsilon_b must lie in [0, 1]");
  }
  if (real_effects_) {
    // Re-use POVM validation; outcome count must match the ideal one.
    if (real_effects_->size() != static_cast<size_t>(measurement_.outcomes())) {
      throw DimensionError("real effects: outcome count mismatch");
    }
    Measurement::povm(*real_effects_);
  }
}

Scenario::Scenario(DensityMatrix rho_in, InstrumentSpec instrument_a_in,
                   TestMeasurementSpec test_b_in, std::uint64_t n_in,
                   std::uint64_t n_u_in, std::uint64_t seed_in)
    : rho(std::move(rho_in)),
      instrument_a(std::move(instrument_a_in)),
      test_b(std::move(test_b_in)),
      n(n_in),
      n_u(n_u_in),
      seed(seed_in) {
  if (n_u == 0 || n_u >= n) {
    throw ValidationError("scenario requires 0 < n_u < n");
  }
  if (n > (1ULL << 32)) {
    throw ValidationError("scenario: trial counts above 2^32 are not supported");
  }
  if (instrument_a.measurement().dim() != rho.dim() ||
      test_b.measurement().dim() != rho.dim()) {
    throw DimensionError("scenario: measurement dimensions do not match state");
  }
}

std::pair<Distribution, DensityMatrix> apply_real_instrument(
    const InstrumentSpec& spec, const DensityMatrix& rho) {
  const Measurement& m = spec.measurement();
  Distribution outcome = outcome_distribution(m, rho);
  if (std::holds_alternative<IdealLueders>(spec.realization())) {
    return {std::move(outcome), lueders_channel(m, rho)};
  }
  if (const auto* real = std::get_if<RealizationUnitaries>(&spec.realization())) {
    return {std::move(outcome), realized_instrument(m, real->unitaries, rho)};
  }
  const auto& noisy = std::get<NoisyChannel>(spec.realization());
  return {std::move(outcome), apply_kraus(noisy.kraus, rho)};
}

EmpiricalStats run_protocol(const Scenario& s) {
  const Measurement& ma = s.instrument_a.measurement();
  const Measurement& mb = s.test_b.measurement();
  const std::vector<ComplexMatrix>& b_effects =
      s.test_b.real_effects() ? *s.test_b.real_effects() : mb.effects();

  // Upper path: B statistics of the undisturbed state.
  const Distribution q_upper = distribution_from_effects(b_effects, s.rho.op());

  // Lower path: A statistics of rho, then B statistics of the collapsed
  // state conditioned on each A outcome. A NoisyChannel realization has no
  // per-outcome decomposition, so B is sampled from the channel average,
  // which yields the same lower-path marginals.
  const Distribution p_a = outcome_distribution(ma, s.rho);
  std::vector<Distribution> q_lower;
  q_lower.reserve(ma.outcomes());
  if (const auto* noisy = std::get_if<NoisyChannel>(&s.instrument_a.realization())) {
    const DensityMatrix avg = apply_kraus(noisy->kraus, s.rho);
    for (int i = 0; i < ma.outcomes(); ++i) {
      q_lower.push_back(distribution_from_effects(b_effects, avg.op()));
    }
  } else {
    std::vector<ComplexMatrix> branches = conditional_states(ma, s.rho, p_a);
    if (const auto* real =
            std::get_if<RealizationUnitaries>(&s.instrument_a.realization())) {
      for (int i = 0; i < ma.outcomes(); ++i) {
        branches[i] = real->unitaries[i] * branches[i] *
                      real->unitaries[i].adjoint();
      }
    }
    for (int i = 0; i < ma.outcomes(); ++i) {
      if (p_a[i] > tol::zero_eig) {
        q_lower.push_back(distribution_from_effects(b_effects, branches[i]));
      } else {
        q_lower.push_back(q_upper);  // never sampled
      }
    }
  }

  // Seeded Fisher-Yates selection of the n_u upper-path trial indices
  // (stream 0 is reserved for this draw).
  std::vector<std::uint8_t> upper(s.n, 0);
  {
    Rng rng(s.seed, 0);
    std::vector<std::uint32_t> idx(s.n);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::uint64_t i = 0; i < s.n_u; ++i) {
      const std::uint64_t j = i + rng.below(s.n - i);
      std::swap(idx[i], idx[j]);
      upper[idx[i]] = 1;
    }
  }

  // Rank of each lower-path trial within the lower subsequence, so that
  // parallel chunks can write raw outcomes to fixed positions.
  std::vector<std::uint64_t> lower_rank(s.n, 0);
  std::uint64_t lower_count = 0;
  for (std::uint64_t t = 0; t < s.n; ++t) {
    lower_rank[t] = lower_count;
    if (!upper[t]) ++lower_count;
  }

  const int outcomes_b = static_cast<int>(b_effects.size());
  const int threads = env_thread_cap();
  const int max_workers =
      threads <= 1 ? 1
                   : static_cast<int>(std::min<std::uint64_t>(threads, s.n));
  std::vector<std::vector<std::uint64_t>> tally_q(
      max_workers, std::vector<std::uint64_t>(outcomes_b, 0));
  std::vector<std::vector<std::uint64_t>> tally_q_prime = tally_q;
  std::string raw(lower_count, '?');

  parallel_chunks(s.n, threads,
                  [&](std::uint64_t first, std::uint64_t last, int worker) {
                    for (std::uint64_t t = first; t < last; ++t) {
                      Rng rng(s.seed, t + 1);
                      if (upper[t]) {
                        ++tally_q[worker][rng.sample(q_upper.probs())];
                      } else {
                        const int a = rng.sample(p_a.probs());
                        raw[lower_rank[t]] = outcome_symbol(a);
                        ++tally_q_prime[worker][rng.sample(q_lower[a].probs())];
                      }
                    }
                  });

  EmpiricalStats stats{
      std::vector<std::uint64_t>(outcomes_b, 0),
      std::vector<std::uint64_t>(outcomes_b, 0),
      Distribution({1.0}),  // replaced below
      Distribution({1.0}),
      0.0,
      std::move(raw)};
  for (int w = 0; w < max_workers; ++w) {
    for (int j = 0; j < outcomes_b; ++j) {
      stats.counts_q[j] += tally_q[w][j];
      stats.counts_q_prime[j] += tally_q_prime[w][j];
    }
  }

  std::vector<double> q_hat(outcomes_b), q_prime_hat(outcomes_b);
  for (int j = 0; j < outcomes_b; ++j) {
    q_hat[j] = static_cast<double>(stats.counts_q[j]) / s.n_u;
    q_prime_hat[j] =
        static_cast<double>(stats.counts_q_prime[j]) / (s.n - s.n_u);
  }
  stats.q_hat = Distribution(std::move(q_hat));
  stats.q_prime_hat = Distribution(std::move(q_prime_hat));
  stats.d_hat = tv_distance(stats.q_hat, stats.q_prime_hat);
  return stats;
}

AnalyticStats analytic_statistics(const Scenario& s) {
  const Measurement& mb = s.test_b.measurement();
  Distribution q = outcome_distribution(mb, s.rho);
  const DensityMatrix rho_prime =
      apply_real_instrument(s.instrument_a, s.rho).second;
  Distribution q_prime = outcome_distribution(mb, rho_prime);
  const double d = tv_distance(q, q_prime);
  return AnalyticStats{std::move(q), std::move(q_prime), d};
}

SeedLedger seed_cost(std::uint64_t n, std::uint64_t n_u) {
  if (n_u == 0 || n_u >= n) {
    throw ValidationError("seed_cost requires 0 < n_u < n");
  }
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), n, n_u);

  // ceil(log2 x): the bit length, minus one when x is a power of two.
  const std::size_t bits = mpz_sizeinbase(binom.get_mpz_t(), 2);
  const bool power_of_two =
      mpz_scan1(binom.get_mpz_t(), 0) == static_cast<mp_bitcnt_t>(bits - 1);
  const std::uint64_t t_bits = power_of_two ? bits - 1 : bits;

  const double root = std::sqrt(static_cast<double>(n));
  return SeedLedger{t_bits, static_cast<double>(t_bits) / (n - n_u),
                    root * std::log2(root)};
}

std::pair<double, double> empirical_epsilons(const InstrumentSpec& spec_a,
                                             const TestMeasurementSpec& spec_b,
                                             int samples, std::uint64_t seed) {
  if (samples < 1) throw ValidationError("empirical_epsilons: samples >= 1");
  const int dim = spec_a.measurement().dim();
  double eps_a = 0.0, eps_b = 0.0;
  for (int k = 0; k < samples; ++k) {
    Rng rng(seed, k);
    // Uniform-spectral state: Haar basis with uniform-simplex spectrum.
    const ComplexMatrix u = haar_unitary(dim, rng);
    const std::vector<double> w = uniform_simplex(dim, rng);
    ComplexMatrix m(dim);
    for (int c = 0; c < dim; ++c)
      for (int r1 = 0; r1 < dim; ++r1)
        for (int r2 = 0; r2 < dim; ++r2)
          m(r1, r2) += w[c] * u(r1, c) * std::conj(u(r2, c));
    const DensityMatrix rho(std::move(m));

    const DensityMatrix real = apply_real_instrument(spec_a, rho).second;
    const DensityMatrix ideal = lueders_channel(spec_a.measurement(), rho);
    eps_a = std::max(eps_a, trace_distance(real, ideal));

    if (spec_b.real_effects()) {
      const Distribution ideal_b =
          outcome_distribution(spec_b.measurement(), rho);
      const Distribution real_b =
          distribution_from_effects(*spec_b.real_effects(), rho.op());
      eps_b = std::max(eps_b, tv_distance(ideal_b, real_b));
    }
  }
  return {eps_a, eps_b};
}

std::vector<ComplexMatrix> depolarizing_kraus(int dim, double lambda) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw ValidationError("depolarizing: lambda must lie in [0, 1]");
  }
  std::vector<ComplexMatrix> kraus;
  ComplexMatrix keep(dim);
  for (int i = 0; i < dim; ++i) keep(i, i) = std::sqrt(1.0 - lambda);
  kraus.push_back(std::move(keep));
  const double w = std::sqrt(lambda / dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      ComplexMatrix k(dim);
      k(i, j) = w;
      kraus.push_back(std::move(k));
    }
  }
  return kraus;
}

std::vector<ComplexMatrix> amplitude_damping_kraus(double gamma) {
  if (gamma < 0.0 || gamma > 1.0) {
    throw ValidationError("amplitude damping: gamma must lie in [0, 1]");
  }
  return {ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}}),
          ComplexMatrix::from_rows({{0.0, std::sqrt(gamma)}, {0.0, 0.0}})};
}

std::vector<ComplexMatrix> compose_kraus(
    const std::vector<ComplexMatrix>& outer,
    const std::vector<ComplexMatrix>& inner) {
  std::vector<ComplexMatrix> out;
  out.reserve(outer.size() * inner.size());
  for (const auto& o : outer)
    for (const auto& i : inner) out.push_back(o * i);
  return out;
}

InstrumentSpec noisy_lueders(const Measurement& m,
                             const std::vector<ComplexMatrix>& noise,
                             double epsilon_a) {
  std::vector<ComplexMatrix> roots;
  roots.reserve(m.effects().size());
  for (const auto& e : m.effects()) roots.push_back(operator_sqrt(e));
  return InstrumentSpec(m, NoisyChannel{compose_kraus(noise, roots)}, epsilon_a);
}

}  // namespace collapse
