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

#include "collapse/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "collapse/errors.hpp"

namespace collapse {

namespace {

const double kSqrtHalf = std::sqrt(0.5);

// Clamp an argument that may exceed its analytic domain edge by rounding
// noise; anything larger falsifies the trust assumptions.
double clamp_to_domain(double x, double edge, const char* what) {
  if (x > edge + tol::validate) {
    throw InconsistentDataError(std::string(what) + " " + std::to_string(x) +
                                " exceeds its analytic domain edge " +
                                std::to_string(edge));
  }
  return std::min(x, edge);
}

double require_nonnegative(double x, const char* what) {
  if (x < 0.0) {
    throw InconsistentDataError(std::string(what) + " is negative");
  }
  return x;
}

void require_binary(int a_outcomes) {
  if (a_outcomes != 2) {
    throw UnsupportedError(
        "theorems 1-3 and 5 are established for binary generating "
        "measurements only");
  }
}

}  // namespace

TrustLevel::TrustLevel(Kind kind, std::optional<OverlapMatrix> overlaps)
    : kind_(kind), overlaps_(std::move(overlaps)) {}

TrustLevel TrustLevel::untrusted_povm() {
  return TrustLevel(Kind::UntrustedPovm, std::nullopt);
}

TrustLevel TrustLevel::projective_uncharacterized() {
  return TrustLevel(Kind::ProjectiveUncharacterized, std::nullopt);
}

TrustLevel TrustLevel::trusted_von_neumann(OverlapMatrix overlaps) {
  if (overlaps.size() != 2) {
    throw UnsupportedError(
        "trusted von Neumann certification is restricted to qubit pairs");
  }
  for (const auto& row : overlaps) {
    if (row.size() != 2) {
      throw ValidationError("overlap matrix must be square");
    }
    for (const double x : row) {
      if (x < -tol::validate || x > 1.0 + tol::validate) {
        throw ValidationError("overlap entries must lie in [0, 1]");
      }
    }
  }
  return TrustLevel(Kind::TrustedVonNeumann, std::move(overlaps));
}

const OverlapMatrix& TrustLevel::overlaps() const {
  if (!overlaps_) {
    throw UnsupportedError("trust level carries no overlap matrix");
  }
  return *overlaps_;
}

NoiseParams::NoiseParams(double eps_a, double eps_b)
    : epsilon_a(eps_a), epsilon_b(eps_b) {
  if (!(epsilon_a >= 0.0 && epsilon_a <= 1.0) ||
      !(epsilon_b >= 0.0 && epsilon_b <= 1.0)) {
    throw ValidationError("noise parameters must lie in [0, 1]");
  }
}

double adjust_disturbance(double d_re, const NoiseParams& noise,
                          const TrustLevel& level) {
  if (d_re < -tol::validate || d_re > 1.0 + tol::validate) {
    throw ValidationError("disturbance must lie in [0, 1]");
  }
  double adjusted = d_re - noise.epsilon_a;
  if (level.kind() == TrustLevel::Kind::TrustedVonNeumann) {
    adjusted -= 2.0 * noise.epsilon_b;
  }
  return std::max(0.0, adjusted);
}

CertBound bound_theorem1(double d) {
  require_nonnegative(d, "disturbance");
  d = clamp_to_domain(d, kSqrtHalf, "disturbance");
  const double guess = 0.5 + 0.5 * std::sqrt(std::max(0.0, 1.0 - 2.0 * d * d));
  return CertBound{std::max(0.0, -std::log2(guess)), Theorem::T1, d,
                   std::nullopt, false};
}

CertBound bound_theorem2(double d) {
  require_nonnegative(d, "disturbance");
  d = clamp_to_domain(d, 0.5, "projective disturbance");
  const double guess = 0.5 + 0.5 * std::sqrt(std::max(0.0, 1.0 - 4.0 * d * d));
  return CertBound{std::max(0.0, -std::log2(guess)), Theorem::T2, d,
                   std::nullopt, false};
}

double modified_disturbance(double d, double delta_ab) {
  require_nonnegative(d, "disturbance");
  require_nonnegative(delta_ab, "overlap factor");
  if (delta_ab <= tol::validate) {
    if (d <= tol::validate) return 0.0;
    throw InconsistentDataError(
        "positive disturbance between identical measurements");
  }
  return std::sqrt(2.0) * d / delta_ab;
}

CertBound bound_theorem3(double tau) {
  require_nonnegative(tau, "modified disturbance");
  tau = clamp_to_domain(tau, 0.5, "modified disturbance");
  const double guess =
      0.5 + 0.5 * std::sqrt(std::max(0.0, 1.0 - 4.0 * tau * tau));
  return CertBound{std::max(0.0, -std::log2(guess)), Theorem::T3, tau, tau,
                   false};
}

CertBound bound_theorem4(const Distribution& q, const Distribution& q_prime,
                         int a_outcomes) {
  if (a_outcomes < 2) throw ValidationError("a_outcomes must be at least 2");
  const double cap = std::log2(static_cast<double>(a_outcomes));
  const double kl = kl_divergence(q, q_prime);
  return CertBound{std::min(kl, cap), Theorem::T4, tv_distance(q, q_prime),
                   std::nullopt, false};
}

CertBound bound_theorem5(double tau) {
  require_nonnegative(tau, "modified disturbance");
  tau = clamp_to_domain(tau, 0.5, "modified disturbance");
  return CertBound{std::min(1.0, 4.0 * tau * tau), Theorem::T5, tau, tau, false};
}

CertBound bound_uncertainty_baseline(double c_max, const Distribution& q) {
  if (c_max <= 0.0 || c_max > 1.0 + tol::validate) {
    throw ValidationError("overlap c must lie in (0, 1]");
  }
  const double bits =
      std::max(0.0, -std::log2(std::min(1.0, c_max)) - renyi_half_entropy(q));
  return CertBound{bits, Theorem::UncertaintyBaseline, 0.0, std::nullopt, false};
}

std::vector<CertBound> certify(const DisturbanceData& data,
                               const TrustLevel& level, const NoiseParams& noise,
                               const std::optional<Distribution>& p) {
  // The bounds are functions of q, q' and d only; generating-measurement
  // statistics, when provided, must agree with the declared outcome count.
  if (p && p->size() != data.a_outcomes) {
    throw ValidationError(
        "generating-measurement statistics disagree with the outcome count");
  }
  std::vector<CertBound> bounds;
  const bool noisy = noise.epsilon_a > 0.0 || noise.epsilon_b > 0.0;

  // Theorems 1 and 2 need only the instrument-side correction.
  const double d_povm =
      adjust_disturbance(data.d, noise, TrustLevel::untrusted_povm());

  require_binary(data.a_outcomes);
  {
    CertBound b = bound_theorem1(d_povm);
    b.adjusted = noisy;
    bounds.push_back(b);
  }
  if (level.kind() != TrustLevel::Kind::UntrustedPovm) {
    CertBound b = bound_theorem2(d_povm);
    b.adjusted = noisy;
    bounds.push_back(b);
  }
  const bool trusted = level.kind() == TrustLevel::Kind::TrustedVonNeumann;
  // The trusted theorems subtract the testing-measurement noise as well.
  const double tau =
      trusted ? modified_disturbance(adjust_disturbance(data.d, noise, level),
                                     overlap_factor(level.overlaps()))
              : 0.0;
  if (trusted) {
    CertBound b3 = bound_theorem3(tau);
    b3.adjusted = noisy;
    bounds.push_back(b3);
  }
  bounds.push_back(bound_theorem4(data.q, data.q_prime, data.a_outcomes));
  if (trusted) {
    CertBound b5 = bound_theorem5(tau);
    b5.adjusted = noisy;
    bounds.push_back(b5);
    bounds.push_back(
        bound_uncertainty_baseline(max_overlap(level.overlaps()), data.q));
  }
  return bounds;
}

const CertBound& best_bound(const std::vector<CertBound>& bounds) {
  if (bounds.empty()) throw Error("best_bound: no bounds");
  return *std::max_element(
      bounds.begin(), bounds.end(),
      [](const CertBound& a, const CertBound& b) { return a.bits < b.bits; });
}

std::vector<Fig2Row> sweep_figure2(double c00,
                                   const std::vector<double>& d_grid) {
  if (c00 <= 0.5 || c00 >= 1.0) {
    throw ValidationError("figure 2 requires c00 in (1/2, 1)");
  }
  const OverlapMatrix overlaps{{c00, 1.0 - c00}, {1.0 - c00, c00}};
  const double delta_ab = overlap_factor(overlaps);

  std::vector<Fig2Row> rows;
  rows.reserve(d_grid.size());
  for (const double d : d_grid) {
    if (d < 0.0 || d > 1.0) {
      throw ValidationError("figure 2 disturbance grid must lie in [0, 1]");
    }
    Fig2Row row{d, std::nullopt, std::nullopt, std::nullopt};
    if (d <= kSqrtHalf + tol::validate) {
      row.t1_bits = bound_theorem1(d).bits;
    }
    if (d <= 0.5 + tol::validate) {
      row.t2_bits = bound_theorem2(d).bits;
    }
    const double tau = modified_disturbance(d, delta_ab);
    if (tau <= 0.5 + tol::validate) {
      row.t3_bits = bound_theorem3(tau).bits;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<Fig3Row> sweep_figure3(double c,
                                   const std::vector<Distribution>& q_grid,
                                   int search_budget) {
  if (c <= 0.5 || c >= 1.0) {
    throw ValidationError("figure 3 requires c in (1/2, 1)");
  }
  if (search_budget < 1) {
    throw ValidationError("figure 3 requires a positive search budget");
  }

  // Work in the Bloch frame of B: its basis is the z axis and the A axis
  // lies in the x-z plane at overlap c = cos^2(theta/2).
  const double cos_a = 2.0 * c - 1.0;
  const double sin_a = 2.0 * std::sqrt(c * (1.0 - c));

  std::vector<Fig3Row> rows;
  rows.reserve(q_grid.size());
  for (const Distribution& q : q_grid) {
    if (q.size() != 2) {
      throw ValidationError("figure 3 expects binary B statistics");
    }
    const double q0 = q[0];
    const double z = 2.0 * q0 - 1.0;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));

    double kl_min = std::numeric_limits<double>::infinity();
    double kl_max = -std::numeric_limits<double>::infinity();
    // Pure states with fixed B statistics form a circle; sweep its angle.
    // The A statistic p0 is affine in cos(phi), so the endpoints phi=0
    // and phi=pi realize its extreme values exactly.
    for (int k = 0; k <= search_budget; ++k) {
      const double phi = M_PI * static_cast<double>(k) / search_budget;
      const double p0 =
          std::clamp(0.5 * (1.0 + sin_a * r * std::cos(phi) + cos_a * z), 0.0,
                     1.0);
      const Distribution q_prime(
          {c * p0 + (1.0 - c) * (1.0 - p0), (1.0 - c) * p0 + c * (1.0 - p0)});
      const double kl = kl_divergence(q, q_prime);
      kl_min = std::min(kl_min, kl);
      kl_max = std::max(kl_max, kl);
    }

    const double baseline = bound_uncertainty_baseline(c, q).bits;
    rows.push_back(Fig3Row{q0, baseline, kl_min, kl_max});
  }
  return rows;
}

}  // namespace collapse
