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

#include <cmath>
#include <limits>

#include "collapse/errors.hpp"
#include "collapse/rng.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace collapse;
using test_helpers::random_density;

namespace {

const double kSqrtHalf = std::sqrt(0.5);

DensityMatrix ket_zero() { return DensityMatrix::pure({1.0, 0.0}); }
DensityMatrix ket_one() { return DensityMatrix::pure({0.0, 1.0}); }
DensityMatrix ket_plus() { return DensityMatrix::pure({kSqrtHalf, kSqrtHalf}); }

Measurement random_rank_one(int dim, Rng& rng) {
  const ComplexMatrix u = haar_unitary(dim, rng);
  std::vector<CVec> basis;
  for (int c = 0; c < dim; ++c) {
    CVec v(dim);
    for (int r = 0; r < dim; ++r) v[r] = u(r, c);
    basis.push_back(std::move(v));
  }
  return Measurement::from_basis(std::move(basis));
}

}  // namespace

TEST_CASE("distribution invariants") {
  CHECK_NOTHROW(Distribution({0.5, 0.5}));
  // Entries in [-1e-12, 0) clamp to zero.
  Distribution d({1.0, -0.5e-12});
  CHECK(d[1] == 0.0);
  CHECK_THROWS_AS(Distribution({1.0, -1e-6}), ValidationError);
  CHECK_THROWS_AS(Distribution({0.6, 0.6}), ValidationError);
  CHECK_THROWS_AS(Distribution({}), ValidationError);
}

TEST_CASE("density matrix invariants") {
  CHECK_NOTHROW(DensityMatrix::maximally_mixed(4));
  // Non-Hermitian.
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::from_rows(
                      {{0.5, 0.3}, {0.0, 0.5}})),
                  ValidationError);
  // Wrong trace.
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::from_rows(
                      {{0.7, 0.0}, {0.0, 0.7}})),
                  ValidationError);
  // Negative eigenvalue.
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::from_rows(
                      {{1.2, 0.0}, {0.0, -0.2}})),
                  ValidationError);
  CHECK_THROWS_AS(DensityMatrix::from_bloch(0.9, 0.9, 0.9), ValidationError);
}

TEST_CASE("measurement invariants") {
  // Effects must sum to identity.
  ComplexMatrix half = ComplexMatrix::from_rows({{0.5, 0.0}, {0.0, 0.5}});
  CHECK_THROWS_AS(Measurement::povm({half}), ValidationError);
  CHECK_NOTHROW(Measurement::povm({half, half}));

  // Projective effects must be idempotent.
  CHECK_THROWS_AS(Measurement::projective({half, half}), ValidationError);

  // Rank-one basis vectors must be unit length.
  CHECK_THROWS_AS(Measurement::from_basis({{1.0, 1.0}, {1.0, -1.0}}),
                  ValidationError);
  CHECK_NOTHROW(Measurement::sigma_x());
  CHECK_THROWS_AS(Measurement::povm({half, half}).basis(), UnsupportedError);
}

TEST_CASE("outcome distributions") {
  Distribution p = outcome_distribution(Measurement::sigma_z(), ket_zero());
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(0.0).epsilon(1e-12));

  p = outcome_distribution(Measurement::sigma_z(), ket_plus());
  CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-12));

  p = outcome_distribution(Measurement::sigma_z(),
                           DensityMatrix::from_bloch(0.3, 0.0, 0.4));
  CHECK(p[0] == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(0.3).epsilon(1e-12));

  CHECK_THROWS_AS(
      outcome_distribution(Measurement::sigma_z(),
                           DensityMatrix::maximally_mixed(4)),
      DimensionError);
}

TEST_CASE("lueders channel") {
  // Dephasing of the maximally coherent state.
  DensityMatrix out = lueders_channel(Measurement::sigma_z(), ket_plus());
  CHECK(max_abs_diff(out.op(), DensityMatrix::maximally_mixed(2).op()) < 1e-12);

  // Eigenstates pass through unchanged.
  out = lueders_channel(Measurement::sigma_z(), ket_zero());
  CHECK(max_abs_diff(out.op(), ket_zero().op()) < 1e-12);

  // The trivial POVM {I} is the identity channel.
  Measurement trivial = Measurement::povm({ComplexMatrix::identity(2)});
  DensityMatrix rho = DensityMatrix::from_bloch(0.2, 0.5, -0.1);
  out = lueders_channel(trivial, rho);
  CHECK(max_abs_diff(out.op(), rho.op()) < 1e-12);
}

TEST_CASE("lueders channel preserves trace and positivity on random inputs") {
  Rng rng(21);
  // 10^4 (measurement, state) pairs spread over dims 2-8; the
  // DensityMatrix constructor re-validates trace and positivity.
  for (int dim = 2; dim <= 8; ++dim) {
    for (int rep = 0; rep < 1430; ++rep) {
      const DensityMatrix rho =
          random_density(dim, 1 + static_cast<int>(rng.below(dim)), rng);
      const Measurement m = random_rank_one(dim, rng);
      CHECK_NOTHROW(lueders_channel(m, rho));
    }
  }
}

TEST_CASE("realized instrument") {
  std::vector<ComplexMatrix> ids{ComplexMatrix::identity(2),
                                 ComplexMatrix::identity(2)};
  DensityMatrix lueders = lueders_channel(Measurement::sigma_z(), ket_plus());
  DensityMatrix realized =
      realized_instrument(Measurement::sigma_z(), ids, ket_plus());
  CHECK(max_abs_diff(lueders.op(), realized.op()) < 1e-12);

  // U_1 = sigma_x maps the collapsed |1> branch back to |0>.
  ComplexMatrix sx = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  realized = realized_instrument(Measurement::sigma_z(),
                                 {ComplexMatrix::identity(2), sx}, ket_one());
  CHECK(max_abs_diff(realized.op(), ket_zero().op()) < 1e-12);

  // Eigenstate with identity unitaries stays put.
  realized = realized_instrument(Measurement::sigma_z(), ids, ket_zero());
  CHECK(max_abs_diff(realized.op(), ket_zero().op()) < 1e-12);

  ComplexMatrix not_unitary = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 2.0}});
  CHECK_THROWS_AS(realized_instrument(Measurement::sigma_z(),
                                      {ComplexMatrix::identity(2), not_unitary},
                                      ket_zero()),
                  ValidationError);
  CHECK_THROWS_AS(
      realized_instrument(Measurement::sigma_z(), {ComplexMatrix::identity(2)},
                          ket_zero()),
      DimensionError);
}

TEST_CASE("dephase") {
  DensityMatrix out = dephase(Measurement::sigma_z(), ket_plus());
  CHECK(max_abs_diff(out.op(), DensityMatrix::maximally_mixed(2).op()) < 1e-12);

  DensityMatrix diag(ComplexMatrix::from_rows({{0.7, 0.0}, {0.0, 0.3}}));
  out = dephase(Measurement::sigma_z(), diag);
  CHECK(max_abs_diff(out.op(), diag.op()) < 1e-12);

  CHECK_THROWS_AS(
      dephase(Measurement::povm({ComplexMatrix::identity(2)}), ket_plus()),
      UnsupportedError);
}

TEST_CASE("dephase is idempotent and trace preserving on random states") {
  Rng rng(33);
  for (int rep = 0; rep < 50; ++rep) {
    const int dim = 2 + static_cast<int>(rng.below(7));
    const DensityMatrix rho =
        random_density(dim, 1 + static_cast<int>(rng.below(dim)), rng);
    const Measurement basis = random_rank_one(dim, rng);
    const DensityMatrix once = dephase(basis, rho);
    const DensityMatrix twice = dephase(basis, once);
    CHECK(max_abs_diff(once.op(), twice.op()) < 1e-12);
    CHECK(std::abs(once.op().trace() - Complex(1.0)) < 1e-12);
  }
}

TEST_CASE("trace distance") {
  CHECK(trace_distance(ket_zero(), ket_one()) == doctest::Approx(1.0));
  DensityMatrix rho = DensityMatrix::from_bloch(0.1, 0.2, 0.3);
  CHECK(trace_distance(rho, rho) == doctest::Approx(0.0));
  CHECK(trace_distance(ket_plus(), DensityMatrix::maximally_mixed(2)) ==
        doctest::Approx(0.5));
  CHECK_THROWS_AS(trace_distance(ket_zero(), DensityMatrix::maximally_mixed(3)),
                  DimensionError);
}

TEST_CASE("trace distance is a metric and contracts under measurement") {
  Rng rng(55);
  for (int rep = 0; rep < 60; ++rep) {
    const int dim = 2 + static_cast<int>(rng.below(3));
    const DensityMatrix a = random_density(dim, dim, rng);
    const DensityMatrix b = random_density(dim, 1, rng);
    const DensityMatrix c =
        random_density(dim, 1 + static_cast<int>(rng.below(dim)), rng);

    CHECK(trace_distance(a, b) == doctest::Approx(trace_distance(b, a)));
    CHECK(trace_distance(a, c) <=
          trace_distance(a, b) + trace_distance(b, c) + 1e-9);

    // Data processing: measuring cannot increase distinguishability.
    const Measurement m = random_rank_one(dim, rng);
    CHECK(tv_distance(outcome_distribution(m, a), outcome_distribution(m, b)) <=
          trace_distance(a, b) + 1e-9);
  }
}

TEST_CASE("tv distance") {
  CHECK(tv_distance(Distribution({1.0, 0.0}), Distribution({0.5, 0.5})) ==
        doctest::Approx(0.5));
  CHECK(tv_distance(Distribution({0.3, 0.7}), Distribution({0.3, 0.7})) ==
        doctest::Approx(0.0));
  CHECK(tv_distance(Distribution({1.0, 0.0}), Distribution({0.0, 1.0})) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(tv_distance(Distribution({1.0}), Distribution({0.5, 0.5})),
                  DimensionError);
}

TEST_CASE("shannon entropy") {
  CHECK(shannon_entropy(Distribution({0.5, 0.5})) == doctest::Approx(1.0));
  CHECK(shannon_entropy(Distribution({1.0, 0.0})) == doctest::Approx(0.0));
  CHECK(shannon_entropy(Distribution({0.75, 0.25})) ==
        doctest::Approx(0.811278124459).epsilon(1e-9));
}

TEST_CASE("collision uncertainty") {
  CHECK(collision_uncertainty(Distribution({0.5, 0.5})) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(collision_uncertainty(Distribution({1.0, 0.0})) == doctest::Approx(0.0));
  // Binary case: sqrt(2 p (1-p)).
  CHECK(collision_uncertainty(Distribution({0.9, 0.1})) ==
        doctest::Approx(std::sqrt(0.18)).epsilon(1e-12));
  // H_2 = -log2(1 - delta^2).
  const Distribution p({0.7, 0.3});
  const double delta = collision_uncertainty(p);
  CHECK(collision_entropy(p) ==
        doctest::Approx(-std::log2(1.0 - delta * delta)).epsilon(1e-12));
}

TEST_CASE("renyi half entropy") {
  CHECK(renyi_half_entropy(Distribution({1.0, 0.0})) == doctest::Approx(0.0));
  CHECK(renyi_half_entropy(Distribution({0.5, 0.5})) == doctest::Approx(1.0));
  // 2 log2(sqrt(0.75) + sqrt(0.25)) = 0.899968626953.
  CHECK(renyi_half_entropy(Distribution({0.75, 0.25})) ==
        doctest::Approx(0.899968626953).epsilon(1e-9));
}

TEST_CASE("kl divergence") {
  CHECK(kl_divergence(Distribution({1.0, 0.0}), Distribution({0.5, 0.5})) ==
        doctest::Approx(1.0));
  CHECK(kl_divergence(Distribution({0.4, 0.6}), Distribution({0.4, 0.6})) ==
        doctest::Approx(0.0));
  CHECK(kl_divergence(Distribution({1.0, 0.0}), Distribution({0.0, 1.0})) ==
        std::numeric_limits<double>::infinity());
  CHECK(kl_divergence(Distribution({0.9, 0.1}), Distribution({0.5, 0.5})) ==
        doctest::Approx(0.531004406411).epsilon(1e-9));
  CHECK_THROWS_AS(kl_divergence(Distribution({1.0}), Distribution({0.5, 0.5})),
                  DimensionError);
}

TEST_CASE("kl divergence is nonnegative, zero only at equality") {
  Rng rng(77);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + static_cast<int>(rng.below(4));
    const Distribution q(uniform_simplex(n, rng));
    const Distribution r(uniform_simplex(n, rng));
    const double kl = kl_divergence(q, r);
    CHECK(kl >= 0.0);
    if (kl < 1e-12) {
      CHECK(tv_distance(q, r) < 1e-5);
    }
    CHECK(kl_divergence(q, q) == doctest::Approx(0.0));
  }
}

TEST_CASE("relative entropy to dephased state") {
  CHECK(relative_entropy_to_dephased(ket_plus(), Measurement::sigma_z()) ==
        doctest::Approx(1.0).epsilon(1e-9));
  DensityMatrix diag(ComplexMatrix::from_rows({{0.7, 0.0}, {0.0, 0.3}}));
  CHECK(relative_entropy_to_dephased(diag, Measurement::sigma_z()) ==
        doctest::Approx(0.0));
  CHECK(relative_entropy_to_dephased(ket_zero(), Measurement::sigma_z()) ==
        doctest::Approx(0.0));
}

TEST_CASE("relative entropy agrees with the entropy-difference form") {
  Rng rng(99);
  for (int rep = 0; rep < 50; ++rep) {
    const int dim = 2 + static_cast<int>(rng.below(3));
    const DensityMatrix rho =
        random_density(dim, 1 + static_cast<int>(rng.below(dim)), rng);
    const Measurement basis = random_rank_one(dim, rng);

    const double direct = relative_entropy_to_dephased(rho, basis);

    // Independent route: H(diagonal) - von Neumann entropy.
    const Distribution diag = outcome_distribution(basis, rho);
    double von_neumann = 0.0;
    for (const double v : eigen_hermitian(rho.op()).values)
      if (v > 1e-12) von_neumann -= v * std::log2(v);
    CHECK(direct ==
          doctest::Approx(shannon_entropy(diag) - von_neumann).epsilon(1e-8));
  }
}

TEST_CASE("overlap matrix") {
  OverlapMatrix c =
      overlap_matrix(Measurement::sigma_z(), Measurement::sigma_z());
  CHECK(c[0][0] == doctest::Approx(1.0));
  CHECK(c[0][1] == doctest::Approx(0.0));

  c = overlap_matrix(Measurement::sigma_z(), Measurement::sigma_x());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(c[i][j] == doctest::Approx(0.5));

  // cos^2(theta/2) = 0.75.
  const double theta = 2.0 * std::acos(std::sqrt(0.75));
  c = overlap_matrix(Measurement::sigma_z(),
                     Measurement::rotated_qubit_basis(theta));
  CHECK(c[0][0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(c[0][1] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(c[1][0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(c[1][1] == doctest::Approx(0.75).epsilon(1e-12));

  CHECK_THROWS_AS(
      overlap_matrix(Measurement::povm({ComplexMatrix::identity(2)}),
                     Measurement::sigma_z()),
      UnsupportedError);
}

TEST_CASE("overlap matrix is doubly stochastic for random bases") {
  Rng rng(13);
  for (int rep = 0; rep < 30; ++rep) {
    const int dim = 2 + static_cast<int>(rng.below(7));
    const OverlapMatrix c =
        overlap_matrix(random_rank_one(dim, rng), random_rank_one(dim, rng));
    for (int i = 0; i < dim; ++i) {
      double row = 0.0, col = 0.0;
      for (int j = 0; j < dim; ++j) {
        row += c[i][j];
        col += c[j][i];
      }
      CHECK(row == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(col == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("overlap factor") {
  CHECK(overlap_factor(overlap_matrix(Measurement::sigma_z(),
                                      Measurement::sigma_x())) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(overlap_factor(overlap_matrix(Measurement::sigma_z(),
                                      Measurement::sigma_z())) ==
        doctest::Approx(0.0));
  // c00 = 0.75: 2 sqrt(2 * 0.75 * 0.25).
  OverlapMatrix c{{0.75, 0.25}, {0.25, 0.75}};
  CHECK(overlap_factor(c) == doctest::Approx(1.224744871392).epsilon(1e-9));
  CHECK(max_overlap(c) == doctest::Approx(0.75));
}
