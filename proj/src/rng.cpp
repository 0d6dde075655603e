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

#include "collapse/rng.hpp"

#include <algorithm>
#include <cmath>

#include "collapse/errors.hpp"

namespace collapse {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) : state_(mix64(seed + kGolden)) {}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(mix64(seed + kGolden) ^ (stream + kGolden))) {}

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform_open() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_open();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("Rng::below(0)");
  const std::uint64_t threshold = -n % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t x = next_u64();
    if (x >= threshold) return x % n;
  }
}

int Rng::sample(const std::vector<double>& probs) {
  const double u = uniform();
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;  // guard against fp shortfall
}

CVec haar_state_vector(int dim, Rng& rng) {
  CVec v(dim);
  for (auto& e : v) e = Complex(rng.normal(), rng.normal());
  const double n = norm(v);
  for (auto& e : v) e /= n;
  return v;
}

ComplexMatrix haar_unitary(int dim, Rng& rng) {
  // Gram-Schmidt QR of a complex Gaussian matrix. This convention keeps
  // the R diagonal real-positive, which makes Q exactly Haar-distributed.
  std::vector<CVec> cols(dim, CVec(dim));
  for (auto& col : cols)
    for (auto& e : col) e = Complex(rng.normal(), rng.normal());

  ComplexMatrix q(dim);
  for (int c = 0; c < dim; ++c) {
    CVec v = cols[c];
    for (int k = 0; k < c; ++k) {
      CVec qk(dim);
      for (int r = 0; r < dim; ++r) qk[r] = q(r, k);
      const Complex proj = inner(qk, v);
      for (int r = 0; r < dim; ++r) v[r] -= proj * qk[r];
    }
    const double n = norm(v);  // nonzero almost surely for Gaussian draws
    for (int r = 0; r < dim; ++r) q(r, c) = v[r] / n;
  }
  return q;
}

std::vector<double> uniform_simplex(int n, Rng& rng) {
  std::vector<double> cuts(n - 1);
  for (auto& c : cuts) c = rng.uniform();
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> w(n);
  double prev = 0.0;
  for (int i = 0; i < n - 1; ++i) {
    w[i] = cuts[i] - prev;
    prev = cuts[i];
  }
  w[n - 1] = 1.0 - prev;
  return w;
}

}  // namespace collapse
