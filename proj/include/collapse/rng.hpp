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
#include <vector>

#include "collapse/matrix.hpp"

namespace collapse {

// SplitMix64-based generator. Output is platform-independent: uniform
// doubles are built directly from the high 53 bits, normals via
// Box-Muller, so seeded runs reproduce bit-exactly everywhere. Streams
// keyed by (seed, stream) are independent, which lets trials and
// instances be evaluated in any order or in parallel.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  Rng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  double uniform();       // [0, 1)
  double uniform_open();  // (0, 1]
  double normal();        // standard normal, Box-Muller
  std::uint64_t below(std::uint64_t n);  // unbiased integer in [0, n)
  // Categorical draw from a probability vector (assumed to sum to ~1).
  int sample(const std::vector<double>& probs);

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Haar-uniform pure state: normalized vector of iid complex Gaussians.
CVec haar_state_vector(int dim, Rng& rng);

// Haar-uniform unitary: QR of a complex Gaussian matrix with the R
// diagonal phases absorbed into Q.
ComplexMatrix haar_unitary(int dim, Rng& rng);

// Uniform point on the probability simplex via sorted-uniform spacings.
std::vector<double> uniform_simplex(int n, Rng& rng);

}  // namespace collapse
