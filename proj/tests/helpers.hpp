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

#include "collapse/matrix.hpp"
#include "collapse/quantum.hpp"
#include "collapse/rng.hpp"

namespace test_helpers {

using collapse::Complex;
using collapse::ComplexMatrix;
using collapse::CVec;
using collapse::Rng;

inline ComplexMatrix random_hermitian(int dim, Rng& rng, double scale = 1.0) {
  ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    m(r, r) = scale * rng.normal();
    for (int c = r + 1; c < dim; ++c) {
      m(r, c) = scale * Complex(rng.normal(), rng.normal());
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

inline ComplexMatrix random_psd(int dim, Rng& rng) {
  const ComplexMatrix g = random_hermitian(dim, rng);
  return g * g;
}

inline collapse::DensityMatrix random_density(int dim, int rank, Rng& rng) {
  const ComplexMatrix u = collapse::haar_unitary(dim, rng);
  const std::vector<double> w = collapse::uniform_simplex(rank, rng);
  ComplexMatrix m(dim);
  for (int k = 0; k < rank; ++k) {
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        m(r, c) += w[k] * u(r, k) * std::conj(u(c, k));
  }
  return collapse::DensityMatrix(std::move(m));
}

}  // namespace test_helpers
