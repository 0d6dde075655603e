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

#include <stdexcept>
#include <string>

namespace collapse {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands have incompatible dimensions or outcome counts.
struct DimensionError : Error {
  using Error::Error;
};

// A value failed its construction invariants (non-Hermitian state, effects
// that do not sum to identity, probabilities that do not sum to one, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Measured data contradicts the declared trust assumptions, e.g. a
// disturbance outside the analytic domain of the requested bound.
struct InconsistentDataError : Error {
  using Error::Error;
};

// Configuration file or command-line usage problem.
struct ConfigError : Error {
  using Error::Error;
};

// A combination of options the library deliberately does not support.
struct UnsupportedError : Error {
  using Error::Error;
};

}  // namespace collapse
