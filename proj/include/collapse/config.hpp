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

#include <string>

#include "collapse/certify.hpp"
#include "collapse/protocol.hpp"

namespace collapse {

// A fully validated run description assembled from a JSON config.
struct RunConfig {
  Scenario scenario;
  TrustLevel trust;
  NoiseParams noise;
  int budget;
};

// Parse and validate a JSON config document. States accept the presets
// "zero", "one", "plus", "minus", "mixed:I/2", a {"bloch": [x,y,z]}
// vector, or an explicit {"matrix": [["re+imj", ...], ...]}; measurements
// accept "sigmaz"/"sigmax"/"sigmay", {"basis_angle": theta}, an explicit
// {"basis": [...]}, or {"effects": [...], "kind": "povm"|"projective"}.
// Syntax errors carry the line number; invariant violations name the
// offending key.
RunConfig parse_config(const std::string& text);

// Parse one "re+imj" literal (also plain reals and "j"/"-j").
Complex parse_complex_literal(const std::string& text);

}  // namespace collapse
