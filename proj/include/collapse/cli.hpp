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

#include "collapse/config.hpp"

namespace collapse {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconsistent = 3;

// Run the protocol and write <out_dir>/stats.csv.
void do_simulate(const RunConfig& config, const std::string& out_dir);

// Certify bounds from analytic statistics (or a protocol run when
// `empirical`) and write <out_dir>/cert.csv.
void do_certify(const RunConfig& config, const std::string& out_dir,
                bool empirical);

// Lemma chains plus bound orderings; returns the total violation count
// and appends the text report.
int do_verify(int instances, const std::vector<int>& dims, std::uint64_t seed,
              std::string& report);

// Theorem comparison sweep over d in [0, 1/2]; writes fig2.csv.
void do_figure2(double c00, int steps, const std::string& out_dir);

// Baseline comparison sweep over q0 in [0, 1]; writes fig3.csv.
void do_figure3(double c, int steps, int budget, const std::string& out_dir);

// Command-line entry point; maps errors to the exit codes above.
int run_cli(std::vector<std::string> args);

}  // namespace collapse
