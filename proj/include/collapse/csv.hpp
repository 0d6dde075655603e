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

namespace collapse {

// Locale-independent number rendering for CSV output: '.' decimal
// separator, 6 significant digits, "inf" for infinities.
std::string format_number(double x);
std::string format_count(std::uint64_t x);

// Write bytes as-is (LF line endings are the caller's responsibility).
void write_text_file(const std::string& path, const std::string& content);

}  // namespace collapse
