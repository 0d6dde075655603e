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
#include <functional>

namespace collapse {

// Thread cap from COLLAPSE_RNG_THREADS; 1 when unset or unparsable.
int env_thread_cap();

// Run body(first, last, worker) over [0, count) split into contiguous
// chunks, one worker thread per chunk. threads <= 1 runs inline. The
// caller is responsible for making chunk results order-independent.
void parallel_chunks(
    std::uint64_t count, int threads,
    const std::function<void(std::uint64_t, std::uint64_t, int)>& body);

}  // namespace collapse
