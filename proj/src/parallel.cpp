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

#include "collapse/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace collapse {

int env_thread_cap() {
  const char* raw = std::getenv("COLLAPSE_RNG_THREADS");
  if (raw == nullptr) return 1;
  const long v = std::strtol(raw, nullptr, 10);
  return v >= 1 ? static_cast<int>(v) : 1;
}

void parallel_chunks(
    std::uint64_t count, int threads,
    const std::function<void(std::uint64_t, std::uint64_t, int)>& body) {
  if (threads <= 1 || count < 2) {
    body(0, count, 0);
    return;
  }
  const int workers = static_cast<int>(
      std::min<std::uint64_t>(threads, count));
  const std::uint64_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t first = w * chunk;
    const std::uint64_t last = std::min(count, first + chunk);
    pool.emplace_back([&body, first, last, w] { body(first, last, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace collapse
