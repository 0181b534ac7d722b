// Copyright 2026 The divcone Authors
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

namespace divcone::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Counter-based stream: the value at (seed, index, lane) never depends on
// how many other values were drawn, so blocks can be evaluated in any order.
inline constexpr std::uint64_t draw(std::uint64_t seed, std::uint64_t index, std::uint64_t lane) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index * 8 + lane));
}

// Uniform in [0, 1).
inline constexpr double uniform(std::uint64_t seed, std::uint64_t index, std::uint64_t lane) {
  return static_cast<double>(draw(seed, index, lane) >> 11) * 0x1.0p-53;
}

}  // namespace divcone::rng
