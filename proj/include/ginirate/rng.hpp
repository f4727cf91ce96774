// Copyright 2026 The ginirate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GINIRATE_RNG_HPP
#define GINIRATE_RNG_HPP

#include <cstdint>

namespace ginirate {

/// SplitMix64 finalizer: a bijective 64-bit avalanche mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Child key of `seed` for stream `index`. A pure function of both
/// arguments, so any worker can produce stream j without shared state.
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed + 0x9e3779b97f4a7c15ULL) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

/// Counter-based bits for (key, row, column, lane).
constexpr std::uint64_t counter_bits(std::uint64_t key, std::uint64_t row,
                                     std::uint64_t column, std::uint64_t lane) {
  const std::uint64_t counter = (row << 32) ^ column;
  return mix64(mix64(key ^ mix64(counter + 0x632be59bd9b4e019ULL)) + lane * 0x9e3779b97f4a7c15ULL);
}

/// Uniform double in (0, 1) from the top 52 bits; never returns 0 or 1.
constexpr double to_open_unit(std::uint64_t bits) {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1.0p-52;
}

}  // namespace ginirate

#endif  // GINIRATE_RNG_HPP
