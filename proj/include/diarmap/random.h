// diarmap/include/diarmap/random.h
//
// Copyright (c) 2026 The diarmap Authors
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

// Small portable sampling helpers on top of std::mt19937_64. The standard
// distributions are implementation-defined, so results would differ between
// standard libraries; these do not.

#ifndef DIARMAP_RANDOM_H_
#define DIARMAP_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace diarmap {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent stream for sub-task `index` of a run seeded with `seed`.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 1)));
}

// Uniform double in [0, 1).
inline double uniform01(Rng &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Rng &rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Uniform integer in [0, n). n must be > 0.
inline std::uint64_t uniform_index(Rng &rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline bool coin_flip(Rng &rng) { return (rng() >> 63) != 0; }

template <typename T>
void shuffle(std::span<T> items, Rng &rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = uniform_index(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace diarmap

#endif  // DIARMAP_RANDOM_H_
