// Copyright 2026 The trisample Authors.
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

#ifndef TRISAMPLE_RANDOM_SOURCE_HPP_
#define TRISAMPLE_RANDOM_SOURCE_HPP_

#include <concepts>
#include <cstdint>
#include <random>

namespace trisample {

// Anything the estimators can draw from. RandomSource is the production
// model; tests substitute scripted sources to force sampling outcomes.
template <class S>
concept UniformSource = requires(S& s, std::uint64_t n) {
  { s.uniform_real() } -> std::same_as<double>;
  { s.uniform_index(n) } -> std::same_as<std::uint64_t>;
};

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seeded 64-bit Mersenne Twister stream. Single consumer; give each
// concurrent trial its own derive()d child.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // 53 random mantissa bits, so the result is in [0, 1).
  double uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n); n >= 1.
  std::uint64_t uniform_index(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }

  // Child stream seeded with mix64(seed + (child + 1) * golden_gamma).
  // Depends only on (seed, child), not on how far this stream has advanced.
  RandomSource derive(std::uint64_t child) const {
    return RandomSource(mix64(seed_ + (child + 1) * 0x9e3779b97f4a7c15ULL));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

static_assert(UniformSource<RandomSource>);

}  // namespace trisample

#endif  // TRISAMPLE_RANDOM_SOURCE_HPP_
