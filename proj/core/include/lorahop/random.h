// Copyright 2026 The lorahop Authors
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

#ifndef LORAHOP_RANDOM_H_
#define LORAHOP_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace lorahop {

// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

/// Counter-based randomness: every draw is a pure function of (seed, key).
/// Replaying a slot with a different channel choice therefore sees exactly
/// the same draws for every other (node, slot, channel) key.
class KeyedRandom {
 public:
  explicit KeyedRandom(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t bits(std::initializer_list<std::uint64_t> key) const;
  // Uniform on [0, 1) with 53 random bits.
  double uniform(std::initializer_list<std::uint64_t> key) const;
  // Standard normal via Box-Muller over two derived uniforms.
  double normal(std::initializer_list<std::uint64_t> key) const;
  // A sequential engine for a whole keyed stream (shuffles and the like).
  std::mt19937_64 engine(std::initializer_list<std::uint64_t> key) const;

 private:
  std::uint64_t seed_;
};

}  // namespace lorahop

#endif  // LORAHOP_RANDOM_H_
