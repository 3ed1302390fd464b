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

#include "lorahop/random.h"

#include <cmath>
#include <numbers>

namespace lorahop {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t KeyedRandom::bits(
    std::initializer_list<std::uint64_t> key) const {
  std::uint64_t h = mix64(seed_);
  for (std::uint64_t k : key) h = mix64(h ^ mix64(k));
  return h;
}

double KeyedRandom::uniform(std::initializer_list<std::uint64_t> key) const {
  return static_cast<double>(bits(key) >> 11) * 0x1.0p-53;
}

double KeyedRandom::normal(std::initializer_list<std::uint64_t> key) const {
  const std::uint64_t h = bits(key);
  // 1 - u keeps the logarithm argument in (0, 1].
  const double u1 = 1.0 - static_cast<double>(mix64(h) >> 11) * 0x1.0p-53;
  const double u2 = static_cast<double>(mix64(h + 1) >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::mt19937_64 KeyedRandom::engine(
    std::initializer_list<std::uint64_t> key) const {
  return std::mt19937_64(bits(key));
}

}  // namespace lorahop
