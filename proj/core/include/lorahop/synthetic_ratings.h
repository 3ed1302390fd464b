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

#ifndef LORAHOP_SYNTHETIC_RATINGS_H_
#define LORAHOP_SYNTHETIC_RATINGS_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "lorahop/ratings.h"

namespace lorahop::rec {

/// Low-rank soil-archetype model. Each archetype has an integer plant
/// profile drawn from `rating_weights`; each soil belongs to one archetype
/// and scales its profile by an affinity near 1:
///
///   rating(i, j) = clamp(round(affinity_i * profile_{a(i)}[j] + noise), 1, 5)
struct SyntheticRatingsConfig {
  int soils = 500;
  int plants = 20;
  int archetypes = 5;
  double affinity_spread = 0.08;  // affinity ~ U(1 - spread, 1 + spread)
  double noise_sd = 0.15;
  // Relative frequency of profile values 1..5.
  std::array<double, kRatingLevels> rating_weights = {0.30, 0.28, 0.22,
                                                      0.12, 0.08};
  std::uint64_t seed = 1;
  friend bool operator==(const SyntheticRatingsConfig&,
                         const SyntheticRatingsConfig&) = default;
};

// Missing fields keep their defaults. Throws InputError.
SyntheticRatingsConfig synthetic_config_from_json(std::string_view text);
std::string synthetic_config_to_json(const SyntheticRatingsConfig& config);

RatingsMatrix generate_ratings(const SyntheticRatingsConfig& config);

}  // namespace lorahop::rec

#endif  // LORAHOP_SYNTHETIC_RATINGS_H_
