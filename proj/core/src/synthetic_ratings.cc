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

#include "lorahop/synthetic_ratings.h"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <random>
#include <vector>

#include "lorahop/error.h"
#include "lorahop/random.h"

namespace lorahop::rec {
namespace {

using nlohmann::json;

void check(const SyntheticRatingsConfig& c) {
  require(c.soils >= 1 && c.plants >= 1, "soils and plants must be >= 1");
  require(c.archetypes >= 1, "archetypes must be >= 1");
  require(c.affinity_spread >= 0.0 && c.affinity_spread < 1.0,
          "affinity_spread must be in [0, 1)");
  require(c.noise_sd >= 0.0, "noise_sd must be >= 0");
  double total = 0.0;
  for (double w : c.rating_weights) {
    require(w >= 0.0 && std::isfinite(w), "rating weights must be >= 0");
    total += w;
  }
  require(total > 0.0, "rating weights must not all be zero");
}

}  // namespace

SyntheticRatingsConfig synthetic_config_from_json(std::string_view text) {
  SyntheticRatingsConfig c;
  try {
    const json j = json::parse(text);
    require(j.is_object(), "ratings generator config must be an object");
    c.soils = j.value("soils", c.soils);
    c.plants = j.value("plants", c.plants);
    c.archetypes = j.value("archetypes", c.archetypes);
    c.affinity_spread = j.value("affinity_spread", c.affinity_spread);
    c.noise_sd = j.value("noise_sd", c.noise_sd);
    if (j.contains("rating_weights")) {
      const auto w = j.at("rating_weights").get<std::vector<double>>();
      require(w.size() == kRatingLevels, "rating_weights needs 5 values");
      std::copy(w.begin(), w.end(), c.rating_weights.begin());
    }
    c.seed = j.value("seed", c.seed);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad ratings generator config: ") + e.what());
  }
  check(c);
  return c;
}

std::string synthetic_config_to_json(const SyntheticRatingsConfig& c) {
  const json j = {{"soils", c.soils},
                  {"plants", c.plants},
                  {"archetypes", c.archetypes},
                  {"affinity_spread", c.affinity_spread},
                  {"noise_sd", c.noise_sd},
                  {"rating_weights", c.rating_weights},
                  {"seed", c.seed}};
  return j.dump(2);
}

RatingsMatrix generate_ratings(const SyntheticRatingsConfig& c) {
  check(c);
  std::mt19937_64 rng(mix64(c.seed));
  std::discrete_distribution<int> value(c.rating_weights.begin(),
                                        c.rating_weights.end());
  std::vector<std::vector<int>> profiles(c.archetypes,
                                         std::vector<int>(c.plants));
  for (auto& profile : profiles) {
    for (int& v : profile) v = kMinRating + value(rng);
  }
  std::uniform_int_distribution<int> archetype(0, c.archetypes - 1);
  std::uniform_real_distribution<double> affinity(1.0 - c.affinity_spread,
                                                  1.0 + c.affinity_spread);
  std::normal_distribution<double> noise(0.0, 1.0);

  RatingsMatrix m(c.soils, c.plants);
  for (int i = 0; i < c.soils; ++i) {
    const auto& profile = profiles[archetype(rng)];
    const double a = affinity(rng);
    for (int j = 0; j < c.plants; ++j) {
      const double raw = a * profile[j] + c.noise_sd * noise(rng);
      const int r = static_cast<int>(std::floor(raw + 0.5));
      m.set(i, j, std::clamp(r, kMinRating, kMaxRating));
    }
  }
  return m;
}

}  // namespace lorahop::rec
