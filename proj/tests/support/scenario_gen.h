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

// Random desk-scale scenarios shared by the property tests and the
// acceptance suite.

#ifndef LORAHOP_TESTS_SCENARIO_GEN_H_
#define LORAHOP_TESTS_SCENARIO_GEN_H_

#include <algorithm>
#include <random>

#include "lorahop/scenario.h"

namespace lorahop::testing {

struct GenLimits {
  int max_nodes = 3;
  int max_gateways = 2;
  int max_freqs = 2;
  int max_slots = 3;
  double must_transmit_p = 0.25;
};

inline int draw(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Scenario random_scenario(std::mt19937_64& rng,
                                const GenLimits& lim = {}) {
  Scenario sc;
  sc.num_nodes = draw(rng, 1, lim.max_nodes);
  sc.num_gateways = draw(rng, 1, lim.max_gateways);
  const int F = draw(rng, 1, lim.max_freqs);
  sc.horizon = draw(rng, 1, lim.max_slots);
  for (int f = 0; f < F; ++f) sc.frequencies_mhz.push_back(868.0 + f);
  for (int g = 0; g < sc.num_gateways; ++g) {
    sc.gateway_capacity.push_back(draw(rng, 1, sc.num_nodes));
  }
  for (int f = 0; f < F; ++f) sc.freq_capacity.push_back(draw(rng, 2, 4));
  sc.min_symbols = draw(rng, 1, *std::min_element(sc.freq_capacity.begin(),
                                                  sc.freq_capacity.end()));
  for (int i = 0; i < sc.num_nodes; ++i) {
    const int hi = sc.horizon * sc.min_symbols * 2;
    sc.demand.push_back(draw(rng, 0, 3) == 0 ? 0 : draw(rng, 1, hi));
  }
  if (std::bernoulli_distribution(0.4)(rng)) {
    sc.must_transmit.assign(sc.num_nodes,
                            std::vector<bool>(sc.horizon, false));
    for (auto& row : sc.must_transmit) {
      for (std::size_t t = 0; t < row.size(); ++t) {
        row[t] = std::bernoulli_distribution(lim.must_transmit_p)(rng);
      }
    }
  }
  return sc;
}

// F >= N, M_g >= N and every demand servable on one private carrier, so a
// collision-free schedule always exists.
inline Scenario roomy_scenario(std::mt19937_64& rng) {
  Scenario sc;
  sc.num_nodes = draw(rng, 1, 3);
  sc.num_gateways = draw(rng, 1, 2);
  const int F = draw(rng, sc.num_nodes, 3);
  sc.horizon = draw(rng, 1, 3);
  for (int f = 0; f < F; ++f) sc.frequencies_mhz.push_back(868.0 + f);
  for (int g = 0; g < sc.num_gateways; ++g) {
    sc.gateway_capacity.push_back(draw(rng, sc.num_nodes, sc.num_nodes + 1));
  }
  for (int f = 0; f < F; ++f) sc.freq_capacity.push_back(draw(rng, 2, 4));
  const int narrowest =
      *std::min_element(sc.freq_capacity.begin(), sc.freq_capacity.end());
  sc.min_symbols = draw(rng, 1, narrowest);
  for (int i = 0; i < sc.num_nodes; ++i) {
    // k active slots on one carrier carry between k * B_min and k * B_f.
    const int k = draw(rng, 0, sc.horizon);
    sc.demand.push_back(draw(rng, k * sc.min_symbols, k * narrowest));
  }
  return sc;
}

}  // namespace lorahop::testing

#endif  // LORAHOP_TESTS_SCENARIO_GEN_H_
