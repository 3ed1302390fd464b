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

#include "lorahop/dataset.h"

#include <vector>

#include "lorahop/error.h"
#include "lorahop/random.h"

namespace lorahop::sim {

telemetry::Dataset generate_labeled_dataset(const ChannelTrace& trace,
                                            const SimConfig& config,
                                            int n_rows, std::uint64_t seed) {
  require(n_rows > 0, "n_rows must be > 0");
  for (const NodeConfig& n : config.nodes) {
    require(n.strategy.kind != StrategyKind::kPredictorHop,
            "dataset generation cannot use predictor_hop as behaviour");
  }
  telemetry::Dataset data;
  data.window_slots = config.window_slots;
  data.frequencies = static_cast<int>(trace.frequencies().size());
  data.rows.reserve(n_rows);

  for (std::uint64_t episode = 0;
       static_cast<int>(data.rows.size()) < n_rows; ++episode) {
    SimConfig episode_config = config;
    episode_config.rng_seed = mix64(seed ^ mix64(episode));
    Simulator sim(episode_config, trace);
    const int F = sim.num_channels();
    const int N = static_cast<int>(config.nodes.size());
    while (!sim.done() && static_cast<int>(data.rows.size()) < n_rows) {
      const std::vector<int> choices = sim.plan();
      std::vector<double> best(N, 0.0);
      std::vector<int> label(N, -1);
      std::vector<int> what_if = choices;
      for (int f = 0; f < F; ++f) {
        for (int i = 0; i < N; ++i) {
          what_if = choices;
          what_if[i] = f;
          const SlotEvent e = sim.resolve(what_if)[i];
          const double realised =
              e.delivered ? e.rssi : telemetry::kPaddingRssi;
          if (label[i] < 0 || realised > best[i]) {
            best[i] = realised;
            label[i] = f;
          }
        }
      }
      for (int i = 0; i < N && static_cast<int>(data.rows.size()) < n_rows;
           ++i) {
        data.rows.push_back({sim.window(i).snapshot(), label[i]});
      }
      sim.commit(choices, sim.resolve(choices));
    }
  }
  return data;
}

}  // namespace lorahop::sim
