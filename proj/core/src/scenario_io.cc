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

#include "lorahop/scenario_io.h"

#include <json.hpp>

#include "lorahop/error.h"
#include "lorahop/io.h"

namespace lorahop {

using nlohmann::json;

namespace {

json schedule_json(const Schedule& schedule) {
  json cells = json::array();
  json hops = json::array();
  json triggers = json::array();
  for (int i = 0; i < schedule.nodes(); ++i) {
    for (int g = 0; g < schedule.gateways(); ++g) {
      for (int f = 0; f < schedule.frequencies(); ++f) {
        for (int t = 0; t < schedule.slots(); ++t) {
          if (schedule.x(i, g, f, t)) {
            cells.push_back({i, g, f, t, schedule.s(i, g, f, t)});
          }
        }
      }
    }
    for (int t = 0; t < schedule.slots(); ++t) {
      if (schedule.z(i, t)) hops.push_back({i, t});
    }
  }
  for (int g = 0; g < schedule.gateways(); ++g) {
    for (int f = 0; f < schedule.frequencies(); ++f) {
      for (int t = 0; t < schedule.slots(); ++t) {
        if (schedule.delta(g, f, t)) triggers.push_back({g, f, t});
      }
    }
  }
  return {{"nodes", schedule.nodes()},
          {"gateways", schedule.gateways()},
          {"frequencies", schedule.frequencies()},
          {"slots", schedule.slots()},
          {"cells", cells},
          {"hops", hops},
          {"triggers", triggers}};
}

}  // namespace

Scenario scenario_from_json(std::string_view text) {
  Scenario sc;
  try {
    const json j = json::parse(text);
    sc.num_nodes = j.at("num_nodes").get<int>();
    sc.num_gateways = j.at("num_gateways").get<int>();
    sc.horizon = j.at("horizon").get<int>();
    sc.frequencies_mhz = j.at("frequencies_mhz").get<std::vector<double>>();
    sc.gateway_capacity = j.at("gateway_capacity").get<std::vector<int>>();
    sc.freq_capacity = j.at("freq_capacity").get<std::vector<int>>();
    sc.min_symbols = j.at("min_symbols").get<int>();
    sc.demand = j.at("demand").get<std::vector<int>>();
    if (j.contains("must_transmit")) {
      sc.must_transmit =
          j.at("must_transmit").get<std::vector<std::vector<bool>>>();
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("scenario json: ") + e.what());
  }
  sc.check();
  return sc;
}

std::string scenario_to_json(const Scenario& sc) {
  json j = {{"num_nodes", sc.num_nodes},
            {"num_gateways", sc.num_gateways},
            {"horizon", sc.horizon},
            {"frequencies_mhz", sc.frequencies_mhz},
            {"gateway_capacity", sc.gateway_capacity},
            {"freq_capacity", sc.freq_capacity},
            {"min_symbols", sc.min_symbols},
            {"demand", sc.demand}};
  if (!sc.must_transmit.empty()) j["must_transmit"] = sc.must_transmit;
  return j.dump(2);
}

Scenario load_scenario(const std::filesystem::path& path) {
  return scenario_from_json(read_text_file(path));
}

std::string schedule_to_json(const Schedule& schedule) {
  return schedule_json(schedule).dump(2);
}

}  // namespace lorahop
