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

// JSON form of a Scenario:
//
//   {
//     "num_nodes": 2, "num_gateways": 1, "horizon": 2,
//     "frequencies_mhz": [868.0, 869.0],
//     "gateway_capacity": [2],
//     "freq_capacity": [4, 4],
//     "min_symbols": 1,
//     "demand": [2, 2],
//     "must_transmit": [[true, true], [false, true]]   // optional
//   }

#ifndef LORAHOP_SCENARIO_IO_H_
#define LORAHOP_SCENARIO_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "lorahop/scenario.h"

namespace lorahop {

Scenario scenario_from_json(std::string_view text);
std::string scenario_to_json(const Scenario& scenario);
Scenario load_scenario(const std::filesystem::path& path);

// Active cells as [node, gateway, frequency, slot, symbols] rows plus the
// hop and trigger indicators that are set.
std::string schedule_to_json(const Schedule& schedule);

}  // namespace lorahop

#endif  // LORAHOP_SCENARIO_IO_H_
