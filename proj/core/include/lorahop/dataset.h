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

#ifndef LORAHOP_DATASET_H_
#define LORAHOP_DATASET_H_

#include <cstdint>

#include "lorahop/simulator.h"
#include "lorahop/telemetry.h"
#include "lorahop/trace.h"

namespace lorahop::sim {

inline constexpr int kDefaultDatasetRows = 5000;

/// Labelled telemetry from counterfactual replay.
///
/// Runs `config` (its strategies act as the behaviour policy) and, before
/// every slot, snapshots each node's window. The slot is then resolved once
/// per candidate carrier with the other nodes' choices held fixed; the label
/// is the carrier with the highest realised RSSI, a lost packet counting as
/// -120 dBm, ties to the lowest index. Episodes repeat with derived seeds
/// until `n_rows` rows exist. Throws InputError for n_rows <= 0 or a config
/// the simulator rejects.
telemetry::Dataset generate_labeled_dataset(const ChannelTrace& trace,
                                            const SimConfig& config,
                                            int n_rows, std::uint64_t seed);

}  // namespace lorahop::sim

#endif  // LORAHOP_DATASET_H_
