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

#ifndef LORAHOP_COMPARE_H_
#define LORAHOP_COMPARE_H_

#include <string>
#include <string_view>
#include <vector>

#include "lorahop/simulator.h"

namespace lorahop::sim {

// kObserved averages over every sent packet with losses at -120 dBm / 0 dB;
// kDelivered averages over delivered packets only.
enum class Metric { kObserved, kDelivered };
std::string_view metric_name(Metric m);
Metric parse_metric(std::string_view name);

struct SizeComparison {
  int size = 0;
  double rssi_a = 0.0, rssi_b = 0.0;
  double snr_a = 0.0, snr_b = 0.0;
  double pdr_a = 0.0, pdr_b = 0.0;
  // (|rssi_b| - |rssi_a|) / |rssi_b| * 100: positive when a is stronger.
  double rssi_improvement_pct = 0.0;
  // (snr_a - snr_b) / |snr_b| * 100.
  double snr_improvement_pct = 0.0;
  double pdr_delta = 0.0;  // pdr_a - pdr_b
};

// Per payload size, a against b. RSSI and SNR are averaged over the nodes of
// each report, PDR pools all packets. A zero baseline gives 0 % when a
// equals it. Throws InputError when the reports cover different sizes.
std::vector<SizeComparison> compare_strategies(const SimReport& a,
                                               const SimReport& b,
                                               Metric metric = Metric::kObserved);

// size,rssi_a,rssi_b,rssi_improvement_pct,snr_a,snr_b,snr_improvement_pct,
// pdr_a,pdr_b,pdr_delta
std::string comparison_to_csv(const std::vector<SizeComparison>& table);

}  // namespace lorahop::sim

#endif  // LORAHOP_COMPARE_H_
