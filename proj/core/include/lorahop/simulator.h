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

// Slotted replay of LoRa end-nodes against a measured channel trace.
//
// Every node sends packets_per_size packets of each payload size in turn, one
// per slot. Per packet the link draws delivery and RSSI/SNR from the trace
// cell (source, carrier, size); packets that meet on the same (gateway,
// carrier, slot, phase) then go through the capture rule.

#ifndef LORAHOP_SIMULATOR_H_
#define LORAHOP_SIMULATOR_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lorahop/fcnn.h"
#include "lorahop/random.h"
#include "lorahop/telemetry.h"
#include "lorahop/trace.h"

namespace lorahop::sim {

enum class StrategyKind { kFixed, kRandomHop, kSensingHop, kPredictorHop };

struct Strategy {
  StrategyKind kind = StrategyKind::kRandomHop;
  double freq_mhz = 0.0;  // kFixed only

  static Strategy fixed(double mhz) { return {StrategyKind::kFixed, mhz}; }
  static Strategy random_hop() { return {StrategyKind::kRandomHop, 0.0}; }
  static Strategy sensing_hop() { return {StrategyKind::kSensingHop, 0.0}; }
  static Strategy predictor_hop() {
    return {StrategyKind::kPredictorHop, 0.0};
  }
  friend bool operator==(const Strategy&, const Strategy&) = default;
};

// "fixed", "random_hop", "sensing_hop", "predictor_hop".
std::string_view strategy_kind_name(StrategyKind kind);
StrategyKind parse_strategy_kind(std::string_view name);
// Report label: the kind name, plus "@<MHz>" for fixed.
std::string strategy_label(const Strategy& s);

// Where the predictor runs. At the gateway the window only holds delivered
// packets and a decision reaches the node one packet late.
enum class Placement { kEndNode, kGateway };

// kStratified loses exactly P - round(pdr * P) of the P packets a node would
// send in a size block on a carrier, at seeded positions; kBernoulli draws
// each packet independently.
enum class DeliveryModel { kStratified, kBernoulli };

// When random_hop draws a new carrier.
enum class HopGranularity { kPacket, kSizeBlock };

struct NodeConfig {
  std::string source;
  int gateway = 0;
  int phase = 0;  // nodes in different phases never overlap in time
  Strategy strategy;
  friend bool operator==(const NodeConfig&, const NodeConfig&) = default;
};

struct SimConfig {
  std::vector<int> payload_schedule = {30, 74, 118, 162, 206, 250};
  int packets_per_size = 50;
  std::uint64_t rng_seed = 1;
  double capture_threshold_db = 6.0;
  double rssi_jitter_db = 1.0;
  double snr_jitter_db = 0.5;
  Placement placement = Placement::kEndNode;
  int window_slots = telemetry::kDefaultWindowSlots;
  DeliveryModel delivery = DeliveryModel::kStratified;
  HopGranularity random_hop_granularity = HopGranularity::kPacket;
  std::vector<NodeConfig> nodes;
  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

// Missing fields take the defaults above. Throws InputError.
SimConfig sim_config_from_json(std::string_view text);
std::string sim_config_to_json(const SimConfig& config);

struct SlotEvent {
  int slot = 0;
  int node = 0;
  int gateway = 0;
  int channel = 0;  // index into the trace's ascending carrier list
  double freq_mhz = 0.0;
  int size = 0;
  double rssi = 0.0;  // drawn link values, also for lost packets
  double snr = 0.0;
  bool delivered = false;
  bool collided = false;
  bool hopped = false;
};

class Simulator {
 public:
  // Throws InputError for an invalid config, sizes or carriers absent from
  // the trace, or a predictor node without a model of matching shape.
  Simulator(SimConfig config, const ChannelTrace& trace,
            const predictor::FcnnModel* model = nullptr);

  int total_slots() const;
  int slot() const { return slot_; }
  bool done() const { return slot_ >= total_slots(); }
  int num_channels() const { return static_cast<int>(freqs_.size()); }
  const std::vector<double>& frequencies() const { return freqs_; }
  const SimConfig& config() const { return config_; }

  // Carrier index each node's strategy picks for the current slot.
  std::vector<int> plan() const;
  // Outcome of the current slot under `choices`. Pure: the same choices give
  // the same events, and a node's draws do not depend on other nodes'.
  std::vector<SlotEvent> resolve(std::span<const int> choices) const;
  // Feeds the outcome back into telemetry and advances one slot.
  void commit(std::span<const int> choices,
              std::span<const SlotEvent> events);
  // plan, resolve, commit.
  std::vector<SlotEvent> step();

  // The node-side telemetry window.
  const telemetry::TelemetryWindow& window(int node) const {
    return nodes_[node].window;
  }

 private:
  struct NodeState {
    telemetry::TelemetryWindow window;
    telemetry::TelemetryWindow gateway_window;
    int previous = -1;
    int gateway_decision_now = 0;
    int gateway_decision_next = 0;
    int fixed_channel = 0;
  };

  int channel_index(double mhz) const;
  bool link_delivers(int node, int channel, int size_index, int packet,
                     double pdr) const;
  std::vector<int> availability(std::span<const int> choices,
                                int node) const;

  SimConfig config_;
  const ChannelTrace& trace_;
  const predictor::FcnnModel* model_;
  std::vector<double> freqs_;
  KeyedRandom rng_;
  std::vector<NodeState> nodes_;
  int slot_ = 0;
};

struct ReportRow {
  int node = 0;
  std::string source;
  int size = 0;
  std::string strategy;
  long long sent = 0;
  long long delivered = 0;
  double pdr = 0.0;
  // Over delivered packets; NaN when none arrived.
  double mean_rssi = 0.0;
  double mean_snr = 0.0;
  // Over all sent packets, a lost packet counting as -120 dBm / 0 dB.
  double observed_rssi = 0.0;
  double observed_snr = 0.0;
  long long collisions = 0;
  long long hops = 0;
};

struct SimReport {
  std::vector<double> frequencies;
  std::vector<ReportRow> rows;  // node-major, then schedule order
  std::vector<SlotEvent> events;
};

SimReport run(const SimConfig& config, const ChannelTrace& trace,
              const predictor::FcnnModel* model = nullptr);

std::string report_to_json(const SimReport& report);
SimReport report_from_json(std::string_view text);
// Columns: slot,node,gateway,freq_mhz,size,rssi,snr,delivered,collided,hopped
std::string events_to_csv(const SimReport& report);

}  // namespace lorahop::sim

#endif  // LORAHOP_SIMULATOR_H_
