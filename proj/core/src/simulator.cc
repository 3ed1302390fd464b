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

#include "lorahop/simulator.h"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "lorahop/error.h"
#include "lorahop/io.h"

namespace lorahop::sim {
namespace {

using nlohmann::json;

// Stream tags keep the keyed draws of different purposes independent.
enum : std::uint64_t {
  kTagHop = 1,
  kTagLoss = 2,
  kTagRssi = 3,
  kTagSnr = 4,
};

constexpr int kMaxRedraws = 32;

std::string_view placement_name(Placement p) {
  return p == Placement::kGateway ? "gateway" : "end_node";
}

std::string_view delivery_name(DeliveryModel d) {
  return d == DeliveryModel::kBernoulli ? "bernoulli" : "stratified";
}

std::string_view granularity_name(HopGranularity g) {
  return g == HopGranularity::kSizeBlock ? "size_block" : "packet";
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

json number_or_null(double v) {
  return std::isnan(v) ? json(nullptr) : json(v);
}

double number_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN()
                     : j.get<double>();
}

}  // namespace

std::string_view strategy_kind_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kFixed:
      return "fixed";
    case StrategyKind::kRandomHop:
      return "random_hop";
    case StrategyKind::kSensingHop:
      return "sensing_hop";
    case StrategyKind::kPredictorHop:
      return "predictor_hop";
  }
  return "?";
}

StrategyKind parse_strategy_kind(std::string_view name) {
  for (StrategyKind k :
       {StrategyKind::kFixed, StrategyKind::kRandomHop,
        StrategyKind::kSensingHop, StrategyKind::kPredictorHop}) {
    if (strategy_kind_name(k) == name) return k;
  }
  throw InputError("unknown strategy '" + std::string(name) + "'");
}

std::string strategy_label(const Strategy& s) {
  std::string out(strategy_kind_name(s.kind));
  if (s.kind == StrategyKind::kFixed) out += "@" + format_number(s.freq_mhz);
  return out;
}

SimConfig sim_config_from_json(std::string_view text) {
  SimConfig c;
  try {
    const json j = json::parse(text);
    require(j.is_object(), "simulation config must be a JSON object");
    c.payload_schedule =
        get_or<std::vector<int>>(j, "payload_schedule", c.payload_schedule);
    c.packets_per_size = get_or(j, "packets_per_size", c.packets_per_size);
    c.rng_seed = get_or<std::uint64_t>(j, "rng_seed", c.rng_seed);
    c.capture_threshold_db =
        get_or(j, "capture_threshold_db", c.capture_threshold_db);
    c.rssi_jitter_db = get_or(j, "rssi_jitter_db", c.rssi_jitter_db);
    c.snr_jitter_db = get_or(j, "snr_jitter_db", c.snr_jitter_db);
    c.window_slots = get_or(j, "window_slots", c.window_slots);
    const auto placement =
        get_or<std::string>(j, "predictor_placement", "end_node");
    if (placement == "end_node") {
      c.placement = Placement::kEndNode;
    } else if (placement == "gateway") {
      c.placement = Placement::kGateway;
    } else {
      throw InputError("predictor_placement must be end_node or gateway");
    }
    const auto delivery = get_or<std::string>(j, "delivery", "stratified");
    if (delivery == "stratified") {
      c.delivery = DeliveryModel::kStratified;
    } else if (delivery == "bernoulli") {
      c.delivery = DeliveryModel::kBernoulli;
    } else {
      throw InputError("delivery must be stratified or bernoulli");
    }
    const auto granularity =
        get_or<std::string>(j, "random_hop_granularity", "packet");
    if (granularity == "packet") {
      c.random_hop_granularity = HopGranularity::kPacket;
    } else if (granularity == "size_block") {
      c.random_hop_granularity = HopGranularity::kSizeBlock;
    } else {
      throw InputError("random_hop_granularity must be packet or size_block");
    }
    require(j.contains("nodes") && j.at("nodes").is_array(),
            "simulation config needs a 'nodes' array");
    for (const json& n : j.at("nodes")) {
      NodeConfig node;
      node.source = n.at("source").get<std::string>();
      node.gateway = get_or(n, "gateway", 0);
      node.phase = get_or(n, "phase", 0);
      node.strategy.kind = parse_strategy_kind(
          get_or<std::string>(n, "strategy", "random_hop"));
      if (node.strategy.kind == StrategyKind::kFixed) {
        require(n.contains("freq_mhz"), "fixed strategy needs freq_mhz");
        node.strategy.freq_mhz = n.at("freq_mhz").get<double>();
      }
      c.nodes.push_back(std::move(node));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("bad simulation config: ") + e.what());
  }
  return c;
}

std::string sim_config_to_json(const SimConfig& c) {
  json nodes = json::array();
  for (const NodeConfig& n : c.nodes) {
    json node = {{"source", n.source},
                 {"gateway", n.gateway},
                 {"phase", n.phase},
                 {"strategy", strategy_kind_name(n.strategy.kind)}};
    if (n.strategy.kind == StrategyKind::kFixed) {
      node["freq_mhz"] = n.strategy.freq_mhz;
    }
    nodes.push_back(std::move(node));
  }
  const json j = {{"payload_schedule", c.payload_schedule},
                  {"packets_per_size", c.packets_per_size},
                  {"rng_seed", c.rng_seed},
                  {"capture_threshold_db", c.capture_threshold_db},
                  {"rssi_jitter_db", c.rssi_jitter_db},
                  {"snr_jitter_db", c.snr_jitter_db},
                  {"predictor_placement", placement_name(c.placement)},
                  {"window_slots", c.window_slots},
                  {"delivery", delivery_name(c.delivery)},
                  {"random_hop_granularity",
                   granularity_name(c.random_hop_granularity)},
                  {"nodes", nodes}};
  return j.dump(2);
}

Simulator::Simulator(SimConfig config, const ChannelTrace& trace,
                     const predictor::FcnnModel* model)
    : config_(std::move(config)),
      trace_(trace),
      model_(model),
      freqs_(trace.frequencies()),
      rng_(config_.rng_seed) {
  const SimConfig& c = config_;
  require(!c.nodes.empty(), "simulation needs at least one node");
  require(!c.payload_schedule.empty(), "payload schedule is empty");
  require(c.packets_per_size >= 1, "packets_per_size must be >= 1");
  require(c.window_slots >= 1, "window_slots must be >= 1");
  require(c.capture_threshold_db >= 0.0, "capture threshold must be >= 0");
  require(c.rssi_jitter_db >= 0.0 && c.snr_jitter_db >= 0.0,
          "jitter must be >= 0");
  require(!freqs_.empty(), "trace has no carriers");
  const int F = num_channels();

  bool needs_model = false;
  for (const NodeConfig& n : c.nodes) {
    require(n.gateway >= 0 && n.phase >= 0,
            "node gateway and phase must be >= 0");
    for (int size : c.payload_schedule) {
      for (double f : freqs_) {
        if (!trace_.contains(n.source, f, size)) {
          throw InputError("trace has no cell for source '" + n.source +
                           "', " + format_number(f) + " MHz, " +
                           std::to_string(size) + " bytes");
        }
      }
    }
    needs_model |= n.strategy.kind == StrategyKind::kPredictorHop;
  }
  if (needs_model) {
    require(model_ != nullptr, "predictor_hop needs a model");
    if (model_->output_dim() != F) {
      throw InputError("model predicts " +
                       std::to_string(model_->output_dim()) +
                       " channels but the trace has " + std::to_string(F));
    }
    const int want = telemetry::feature_length(c.window_slots, F);
    if (model_->input_dim() != want) {
      throw InputError("model expects " + std::to_string(model_->input_dim()) +
                       " features but a " + std::to_string(c.window_slots) +
                       "-slot window yields " + std::to_string(want));
    }
  }

  nodes_.reserve(c.nodes.size());
  for (const NodeConfig& n : c.nodes) {
    NodeState s{telemetry::TelemetryWindow(c.window_slots, F),
                telemetry::TelemetryWindow(c.window_slots, F)};
    if (n.strategy.kind == StrategyKind::kFixed) {
      s.fixed_channel = channel_index(n.strategy.freq_mhz);
    }
    if (n.strategy.kind == StrategyKind::kPredictorHop &&
        c.placement == Placement::kGateway) {
      s.gateway_decision_now =
          predictor::predict_channel(*model_, s.gateway_window);
      s.gateway_decision_next = s.gateway_decision_now;
    }
    nodes_.push_back(std::move(s));
  }
}

int Simulator::channel_index(double mhz) const {
  for (int k = 0; k < num_channels(); ++k) {
    if (std::llround(freqs_[k] * 1000.0) == std::llround(mhz * 1000.0)) {
      return k;
    }
  }
  throw InputError("carrier " + format_number(mhz) + " MHz is not in the trace");
}

int Simulator::total_slots() const {
  return static_cast<int>(config_.payload_schedule.size()) *
         config_.packets_per_size;
}

std::vector<int> Simulator::plan() const {
  const int F = num_channels();
  const int size_index = slot_ / config_.packets_per_size;
  std::vector<int> choices(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const NodeState& s = nodes_[i];
    const Strategy& strategy = config_.nodes[i].strategy;
    switch (strategy.kind) {
      case StrategyKind::kFixed:
        choices[i] = s.fixed_channel;
        break;
      case StrategyKind::kRandomHop: {
        const bool per_block =
            config_.random_hop_granularity == HopGranularity::kSizeBlock;
        const auto key = static_cast<std::uint64_t>(per_block ? size_index
                                                              : slot_);
        choices[i] = static_cast<int>(
            rng_.bits({kTagHop, i, per_block, key}) % static_cast<unsigned>(F));
        break;
      }
      case StrategyKind::kSensingHop: {
        const int current = std::max(s.previous, 0);
        if (s.window.empty()) {
          choices[i] = current;
          break;
        }
        const std::vector<int>& load = s.window.latest_availability();
        choices[i] = load[current] <= 1
                         ? current
                         : static_cast<int>(
                               std::min_element(load.begin(), load.end()) -
                               load.begin());
        break;
      }
      case StrategyKind::kPredictorHop:
        choices[i] = config_.placement == Placement::kGateway
                         ? s.gateway_decision_now
                         : predictor::predict_channel(*model_, s.window);
        break;
    }
  }
  return choices;
}

bool Simulator::link_delivers(int node, int channel, int size_index,
                              int packet, double pdr) const {
  if (config_.delivery == DeliveryModel::kBernoulli) {
    return rng_.uniform({kTagLoss, static_cast<std::uint64_t>(node),
                         static_cast<std::uint64_t>(slot_),
                         static_cast<std::uint64_t>(channel)}) < pdr;
  }
  const int P = config_.packets_per_size;
  const long long lost = P - std::llround(pdr * P);
  if (lost <= 0) return true;
  std::vector<int> order(P);
  std::iota(order.begin(), order.end(), 0);
  auto engine = rng_.engine({kTagLoss, static_cast<std::uint64_t>(node),
                             static_cast<std::uint64_t>(channel),
                             static_cast<std::uint64_t>(size_index)});
  std::shuffle(order.begin(), order.end(), engine);
  return order[packet] >= lost;
}

std::vector<SlotEvent> Simulator::resolve(std::span<const int> choices) const {
  require(!done(), "simulation already finished");
  require(choices.size() == nodes_.size(), "one channel choice per node");
  const int P = config_.packets_per_size;
  const int size_index = slot_ / P;
  const int packet = slot_ % P;
  const int size = config_.payload_schedule[size_index];

  std::vector<SlotEvent> events(nodes_.size());
  std::vector<bool> link_ok(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const int ch = choices[i];
    require(ch >= 0 && ch < num_channels(), "channel choice out of range");
    const NodeConfig& n = config_.nodes[i];
    const TraceStats& cell = trace_.at(n.source, freqs_[ch], size);
    const auto node = static_cast<std::uint64_t>(i);
    const auto slot = static_cast<std::uint64_t>(slot_);
    const auto chan = static_cast<std::uint64_t>(ch);

    double rssi = cell.mean_rssi;
    if (config_.rssi_jitter_db > 0.0) {
      // Redraw until non-positive so jitter cannot push RSSI above 0 dBm.
      for (std::uint64_t attempt = 0; attempt < kMaxRedraws; ++attempt) {
        rssi = cell.mean_rssi +
               config_.rssi_jitter_db *
                   rng_.normal({kTagRssi, node, slot, chan, attempt});
        if (rssi <= 0.0) break;
      }
      rssi = std::min(rssi, 0.0);
    }
    double snr = cell.mean_snr;
    if (config_.snr_jitter_db > 0.0) {
      snr += config_.snr_jitter_db * rng_.normal({kTagSnr, node, slot, chan});
    }

    SlotEvent& e = events[i];
    e.slot = slot_;
    e.node = static_cast<int>(i);
    e.gateway = n.gateway;
    e.channel = ch;
    e.freq_mhz = freqs_[ch];
    e.size = size;
    e.rssi = rssi;
    e.snr = snr;
    e.hopped = nodes_[i].previous >= 0 && nodes_[i].previous != ch;
    link_ok[i] = link_delivers(e.node, ch, size_index, packet, cell.pdr);
  }

  // Contention domains: same gateway, carrier and phase.
  std::map<std::tuple<int, int, int>, std::vector<int>> groups;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    groups[{config_.nodes[i].gateway, choices[i], config_.nodes[i].phase}]
        .push_back(static_cast<int>(i));
  }
  for (auto& [key, members] : groups) {
    if (members.size() == 1) {
      const int i = members[0];
      events[i].delivered = link_ok[i];
      continue;
    }
    std::stable_sort(members.begin(), members.end(), [&](int a, int b) {
      return events[a].rssi > events[b].rssi;
    });
    const bool captured = events[members[0]].rssi - events[members[1]].rssi >=
                          config_.capture_threshold_db;
    for (int i : members) {
      events[i].collided = true;
      events[i].delivered = false;
    }
    if (captured) events[members[0]].delivered = link_ok[members[0]];
  }
  return events;
}

std::vector<int> Simulator::availability(std::span<const int> choices,
                                         int node) const {
  // Counts every node in the contention domain, the observer included.
  std::vector<int> load(num_channels(), 0);
  const NodeConfig& me = config_.nodes[node];
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    const NodeConfig& other = config_.nodes[j];
    if (other.gateway == me.gateway && other.phase == me.phase) {
      ++load[choices[j]];
    }
  }
  return load;
}

void Simulator::commit(std::span<const int> choices,
                       std::span<const SlotEvent> events) {
  require(choices.size() == nodes_.size() && events.size() == nodes_.size(),
          "commit needs one choice and one event per node");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    NodeState& s = nodes_[i];
    const SlotEvent& e = events[i];
    const std::vector<int> load = availability(choices, static_cast<int>(i));
    s.window.record(load, e.delivered ? e.rssi : telemetry::kPaddingRssi,
                    e.delivered ? e.snr : telemetry::kPaddingSnr);
    if (config_.nodes[i].strategy.kind == StrategyKind::kPredictorHop &&
        config_.placement == Placement::kGateway) {
      if (e.delivered) s.gateway_window.record(load, e.rssi, e.snr);
      s.gateway_decision_now = s.gateway_decision_next;
      s.gateway_decision_next =
          predictor::predict_channel(*model_, s.gateway_window);
    }
    s.previous = choices[i];
  }
  ++slot_;
}

std::vector<SlotEvent> Simulator::step() {
  const std::vector<int> choices = plan();
  std::vector<SlotEvent> events = resolve(choices);
  commit(choices, events);
  return events;
}

SimReport run(const SimConfig& config, const ChannelTrace& trace,
              const predictor::FcnnModel* model) {
  Simulator sim(config, trace, model);
  SimReport report;
  report.frequencies = sim.frequencies();
  const int sizes = static_cast<int>(config.payload_schedule.size());
  const int N = static_cast<int>(config.nodes.size());
  report.rows.resize(static_cast<std::size_t>(N) * sizes);
  for (int i = 0; i < N; ++i) {
    for (int k = 0; k < sizes; ++k) {
      ReportRow& row = report.rows[i * sizes + k];
      row.node = i;
      row.source = config.nodes[i].source;
      row.size = config.payload_schedule[k];
      row.strategy = strategy_label(config.nodes[i].strategy);
      row.mean_rssi = row.mean_snr = std::numeric_limits<double>::quiet_NaN();
    }
  }
  report.events.reserve(static_cast<std::size_t>(N) * sim.total_slots());

  while (!sim.done()) {
    const int size_index = sim.slot() / config.packets_per_size;
    for (const SlotEvent& e : sim.step()) {
      ReportRow& row = report.rows[e.node * sizes + size_index];
      ++row.sent;
      row.collisions += e.collided;
      row.hops += e.hopped;
      // Incremental means stay exact when every sample equals the mean.
      const double seen_rssi = e.delivered ? e.rssi : telemetry::kPaddingRssi;
      const double seen_snr = e.delivered ? e.snr : telemetry::kPaddingSnr;
      const double n_sent = static_cast<double>(row.sent);
      if (row.sent == 1) {
        row.observed_rssi = seen_rssi;
        row.observed_snr = seen_snr;
      } else {
        row.observed_rssi += (seen_rssi - row.observed_rssi) / n_sent;
        row.observed_snr += (seen_snr - row.observed_snr) / n_sent;
      }
      if (e.delivered) {
        ++row.delivered;
        if (row.delivered == 1) {
          row.mean_rssi = e.rssi;
          row.mean_snr = e.snr;
        } else {
          const double n = static_cast<double>(row.delivered);
          row.mean_rssi += (e.rssi - row.mean_rssi) / n;
          row.mean_snr += (e.snr - row.mean_snr) / n;
        }
      }
      report.events.push_back(e);
    }
  }
  for (ReportRow& row : report.rows) {
    row.pdr = static_cast<double>(row.delivered) / static_cast<double>(row.sent);
  }
  return report;
}

std::string report_to_json(const SimReport& report) {
  json rows = json::array();
  for (const ReportRow& r : report.rows) {
    rows.push_back({{"node", r.node},
                    {"source", r.source},
                    {"size", r.size},
                    {"strategy", r.strategy},
                    {"sent", r.sent},
                    {"delivered", r.delivered},
                    {"pdr", r.pdr},
                    {"mean_rssi", number_or_null(r.mean_rssi)},
                    {"mean_snr", number_or_null(r.mean_snr)},
                    {"observed_rssi", r.observed_rssi},
                    {"observed_snr", r.observed_snr},
                    {"collisions", r.collisions},
                    {"hops", r.hops}});
  }
  const json j = {{"frequencies_mhz", report.frequencies}, {"rows", rows}};
  return j.dump(2);
}

SimReport report_from_json(std::string_view text) {
  SimReport report;
  try {
    const json j = json::parse(text);
    report.frequencies =
        j.at("frequencies_mhz").get<std::vector<double>>();
    for (const json& r : j.at("rows")) {
      ReportRow row;
      row.node = r.at("node").get<int>();
      row.source = r.at("source").get<std::string>();
      row.size = r.at("size").get<int>();
      row.strategy = r.at("strategy").get<std::string>();
      row.sent = r.at("sent").get<long long>();
      row.delivered = r.at("delivered").get<long long>();
      row.pdr = r.at("pdr").get<double>();
      row.mean_rssi = number_from(r.at("mean_rssi"));
      row.mean_snr = number_from(r.at("mean_snr"));
      row.observed_rssi = r.at("observed_rssi").get<double>();
      row.observed_snr = r.at("observed_snr").get<double>();
      row.collisions = r.at("collisions").get<long long>();
      row.hops = r.at("hops").get<long long>();
      require(row.sent >= 1 && row.delivered >= 0 && row.delivered <= row.sent,
              "report row has inconsistent packet counts");
      report.rows.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("bad simulation report: ") + e.what());
  }
  return report;
}

std::string events_to_csv(const SimReport& report) {
  std::ostringstream out;
  out << "slot,node,gateway,freq_mhz,size,rssi,snr,delivered,collided,hopped\n";
  for (const SlotEvent& e : report.events) {
    out << e.slot << ',' << e.node << ',' << e.gateway << ','
        << format_number(e.freq_mhz) << ',' << e.size << ','
        << format_number(e.rssi) << ',' << format_number(e.snr) << ','
        << e.delivered << ',' << e.collided << ',' << e.hopped << '\n';
  }
  return out.str();
}

}  // namespace lorahop::sim
