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

#include "lorahop/scenario.h"

#include <algorithm>
#include <sstream>

#include "lorahop/error.h"

namespace lorahop {

bool Scenario::transmit_required(int node, int slot) const {
  if (must_transmit.empty()) return false;
  return must_transmit[node][slot];
}

void Scenario::check() const {
  require(num_nodes >= 1, "scenario: num_nodes must be positive");
  require(num_gateways >= 1, "scenario: num_gateways must be positive");
  require(horizon >= 1, "scenario: horizon must be positive");
  require(!frequencies_mhz.empty(), "scenario: at least one frequency");
  for (std::size_t a = 0; a < frequencies_mhz.size(); ++a) {
    for (std::size_t b = a + 1; b < frequencies_mhz.size(); ++b) {
      require(frequencies_mhz[a] != frequencies_mhz[b],
              "scenario: frequencies must be distinct");
    }
  }
  require(static_cast<int>(gateway_capacity.size()) == num_gateways,
          "scenario: gateway_capacity needs one entry per gateway");
  require(std::all_of(gateway_capacity.begin(), gateway_capacity.end(),
                      [](int m) { return m >= 1; }),
          "scenario: gateway_capacity entries must be positive");
  require(static_cast<int>(freq_capacity.size()) == num_frequencies(),
          "scenario: freq_capacity needs one entry per frequency");
  require(std::all_of(freq_capacity.begin(), freq_capacity.end(),
                      [](int b) { return b >= 1; }),
          "scenario: freq_capacity entries must be positive");
  require(min_symbols >= 1, "scenario: min_symbols must be positive");
  require(min_symbols <=
              *std::min_element(freq_capacity.begin(), freq_capacity.end()),
          "scenario: min_symbols exceeds the smallest frequency capacity");
  require(static_cast<int>(demand.size()) == num_nodes,
          "scenario: demand needs one entry per node");
  require(std::all_of(demand.begin(), demand.end(),
                      [](int d) { return d >= 0; }),
          "scenario: demand entries must be nonnegative");
  if (!must_transmit.empty()) {
    require(static_cast<int>(must_transmit.size()) == num_nodes,
            "scenario: must_transmit needs one row per node");
    for (const auto& row : must_transmit) {
      require(static_cast<int>(row.size()) == horizon,
              "scenario: must_transmit rows need one entry per slot");
    }
  }
}

Schedule::Schedule(int nodes, int gateways, int frequencies, int slots)
    : nodes_(nodes),
      gateways_(gateways),
      frequencies_(frequencies),
      slots_(slots) {
  require(nodes >= 0 && gateways >= 0 && frequencies >= 0 && slots >= 0,
          "schedule: negative dimension");
  const auto cells = static_cast<std::size_t>(nodes) * gateways *
                     frequencies * slots;
  x_.assign(cells, 0);
  s_.assign(cells, 0);
  z_.assign(static_cast<std::size_t>(nodes) * slots, 0);
  delta_.assign(static_cast<std::size_t>(gateways) * frequencies * slots, 0);
}

Schedule Schedule::empty_for(const Scenario& scenario) {
  return Schedule(scenario.num_nodes, scenario.num_gateways,
                  scenario.num_frequencies(), scenario.horizon);
}

void Schedule::set_x(int node, int gateway, int freq, int slot, bool on) {
  x_[cell(node, gateway, freq, slot)] = on ? 1 : 0;
}

void Schedule::set_s(int node, int gateway, int freq, int slot, int symbols) {
  s_[cell(node, gateway, freq, slot)] = symbols;
}

void Schedule::set_z(int node, int slot, bool on) {
  z_[node * slots_ + slot] = on ? 1 : 0;
}

void Schedule::set_delta(int gateway, int freq, int slot, bool on) {
  delta_[(gateway * frequencies_ + freq) * slots_ + slot] = on ? 1 : 0;
}

int Schedule::occupancy(int gateway, int freq, int slot) const {
  int count = 0;
  for (int i = 0; i < nodes_; ++i) count += x(i, gateway, freq, slot);
  return count;
}

bool Schedule::channel_set_changed(int node, int slot) const {
  if (slot == 0) return false;
  for (int g = 0; g < gateways_; ++g) {
    for (int f = 0; f < frequencies_; ++f) {
      if (x(node, g, f, slot) != x(node, g, f, slot - 1)) return true;
    }
  }
  return false;
}

void Schedule::derive_indicators() {
  for (int i = 0; i < nodes_; ++i) {
    for (int t = 0; t < slots_; ++t) set_z(i, t, channel_set_changed(i, t));
  }
  for (int g = 0; g < gateways_; ++g) {
    for (int f = 0; f < frequencies_; ++f) {
      set_delta(g, f, 0, false);
      for (int t = 1; t < slots_; ++t) {
        set_delta(g, f, t, occupancy(g, f, t - 1) >= 2);
      }
    }
  }
}

bool Schedule::conforms_to(const Scenario& scenario) const {
  return nodes_ == scenario.num_nodes && gateways_ == scenario.num_gateways &&
         frequencies_ == scenario.num_frequencies() &&
         slots_ == scenario.horizon;
}

std::string_view constraint_name(Constraint c) {
  switch (c) {
    case Constraint::kSingleFrequency:
      return "single_frequency";
    case Constraint::kGatewayCapacity:
      return "gateway_capacity";
    case Constraint::kFrequencyCapacity:
      return "frequency_capacity";
    case Constraint::kSymbolBounds:
      return "symbol_bounds";
    case Constraint::kDemand:
      return "demand";
    case Constraint::kCollisionHop:
      return "collision_hop";
    case Constraint::kHopLowerBound:
      return "hop_lower_bound";
    case Constraint::kHopUpperBound:
      return "hop_upper_bound";
  }
  return "unknown";
}

namespace {

void require_conforming(const Scenario& scenario, const Schedule& schedule) {
  if (!schedule.conforms_to(scenario)) {
    throw InputError("schedule dimensions do not match the scenario");
  }
}

template <typename... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

}  // namespace

long long collision_count(const Scenario& scenario, const Schedule& schedule) {
  require_conforming(scenario, schedule);
  long long total = 0;
  for (int t = 0; t < schedule.slots(); ++t) {
    for (int g = 0; g < schedule.gateways(); ++g) {
      for (int f = 0; f < schedule.frequencies(); ++f) {
        const long long k = schedule.occupancy(g, f, t);
        total += k * (k - 1);
      }
    }
  }
  return total;
}

long long hop_count(const Scenario& scenario, const Schedule& schedule) {
  require_conforming(scenario, schedule);
  long long total = 0;
  for (int i = 0; i < schedule.nodes(); ++i) {
    for (int t = 1; t < schedule.slots(); ++t) total += schedule.z(i, t);
  }
  return total;
}

double objective(const Scenario& scenario, const Schedule& schedule,
                 double alpha, double beta) {
  require(alpha >= 0.0 && beta >= 0.0, "objective weights must be >= 0");
  return alpha * static_cast<double>(collision_count(scenario, schedule)) +
         beta * static_cast<double>(hop_count(scenario, schedule));
}

std::vector<Violation> validate(const Scenario& scenario,
                                const Schedule& schedule) {
  require_conforming(scenario, schedule);
  const int nodes = schedule.nodes();
  const int gateways = schedule.gateways();
  const int freqs = schedule.frequencies();
  const int slots = schedule.slots();
  std::vector<Violation> out;

  for (int i = 0; i < nodes; ++i) {
    for (int g = 0; g < gateways; ++g) {
      for (int t = 0; t < slots; ++t) {
        int used = 0;
        for (int f = 0; f < freqs; ++f) used += schedule.x(i, g, f, t);
        const bool required = scenario.transmit_required(i, t);
        if (used > 1 || (required && used != 1)) {
          out.push_back({Constraint::kSingleFrequency, {i, g, -1, t},
                         describe(used, " frequencies in use",
                                  required ? " (exactly 1 required)" : "")});
        }
      }
    }
  }

  for (int g = 0; g < gateways; ++g) {
    for (int t = 0; t < slots; ++t) {
      int used = 0;
      for (int f = 0; f < freqs; ++f) used += schedule.occupancy(g, f, t);
      if (used > scenario.gateway_capacity[g]) {
        out.push_back({Constraint::kGatewayCapacity, {-1, g, -1, t},
                       describe(used, " allocations > capacity ",
                                scenario.gateway_capacity[g])});
      }
    }
  }

  for (int g = 0; g < gateways; ++g) {
    for (int f = 0; f < freqs; ++f) {
      for (int t = 0; t < slots; ++t) {
        long long sent = 0;
        for (int i = 0; i < nodes; ++i) sent += schedule.s(i, g, f, t);
        if (sent > scenario.freq_capacity[f]) {
          out.push_back({Constraint::kFrequencyCapacity, {-1, g, f, t},
                         describe(sent, " symbols > capacity ",
                                  scenario.freq_capacity[f])});
        }
      }
    }
  }

  for (int i = 0; i < nodes; ++i) {
    for (int g = 0; g < gateways; ++g) {
      for (int f = 0; f < freqs; ++f) {
        for (int t = 0; t < slots; ++t) {
          const int s = schedule.s(i, g, f, t);
          if (schedule.x(i, g, f, t)) {
            if (s < scenario.min_symbols || s > scenario.freq_capacity[f]) {
              out.push_back({Constraint::kSymbolBounds, {i, g, f, t},
                             describe(s, " symbols outside [",
                                      scenario.min_symbols, ", ",
                                      scenario.freq_capacity[f], "]")});
            }
          } else if (s != 0) {
            out.push_back({Constraint::kSymbolBounds, {i, g, f, t},
                           describe(s, " symbols on an unallocated cell")});
          }
        }
      }
    }
  }

  for (int i = 0; i < nodes; ++i) {
    long long delivered = 0;
    for (int g = 0; g < gateways; ++g) {
      for (int f = 0; f < freqs; ++f) {
        for (int t = 0; t < slots; ++t) {
          if (schedule.x(i, g, f, t)) delivered += schedule.s(i, g, f, t);
        }
      }
    }
    if (delivered != scenario.demand[i]) {
      out.push_back({Constraint::kDemand, {i, -1, -1, -1},
                     describe(delivered, " symbols delivered, demand ",
                              scenario.demand[i])});
    }
  }

  for (int g = 0; g < gateways; ++g) {
    for (int f = 0; f < freqs; ++f) {
      if (slots > 0 && schedule.delta(g, f, 0)) {
        out.push_back({Constraint::kCollisionHop, {-1, g, f, 0},
                       "trigger set in the first slot"});
      }
      for (int t = 1; t < slots; ++t) {
        const int before = schedule.occupancy(g, f, t - 1);
        const int now = schedule.occupancy(g, f, t);
        const bool triggered = before >= 2;
        if (schedule.delta(g, f, t) != triggered) {
          out.push_back({Constraint::kCollisionHop, {-1, g, f, t},
                         describe("trigger inconsistent with ", before,
                                  " users in the previous slot")});
        } else if (triggered && now != 1) {
          out.push_back({Constraint::kCollisionHop, {-1, g, f, t},
                         describe(before, " users previously, ", now,
                                  " now (exactly 1 required)")});
        }
      }
    }
  }

  for (int i = 0; i < nodes; ++i) {
    if (slots > 0 && schedule.z(i, 0)) {
      out.push_back({Constraint::kHopUpperBound, {i, -1, -1, 0},
                     "hop flagged in the first slot"});
    }
    for (int t = 1; t < slots; ++t) {
      const bool changed = schedule.channel_set_changed(i, t);
      if (changed && !schedule.z(i, t)) {
        out.push_back({Constraint::kHopLowerBound, {i, -1, -1, t},
                       "channel set changed without a hop"});
      } else if (!changed && schedule.z(i, t)) {
        out.push_back({Constraint::kHopUpperBound, {i, -1, -1, t},
                       "hop flagged without a channel change"});
      }
    }
  }
  return out;
}

}  // namespace lorahop
