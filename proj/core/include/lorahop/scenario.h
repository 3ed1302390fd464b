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

// Domain model of the channel-hopping allocation problem: end-nodes send
// symbols to gateways over a set of carrier frequencies during a horizon of
// discrete slots. All indices are zero-based; slot 0 is the first slot.

#ifndef LORAHOP_SCENARIO_H_
#define LORAHOP_SCENARIO_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lorahop {

struct Scenario {
  int num_nodes = 0;
  int num_gateways = 0;
  int horizon = 0;                       // number of slots
  std::vector<double> frequencies_mhz;   // distinct carriers
  std::vector<int> gateway_capacity;     // channels per gateway, size G
  std::vector<int> freq_capacity;        // max symbols per slot, size F
  int min_symbols = 1;                   // smallest packet, in symbols
  std::vector<int> demand;               // total symbols per node, size N

  // Optional N x T mask. Where set, the node must use exactly one frequency
  // towards every gateway in that slot; elsewhere at most one.
  std::vector<std::vector<bool>> must_transmit;

  int num_frequencies() const {
    return static_cast<int>(frequencies_mhz.size());
  }
  bool transmit_required(int node, int slot) const;

  // Throws InputError when a field is out of range or sizes disagree.
  void check() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Decision variables for one Scenario: allocation x, symbols s, hop
/// indicators z and collision-hop triggers delta. Storage is dense and
/// row-major over (node, gateway, frequency, slot).
class Schedule {
 public:
  Schedule() = default;
  Schedule(int nodes, int gateways, int frequencies, int slots);
  static Schedule empty_for(const Scenario& scenario);

  int nodes() const { return nodes_; }
  int gateways() const { return gateways_; }
  int frequencies() const { return frequencies_; }
  int slots() const { return slots_; }

  bool x(int node, int gateway, int freq, int slot) const {
    return x_[cell(node, gateway, freq, slot)] != 0;
  }
  int s(int node, int gateway, int freq, int slot) const {
    return s_[cell(node, gateway, freq, slot)];
  }
  bool z(int node, int slot) const { return z_[node * slots_ + slot] != 0; }
  bool delta(int gateway, int freq, int slot) const {
    return delta_[(gateway * frequencies_ + freq) * slots_ + slot] != 0;
  }

  void set_x(int node, int gateway, int freq, int slot, bool on);
  void set_s(int node, int gateway, int freq, int slot, int symbols);
  void set_z(int node, int slot, bool on);
  void set_delta(int gateway, int freq, int slot, bool on);

  // Number of nodes allocated to (gateway, freq) in `slot`.
  int occupancy(int gateway, int freq, int slot) const;

  // True when the node's set of active (gateway, frequency) pairs differs
  // between slot-1 and slot. Slot 0 never counts as a change.
  bool channel_set_changed(int node, int slot) const;

  // Recomputes z and delta from x so they are the unique consistent values.
  void derive_indicators();

  bool conforms_to(const Scenario& scenario) const;

  std::span<const std::uint8_t> allocation() const { return x_; }
  std::span<const int> symbols() const { return s_; }

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::size_t cell(int node, int gateway, int freq, int slot) const {
    return ((static_cast<std::size_t>(node) * gateways_ + gateway) *
                frequencies_ +
            freq) *
               slots_ +
           slot;
  }

  int nodes_ = 0;
  int gateways_ = 0;
  int frequencies_ = 0;
  int slots_ = 0;
  std::vector<std::uint8_t> x_;
  std::vector<int> s_;
  std::vector<std::uint8_t> z_;
  std::vector<std::uint8_t> delta_;
};

enum class Constraint {
  kSingleFrequency,    // one carrier per (node, gateway, slot)
  kGatewayCapacity,    // allocations per gateway and slot <= M_g
  kFrequencyCapacity,  // symbols per (gateway, frequency, slot) <= B_f
  kSymbolBounds,       // B_min <= s <= B_f on active cells, 0 elsewhere
  kDemand,             // delivered symbols equal D_i
  kCollisionHop,       // a shared channel keeps exactly one node next slot
  kHopLowerBound,      // a changed channel set forces z = 1
  kHopUpperBound,      // z = 1 only when the channel set changed
};

inline constexpr int kConstraintFamilies = 8;

std::string_view constraint_name(Constraint c);

struct CellIndex {
  int node = -1;
  int gateway = -1;
  int frequency = -1;
  int slot = -1;
  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

struct Violation {
  Constraint constraint;
  CellIndex where;
  std::string detail;
};

// Ordered pairs (i, j), i != j, sharing a (gateway, frequency, slot).
long long collision_count(const Scenario& scenario, const Schedule& schedule);

// Sum of z over all nodes and slots after the first.
long long hop_count(const Scenario& scenario, const Schedule& schedule);

double objective(const Scenario& scenario, const Schedule& schedule,
                 double alpha, double beta);

// Every broken constraint, in a stable order. Empty means feasible.
std::vector<Violation> validate(const Scenario& scenario,
                                const Schedule& schedule);

}  // namespace lorahop

#endif  // LORAHOP_SCENARIO_H_
