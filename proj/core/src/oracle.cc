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

// Exhaustive ground truth. Shares nothing with the branch-and-bound beyond
// the Scenario/Schedule types: no row pruning, no flow model.

#include <cmath>
#include <sstream>

#include "lorahop/optimizer.h"

namespace lorahop::opt {
namespace {

struct Cell {
  int node, gateway, freq, slot;
};

// Depth-first search for symbol counts in [B_min, B_f] per active cell
// that meet every demand exactly and keep each channel within B_f.
class SymbolSearch {
 public:
  SymbolSearch(const Scenario& sc, std::vector<Cell> cells)
      : sc_(sc),
        cells_(std::move(cells)),
        symbols_(cells_.size(), 0),
        remaining_(sc.demand.begin(), sc.demand.end()),
        cells_left_(sc.num_nodes, 0),
        channel_load_(static_cast<std::size_t>(sc.num_gateways) *
                          sc.num_frequencies() * sc.horizon,
                      0) {
    for (const Cell& c : cells_) ++cells_left_[c.node];
  }

  bool run() {
    for (int i = 0; i < sc_.num_nodes; ++i) {
      if (!demand_reachable(i)) return false;
    }
    return place(0);
  }

  const std::vector<int>& symbols() const { return symbols_; }

 private:
  std::size_t channel(const Cell& c) const {
    return (static_cast<std::size_t>(c.gateway) * sc_.num_frequencies() +
            c.freq) *
               sc_.horizon +
           c.slot;
  }

  bool demand_reachable(int node) const {
    const long long left = cells_left_[node];
    const long long rem = remaining_[node];
    long long widest = 0;
    for (int b : sc_.freq_capacity) widest = std::max<long long>(widest, b);
    return rem >= left * sc_.min_symbols && rem <= left * widest;
  }

  bool place(std::size_t k) {
    if (k == cells_.size()) {
      for (long long r : remaining_) {
        if (r != 0) return false;
      }
      return true;
    }
    const Cell& c = cells_[k];
    const int cap = sc_.freq_capacity[c.freq];
    --cells_left_[c.node];
    for (int s = sc_.min_symbols; s <= cap; ++s) {
      if (channel_load_[channel(c)] + s > cap) break;
      if (s > remaining_[c.node]) break;
      remaining_[c.node] -= s;
      channel_load_[channel(c)] += s;
      symbols_[k] = s;
      if (demand_reachable(c.node) && place(k + 1)) return true;
      remaining_[c.node] += s;
      channel_load_[channel(c)] -= s;
    }
    ++cells_left_[c.node];
    return false;
  }

  const Scenario& sc_;
  std::vector<Cell> cells_;
  std::vector<int> symbols_;
  std::vector<long long> remaining_;
  std::vector<long long> cells_left_;
  std::vector<long long> channel_load_;
};

}  // namespace

double oracle_state_count(const Scenario& sc) {
  double states = 1.0;
  for (int i = 0; i < sc.num_nodes; ++i) {
    for (int g = 0; g < sc.num_gateways; ++g) {
      for (int t = 0; t < sc.horizon; ++t) {
        states *= sc.transmit_required(i, t) ? sc.num_frequencies()
                                             : sc.num_frequencies() + 1;
      }
    }
  }
  return states;
}

SolveResult enumerate_oracle(const Scenario& sc, double alpha, double beta,
                             long long cap) {
  sc.check();
  require(alpha >= 0.0 && beta >= 0.0, "objective weights must be >= 0");
  const double states = oracle_state_count(sc);
  if (states > static_cast<double>(cap)) {
    std::ostringstream msg;
    msg << "oracle refused: about " << states << " allocations exceed the cap "
        << cap;
    throw InputError(msg.str());
  }

  const int N = sc.num_nodes;
  const int G = sc.num_gateways;
  const int F = sc.num_frequencies();
  const int T = sc.horizon;
  // choice[(i * G + g) * T + t] in {-1, 0, .., F-1}
  const int cells = N * G * T;
  std::vector<int> choice(cells);
  auto lowest = [&](int c) {
    const int i = c / (G * T);
    const int t = c % T;
    return sc.transmit_required(i, t) ? 0 : -1;
  };
  for (int c = 0; c < cells; ++c) choice[c] = lowest(c);

  std::vector<int> occ(static_cast<std::size_t>(G) * F * T);
  std::vector<std::uint8_t> x(static_cast<std::size_t>(N) * G * F * T);
  std::vector<std::uint8_t> best_x;
  std::optional<Schedule> best;
  double best_value = 0.0;
  long long best_collisions = 0;
  long long best_hops = 0;
  long long visited = 0;
  bool any_capacity_ok = false;

  while (true) {
    ++visited;
    std::fill(occ.begin(), occ.end(), 0);
    std::fill(x.begin(), x.end(), 0);
    for (int c = 0; c < cells; ++c) {
      const int f = choice[c];
      if (f < 0) continue;
      const int i = c / (G * T);
      const int g = (c / T) % G;
      const int t = c % T;
      ++occ[(g * F + f) * T + t];
      x[((static_cast<std::size_t>(i) * G + g) * F + f) * T + t] = 1;
    }
    bool feasible = true;
    for (int g = 0; g < G && feasible; ++g) {
      for (int t = 0; t < T && feasible; ++t) {
        int load = 0;
        for (int f = 0; f < F; ++f) load += occ[(g * F + f) * T + t];
        if (load > sc.gateway_capacity[g]) feasible = false;
      }
    }
    for (int g = 0; g < G && feasible; ++g) {
      for (int f = 0; f < F && feasible; ++f) {
        for (int t = 1; t < T && feasible; ++t) {
          if (occ[(g * F + f) * T + t - 1] >= 2 &&
              occ[(g * F + f) * T + t] != 1) {
            feasible = false;
          }
        }
      }
    }
    if (feasible) {
      any_capacity_ok = true;
      long long collisions = 0;
      for (int k : occ) collisions += static_cast<long long>(k) * (k - 1);
      long long hops = 0;
      for (int i = 0; i < N; ++i) {
        for (int t = 1; t < T; ++t) {
          for (int g = 0; g < G; ++g) {
            if (choice[(i * G + g) * T + t] !=
                choice[(i * G + g) * T + t - 1]) {
              ++hops;
              break;
            }
          }
        }
      }
      const double v = alpha * static_cast<double>(collisions) +
                       beta * static_cast<double>(hops);
      const bool better =
          !best || v < best_value || (v == best_value && x < best_x);
      if (better) {
        std::vector<Cell> active;
        for (int i = 0; i < N; ++i) {
          for (int g = 0; g < G; ++g) {
            for (int t = 0; t < T; ++t) {
              const int f = choice[(i * G + g) * T + t];
              if (f >= 0) active.push_back({i, g, f, t});
            }
          }
        }
        SymbolSearch search(sc, active);
        if (search.run()) {
          Schedule schedule = Schedule::empty_for(sc);
          for (std::size_t k = 0; k < active.size(); ++k) {
            const Cell& a = active[k];
            schedule.set_x(a.node, a.gateway, a.freq, a.slot, true);
            schedule.set_s(a.node, a.gateway, a.freq, a.slot,
                           search.symbols()[k]);
          }
          schedule.derive_indicators();
          best = std::move(schedule);
          best_x = x;
          best_value = v;
          best_collisions = collisions;
          best_hops = hops;
        }
      }
    }

    int c = cells - 1;
    while (c >= 0 && choice[c] == F - 1) {
      choice[c] = lowest(c);
      --c;
    }
    if (c < 0) break;
    ++choice[c];
  }

  if (!best) {
    const Constraint binding = any_capacity_ok ? Constraint::kDemand
                                               : Constraint::kGatewayCapacity;
    throw Infeasible(binding, "infeasible: exhaustive enumeration found no "
                              "feasible schedule");
  }
  SolveResult result;
  result.schedule = std::move(*best);
  result.objective_value = best_value;
  result.collisions = best_collisions;
  result.hops = best_hops;
  result.nodes_explored = visited;
  result.proven_optimal = true;
  return result;
}

}  // namespace lorahop::opt
