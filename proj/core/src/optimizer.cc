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

#include "lorahop/optimizer.h"

#include <algorithm>
#include <array>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "lorahop/scenario_io.h"
#include "max_flow.h"

namespace lorahop::opt {
namespace {

// One candidate allocation for a single node over the whole horizon.
struct Row {
  std::vector<int> choice;          // per (gateway, slot): frequency or -1
  std::vector<std::uint8_t> bits;   // x row over (gateway, freq, slot)
  int hops = 0;
};

struct RejectionTally {
  std::array<long long, kConstraintFamilies> count{};

  void add(Constraint c) { ++count[static_cast<int>(c)]; }

  Constraint most_frequent() const {
    const auto it = std::max_element(count.begin(), count.end());
    return static_cast<Constraint>(it - count.begin());
  }
};

std::vector<Row> candidate_rows(const Scenario& sc, int node,
                                RejectionTally& tally) {
  const int gateways = sc.num_gateways;
  const int freqs = sc.num_frequencies();
  const int slots = sc.horizon;
  const int cells = gateways * slots;
  const long long demand = sc.demand[node];

  std::vector<Row> rows;
  std::vector<int> choice(cells, -1);
  // Odometer over per-cell choices in {-1, 0, .., F-1}.
  auto first_choice = [&](int cell) {
    return sc.transmit_required(node, cell % slots) ? 0 : -1;
  };
  for (int c = 0; c < cells; ++c) choice[c] = first_choice(c);
  while (true) {
    int active = 0;
    long long reachable = 0;
    for (int c = 0; c < cells; ++c) {
      if (choice[c] >= 0) {
        ++active;
        reachable += sc.freq_capacity[choice[c]];
      }
    }
    bool keep = true;
    if (demand == 0) {
      if (active != 0) {
        tally.add(Constraint::kSymbolBounds);
        keep = false;
      }
    } else if (static_cast<long long>(active) * sc.min_symbols > demand) {
      tally.add(Constraint::kSymbolBounds);
      keep = false;
    } else if (reachable < demand) {
      tally.add(Constraint::kDemand);
      keep = false;
    }
    if (keep) {
      Row row;
      row.choice = choice;
      row.bits.assign(static_cast<std::size_t>(gateways) * freqs * slots, 0);
      for (int g = 0; g < gateways; ++g) {
        for (int t = 0; t < slots; ++t) {
          const int f = choice[g * slots + t];
          if (f >= 0) row.bits[(g * freqs + f) * slots + t] = 1;
        }
      }
      for (int t = 1; t < slots; ++t) {
        for (int g = 0; g < gateways; ++g) {
          if (choice[g * slots + t] != choice[g * slots + t - 1]) {
            ++row.hops;
            break;
          }
        }
      }
      rows.push_back(std::move(row));
    }
    int c = cells - 1;
    while (c >= 0 && choice[c] == freqs - 1) {
      choice[c] = first_choice(c);
      --c;
    }
    if (c < 0) break;
    ++choice[c];
  }
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.bits < b.bits; });
  return rows;
}

class BranchAndBound {
 public:
  BranchAndBound(const Scenario& sc, double alpha, double beta,
                 long long budget)
      : sc_(sc),
        alpha_(alpha),
        beta_(beta),
        budget_(budget),
        freqs_(sc.num_frequencies()),
        occupancy_(static_cast<std::size_t>(sc.num_gateways) * freqs_ *
                       sc.horizon,
                   0),
        gateway_load_(static_cast<std::size_t>(sc.num_gateways) * sc.horizon,
                      0),
        chosen_(sc.num_nodes, -1) {}

  SolveResult run() {
    rows_.reserve(sc_.num_nodes);
    for (int i = 0; i < sc_.num_nodes; ++i) {
      rows_.push_back(candidate_rows(sc_, i, tally_));
      if (rows_.back().empty()) {
        std::ostringstream msg;
        msg << "infeasible: node " << i << " has no allocation meeting "
            << constraint_name(tally_.most_frequent());
        throw Infeasible(tally_.most_frequent(), msg.str());
      }
    }
    suffix_min_hops_.assign(sc_.num_nodes + 1, 0);
    for (int i = sc_.num_nodes - 1; i >= 0; --i) {
      int best = std::numeric_limits<int>::max();
      for (const Row& r : rows_[i]) best = std::min(best, r.hops);
      suffix_min_hops_[i] = suffix_min_hops_[i + 1] + best;
    }

    search(0, 0, 0);

    if (!incumbent_) {
      if (exhausted_) {
        throw DomainError("search budget exhausted before any feasible "
                          "schedule was found");
      }
      const Constraint binding = tally_.most_frequent();
      throw Infeasible(binding, "infeasible: every allocation violates " +
                                    std::string(constraint_name(binding)));
    }
    SolveResult result;
    result.schedule = *incumbent_;
    result.collisions = best_collisions_;
    result.hops = best_hops_;
    result.objective_value = best_value_;
    result.nodes_explored = explored_;
    result.proven_optimal = !exhausted_;
    return result;
  }

 private:
  int& occ(int g, int f, int t) {
    return occupancy_[(static_cast<std::size_t>(g) * freqs_ + f) *
                          sc_.horizon +
                      t];
  }
  int& load(int g, int t) {
    return gateway_load_[static_cast<std::size_t>(g) * sc_.horizon + t];
  }

  double value(long long collisions, long long hops) const {
    return alpha_ * static_cast<double>(collisions) +
           beta_ * static_cast<double>(hops);
  }

  // Applies a row; returns added collisions, or -1 with state untouched if
  // a capacity or collision-hop constraint is already certain to fail.
  long long apply(const Row& row) {
    const int slots = sc_.horizon;
    long long added = 0;
    int g = 0;
    int t = 0;
    bool ok = true;
    Constraint reason = Constraint::kGatewayCapacity;
    int applied = 0;
    for (int c = 0; c < static_cast<int>(row.choice.size()); ++c) {
      const int f = row.choice[c];
      if (f < 0) continue;
      g = c / slots;
      t = c % slots;
      added += 2LL * occ(g, f, t);
      ++occ(g, f, t);
      ++load(g, t);
      ++applied;
      if (load(g, t) > sc_.gateway_capacity[g]) {
        ok = false;
        reason = Constraint::kGatewayCapacity;
      } else if (static_cast<long long>(occ(g, f, t)) * sc_.min_symbols >
                 sc_.freq_capacity[f]) {
        ok = false;
        reason = Constraint::kFrequencyCapacity;
      } else if ((t >= 1 && occ(g, f, t - 1) >= 2 && occ(g, f, t) >= 2) ||
                 (t + 1 < slots && occ(g, f, t) >= 2 &&
                  occ(g, f, t + 1) >= 2)) {
        ok = false;
        reason = Constraint::kCollisionHop;
      }
      if (!ok) break;
    }
    if (ok) return added;
    tally_.add(reason);
    // Roll back exactly the cells applied so far.
    for (int c = 0; c < static_cast<int>(row.choice.size()) && applied > 0;
         ++c) {
      const int f = row.choice[c];
      if (f < 0) continue;
      --occ(c / slots, f, c % slots);
      --load(c / slots, c % slots);
      --applied;
    }
    return -1;
  }

  void undo(const Row& row) {
    const int slots = sc_.horizon;
    for (int c = 0; c < static_cast<int>(row.choice.size()); ++c) {
      const int f = row.choice[c];
      if (f < 0) continue;
      --occ(c / slots, f, c % slots);
      --load(c / slots, c % slots);
    }
  }

  bool collision_hops_hold() {
    for (int g = 0; g < sc_.num_gateways; ++g) {
      for (int f = 0; f < freqs_; ++f) {
        for (int t = 1; t < sc_.horizon; ++t) {
          if (occ(g, f, t - 1) >= 2 && occ(g, f, t) != 1) return false;
        }
      }
    }
    return true;
  }

  void search(int node, long long collisions, long long hops) {
    if (exhausted_) return;
    if (node == sc_.num_nodes) {
      leaf(collisions, hops);
      return;
    }
    for (int r = 0; r < static_cast<int>(rows_[node].size()); ++r) {
      if (++explored_ > budget_) {
        exhausted_ = true;
        return;
      }
      const Row& row = rows_[node][r];
      const long long bound_hops = hops + row.hops + suffix_min_hops_[node + 1];
      if (incumbent_ && value(collisions, bound_hops) >= best_value_) continue;
      const long long added = apply(row);
      if (added < 0) continue;
      if (!incumbent_ ||
          value(collisions + added, bound_hops) < best_value_) {
        chosen_[node] = r;
        search(node + 1, collisions + added, hops + row.hops);
      }
      undo(row);
      if (exhausted_) return;
    }
  }

  void leaf(long long collisions, long long hops) {
    if (!collision_hops_hold()) {
      tally_.add(Constraint::kCollisionHop);
      return;
    }
    const double v = value(collisions, hops);
    if (incumbent_ && v >= best_value_) return;
    Schedule allocation = Schedule::empty_for(sc_);
    for (int i = 0; i < sc_.num_nodes; ++i) {
      const Row& row = rows_[i][chosen_[i]];
      for (int c = 0; c < static_cast<int>(row.choice.size()); ++c) {
        if (row.choice[c] >= 0) {
          allocation.set_x(i, c / sc_.horizon, row.choice[c],
                           c % sc_.horizon, true);
        }
      }
    }
    auto complete = assign_symbols(sc_, allocation);
    if (!complete) {
      tally_.add(Constraint::kFrequencyCapacity);
      return;
    }
    incumbent_ = std::move(*complete);
    best_value_ = v;
    best_collisions_ = collisions;
    best_hops_ = hops;
  }

  const Scenario& sc_;
  double alpha_;
  double beta_;
  long long budget_;
  int freqs_;
  std::vector<std::vector<Row>> rows_;
  std::vector<long long> suffix_min_hops_;
  std::vector<int> occupancy_;
  std::vector<int> gateway_load_;
  std::vector<int> chosen_;
  RejectionTally tally_;
  std::optional<Schedule> incumbent_;
  double best_value_ = 0.0;
  long long best_collisions_ = 0;
  long long best_hops_ = 0;
  long long explored_ = 0;
  bool exhausted_ = false;
};

}  // namespace

std::optional<Schedule> assign_symbols(const Scenario& sc,
                                       const Schedule& allocation) {
  if (!allocation.conforms_to(sc)) {
    throw InputError("allocation dimensions do not match the scenario");
  }
  const int nodes = sc.num_nodes;
  const int gateways = sc.num_gateways;
  const int freqs = sc.num_frequencies();
  const int slots = sc.horizon;
  const int channels = gateways * freqs * slots;
  const int source = 0;
  const int sink = 1 + nodes + channels;
  detail::BoundedFlow flow(sink + 1);

  for (int i = 0; i < nodes; ++i) {
    flow.add_edge(source, 1 + i, sc.demand[i], sc.demand[i]);
  }
  struct Link {
    int edge, node, g, f, t;
  };
  std::vector<Link> links;
  std::vector<bool> channel_used(channels, false);
  for (int i = 0; i < nodes; ++i) {
    for (int g = 0; g < gateways; ++g) {
      for (int f = 0; f < freqs; ++f) {
        for (int t = 0; t < slots; ++t) {
          if (!allocation.x(i, g, f, t)) continue;
          const int ch = (g * freqs + f) * slots + t;
          channel_used[ch] = true;
          const int e = flow.add_edge(1 + i, 1 + nodes + ch, sc.min_symbols,
                                      sc.freq_capacity[f]);
          links.push_back({e, i, g, f, t});
        }
      }
    }
  }
  for (int ch = 0; ch < channels; ++ch) {
    if (!channel_used[ch]) continue;
    const int f = (ch / slots) % freqs;
    flow.add_edge(1 + nodes + ch, sink, 0, sc.freq_capacity[f]);
  }
  const auto solution = flow.feasible(source, sink);
  if (!solution) return std::nullopt;

  Schedule out = Schedule::empty_for(sc);
  for (const Link& l : links) {
    out.set_x(l.node, l.g, l.f, l.t, true);
    out.set_s(l.node, l.g, l.f, l.t, static_cast<int>((*solution)[l.edge]));
  }
  out.derive_indicators();
  return out;
}

SolveResult solve_exact(const Scenario& scenario, double alpha, double beta,
                        long long budget) {
  scenario.check();
  require(alpha >= 0.0 && beta >= 0.0, "objective weights must be >= 0");
  require(budget >= 1, "search budget must be positive");
  return BranchAndBound(scenario, alpha, beta, budget).run();
}

std::string solve_result_to_json(const Scenario& scenario,
                                 const SolveResult& result, double alpha,
                                 double beta) {
  using nlohmann::json;
  json j = {{"objective_value", result.objective_value},
            {"collisions", result.collisions},
            {"hops", result.hops},
            {"nodes_explored", result.nodes_explored},
            {"proven_optimal", result.proven_optimal},
            {"alpha", alpha},
            {"beta", beta},
            {"violations", validate(scenario, result.schedule).size()},
            {"schedule", json::parse(schedule_to_json(result.schedule))}};
  return j.dump(2);
}

}  // namespace lorahop::opt
