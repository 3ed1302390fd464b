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

#include <gtest/gtest.h>

#include <json.hpp>
#include <random>

#include "../support/scenario_gen.h"

namespace lorahop::opt {
namespace {

Scenario base(int nodes, int freqs, int slots) {
  Scenario sc;
  sc.num_nodes = nodes;
  sc.num_gateways = 1;
  sc.horizon = slots;
  for (int f = 0; f < freqs; ++f) sc.frequencies_mhz.push_back(868.0 + f);
  sc.gateway_capacity = {nodes};
  sc.freq_capacity.assign(freqs, 4);
  sc.min_symbols = 1;
  sc.demand.assign(nodes, 1);
  return sc;
}

void expect_consistent(const Scenario& sc, const SolveResult& r, double a,
                       double b) {
  EXPECT_TRUE(validate(sc, r.schedule).empty());
  EXPECT_DOUBLE_EQ(r.objective_value, objective(sc, r.schedule, a, b));
  EXPECT_EQ(r.collisions, collision_count(sc, r.schedule));
  EXPECT_EQ(r.hops, hop_count(sc, r.schedule));
}

TEST(SolveExact, SingleNodeHasZeroObjective) {
  Scenario sc = base(1, 1, 2);
  sc.demand = {2 * sc.min_symbols};
  const SolveResult r = solve_exact(sc, 1.0, 0.1);
  EXPECT_TRUE(r.proven_optimal);
  EXPECT_EQ(r.objective_value, 0.0);
  EXPECT_EQ(r.collisions, 0);
  EXPECT_EQ(r.hops, 0);
  expect_consistent(sc, r, 1.0, 0.1);
}

TEST(SolveExact, TwoNodesTakeDistinctCarriers) {
  Scenario sc = base(2, 2, 2);
  sc.demand = {4, 4};
  sc.must_transmit = {{true, false}, {true, false}};
  const SolveResult r = solve_exact(sc, 1.0, 0.1);
  EXPECT_EQ(r.objective_value, 0.0);
  EXPECT_EQ(enumerate_oracle(sc, 1.0, 0.1).objective_value, 0.0);
  expect_consistent(sc, r, 1.0, 0.1);
}

TEST(SolveExact, BusyThreeNodeInstanceMatchesOracle) {
  // Every node transmits in every slot; M = 3 so all three fit the gateway.
  Scenario sc = base(3, 2, 2);
  sc.demand = {2, 2, 2};
  sc.must_transmit.assign(3, std::vector<bool>(2, true));
  const SolveResult r = solve_exact(sc, 1.0, 1.0);
  const SolveResult o = enumerate_oracle(sc, 1.0, 1.0);
  EXPECT_TRUE(r.proven_optimal);
  EXPECT_EQ(r.objective_value, o.objective_value);
  EXPECT_EQ(r.schedule.allocation().size(), o.schedule.allocation().size());
  EXPECT_TRUE(std::equal(r.schedule.allocation().begin(),
                         r.schedule.allocation().end(),
                         o.schedule.allocation().begin()));
  expect_consistent(sc, r, 1.0, 1.0);
}

TEST(SolveExact, ForcedCollisionCostsTwoPerSlot) {
  // Two nodes, one carrier, both must send. Beyond one slot the collision
  // rule cannot be met, so the instance has T = 1.
  Scenario sc = base(2, 1, 1);
  sc.min_symbols = 2;
  sc.demand = {2, 2};
  sc.must_transmit = {{true}, {true}};
  for (double alpha : {1.0, 2.5}) {
    EXPECT_EQ(solve_exact(sc, alpha, 0.1).objective_value, alpha * 2 * 1);
    EXPECT_EQ(enumerate_oracle(sc, alpha, 0.1).objective_value,
              alpha * 2 * 1);
  }
  Scenario longer = sc;
  longer.horizon = 2;
  longer.demand = {4, 4};  // symbols fit; only the collision rule fails
  longer.must_transmit = {{true, true}, {true, true}};
  try {
    solve_exact(longer, 1.0, 0.1);
    FAIL() << "expected Infeasible";
  } catch (const Infeasible& e) {
    EXPECT_EQ(e.binding(), Constraint::kCollisionHop);
  }
  EXPECT_THROW(enumerate_oracle(longer, 1.0, 0.1), Infeasible);
}

TEST(SolveExact, UnreachableDemandNamesTheDemandFamily) {
  Scenario sc = base(1, 1, 2);
  sc.demand = {9};  // at most 2 slots x 4 symbols
  try {
    solve_exact(sc, 1.0, 0.1);
    FAIL() << "expected Infeasible";
  } catch (const Infeasible& e) {
    EXPECT_EQ(e.binding(), Constraint::kDemand);
  }
}

TEST(SolveExact, GatewayCapacityCanBind) {
  Scenario sc = base(2, 2, 1);
  sc.gateway_capacity = {1};
  sc.must_transmit = {{true}, {true}};
  try {
    solve_exact(sc, 1.0, 0.1);
    FAIL() << "expected Infeasible";
  } catch (const Infeasible& e) {
    EXPECT_EQ(e.binding(), Constraint::kGatewayCapacity);
  }
}

TEST(SolveExact, RejectsNegativeWeights) {
  const Scenario sc = base(1, 1, 1);
  EXPECT_THROW(solve_exact(sc, -1.0, 0.0), InputError);
  EXPECT_THROW(enumerate_oracle(sc, 0.0, -1.0), InputError);
}

TEST(SolveExact, TinyBudgetReturnsUnprovenIncumbent) {
  Scenario sc = base(3, 2, 3);
  sc.demand = {3, 3, 3};
  sc.must_transmit.assign(3, std::vector<bool>(3, true));
  const SolveResult full = solve_exact(sc, 1.0, 0.1);
  ASSERT_TRUE(full.proven_optimal);
  bool saw_unproven = false;
  for (long long budget = 1; budget < full.nodes_explored; budget *= 2) {
    try {
      const SolveResult r = solve_exact(sc, 1.0, 0.1, budget);
      if (!r.proven_optimal) {
        saw_unproven = true;
        EXPECT_GE(r.objective_value, full.objective_value);
        expect_consistent(sc, r, 1.0, 0.1);
      }
    } catch (const DomainError&) {
      // No incumbent yet within this budget.
    }
  }
  EXPECT_TRUE(saw_unproven);
}

TEST(EnumerateOracle, RefusesOverCapWithEstimate) {
  Scenario sc = base(3, 2, 3);
  sc.num_gateways = 2;
  sc.gateway_capacity = {3, 3};
  EXPECT_GT(oracle_state_count(sc), 1e7);
  try {
    enumerate_oracle(sc, 1.0, 0.1);
    FAIL() << "expected a refusal";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("cap"), std::string::npos);
  }
}

TEST(EnumerateOracle, SingleNodeLazyScheduleIsFree) {
  Scenario sc = base(1, 2, 3);
  sc.demand = {3};
  EXPECT_EQ(enumerate_oracle(sc, 1.0, 0.5).objective_value, 0.0);
}

TEST(AssignSymbols, MeetsDemandWithinBounds) {
  Scenario sc = base(2, 2, 2);
  sc.demand = {5, 2};
  Schedule alloc = Schedule::empty_for(sc);
  alloc.set_x(0, 0, 0, 0, true);
  alloc.set_x(0, 0, 0, 1, true);
  alloc.set_x(1, 0, 1, 0, true);
  const auto filled = assign_symbols(sc, alloc);
  ASSERT_TRUE(filled.has_value());
  EXPECT_EQ(filled->s(0, 0, 0, 0) + filled->s(0, 0, 0, 1), 5);
  EXPECT_EQ(filled->s(1, 0, 1, 0), 2);
  sc.demand = {9, 2};
  EXPECT_FALSE(assign_symbols(sc, alloc).has_value());
}

TEST(SolveResultJson, CarriesObjectiveAndSchedule) {
  Scenario sc = base(2, 2, 2);
  const SolveResult r = solve_exact(sc, 1.0, 0.1);
  const auto j = nlohmann::json::parse(solve_result_to_json(sc, r, 1.0, 0.1));
  EXPECT_EQ(j.at("objective_value").get<double>(), r.objective_value);
  EXPECT_EQ(j.at("violations").get<int>(), 0);
  EXPECT_TRUE(j.at("proven_optimal").get<bool>());
  EXPECT_TRUE(j.at("schedule").contains("cells"));
}

// Property sweeps over random desk-scale instances.

TEST(OptimizerProperties, MatchesOracleOnRandomInstances) {
  std::mt19937_64 rng(101);
  int compared = 0;
  for (int trial = 0; trial < 400 && compared < 60; ++trial) {
    const Scenario sc = testing::random_scenario(rng);
    if (oracle_state_count(sc) > 2e5) continue;
    const double alpha = std::uniform_int_distribution<int>(0, 4)(rng) * 0.5;
    const double beta = std::uniform_int_distribution<int>(0, 4)(rng) * 0.25;
    std::optional<SolveResult> oracle;
    try {
      oracle = enumerate_oracle(sc, alpha, beta);
    } catch (const Infeasible&) {
    }
    if (!oracle) {
      EXPECT_THROW(solve_exact(sc, alpha, beta), Infeasible);
      continue;
    }
    const SolveResult r = solve_exact(sc, alpha, beta);
    ASSERT_TRUE(r.proven_optimal);
    EXPECT_EQ(r.objective_value, oracle->objective_value);
    expect_consistent(sc, r, alpha, beta);
    ++compared;
  }
  EXPECT_GE(compared, 60);
}

TEST(OptimizerProperties, OptimumIsNondecreasingInWeights) {
  std::mt19937_64 rng(202);
  int checked = 0;
  for (int trial = 0; trial < 300 && checked < 40; ++trial) {
    const Scenario sc = testing::random_scenario(rng);
    try {
      const double lo = solve_exact(sc, 0.5, 0.1).objective_value;
      EXPECT_LE(lo, solve_exact(sc, 1.5, 0.1).objective_value);
      EXPECT_LE(lo, solve_exact(sc, 0.5, 0.7).objective_value);
      ++checked;
    } catch (const Infeasible&) {
    }
  }
  EXPECT_GE(checked, 40);
}

TEST(OptimizerProperties, RoomyInstancesAreCollisionFree) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    const Scenario sc = testing::roomy_scenario(rng);
    const SolveResult r = solve_exact(sc, 1.0, 0.1);
    ASSERT_TRUE(r.proven_optimal);
    EXPECT_EQ(r.collisions, 0);
    EXPECT_TRUE(validate(sc, r.schedule).empty());
  }
}

TEST(OptimizerProperties, OracleTieBreakIsLexicographicallySmallest) {
  // Two interchangeable carriers and free slot choice give many optima; both
  // searches must settle on the same lexicographically smallest tensor.
  Scenario sc = base(1, 2, 2);
  sc.demand = {2};
  const SolveResult r = solve_exact(sc, 1.0, 0.1);
  const SolveResult o = enumerate_oracle(sc, 1.0, 0.1);
  EXPECT_TRUE(std::equal(r.schedule.allocation().begin(),
                         r.schedule.allocation().end(),
                         o.schedule.allocation().begin()));
}

}  // namespace
}  // namespace lorahop::opt
