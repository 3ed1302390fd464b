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

// Exact minimisation of alpha * collisions + beta * hops over feasible
// schedules, for instances small enough to search exhaustively.
//
// solve_exact() runs a depth-first branch-and-bound over whole per-node
// allocation rows, visited in ascending lexicographic order so the first
// optimum found is also the lexicographically smallest allocation tensor.
// Symbol counts are not branched on: once an allocation is complete, a
// bounded-flow feasibility check either produces symbol counts meeting
// every demand and capacity or rejects the allocation.
//
// enumerate_oracle() is the independent ground truth used by tests. It
// walks every allocation and searches symbol counts by brute force.

#ifndef LORAHOP_OPTIMIZER_H_
#define LORAHOP_OPTIMIZER_H_

#include <cstdint>
#include <optional>
#include <string>

#include "lorahop/error.h"
#include "lorahop/scenario.h"

namespace lorahop::opt {

struct SolveResult {
  Schedule schedule;
  double objective_value = 0.0;
  long long collisions = 0;
  long long hops = 0;
  long long nodes_explored = 0;
  bool proven_optimal = false;
};

/// No feasible schedule exists. `binding` names the constraint family that
/// rejected the most candidates.
class Infeasible : public DomainError {
 public:
  Infeasible(Constraint binding, const std::string& what)
      : DomainError(what), binding_(binding) {}
  Constraint binding() const { return binding_; }

 private:
  Constraint binding_;
};

inline constexpr double kDefaultAlpha = 1.0;
inline constexpr double kDefaultBeta = 0.1;
inline constexpr long long kDefaultBudget = 10'000'000;
inline constexpr long long kOracleStateCap = 10'000'000;

// Throws Infeasible when the search proves no schedule exists and
// DomainError when the budget runs out before any feasible schedule.
SolveResult solve_exact(const Scenario& scenario, double alpha, double beta,
                        long long budget = kDefaultBudget);

// Number of allocation tensors the oracle would visit.
double oracle_state_count(const Scenario& scenario);

// Throws InputError when oracle_state_count() exceeds `cap` and Infeasible
// when no allocation admits valid symbol counts.
SolveResult enumerate_oracle(const Scenario& scenario, double alpha,
                             double beta, long long cap = kOracleStateCap);

// Symbol counts for a fixed allocation, or nullopt when none satisfy the
// per-cell bounds, per-channel capacities and demands together. z/delta are
// rederived from x.
std::optional<Schedule> assign_symbols(const Scenario& scenario,
                                       const Schedule& allocation);

std::string solve_result_to_json(const Scenario& scenario,
                                 const SolveResult& result, double alpha,
                                 double beta);

}  // namespace lorahop::opt

#endif  // LORAHOP_OPTIMIZER_H_
