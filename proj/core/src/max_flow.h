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

#ifndef LORAHOP_SRC_MAX_FLOW_H_
#define LORAHOP_SRC_MAX_FLOW_H_

#include <optional>
#include <vector>

namespace lorahop::detail {

// Integral flow with per-edge lower and upper bounds (Dinic underneath).
class BoundedFlow {
 public:
  explicit BoundedFlow(int vertices);

  // Returns an edge handle for flow_on().
  int add_edge(int from, int to, long long lower, long long upper);

  // Finds a flow from `source` to `sink` honouring every bound and flow
  // conservation elsewhere. Returns nullopt when none exists.
  std::optional<std::vector<long long>> feasible(int source, int sink);

 private:
  struct Edge {
    int from;
    int to;
    long long lower;
    long long upper;
  };
  int vertices_;
  std::vector<Edge> edges_;
};

}  // namespace lorahop::detail

#endif  // LORAHOP_SRC_MAX_FLOW_H_
