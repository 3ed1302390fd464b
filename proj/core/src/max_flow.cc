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

#include "max_flow.h"

#include <algorithm>
#include <limits>
#include <queue>

namespace lorahop::detail {
namespace {

class Dinic {
 public:
  explicit Dinic(int n) : graph_(n), level_(n), next_(n) {}

  int add(int from, int to, long long cap) {
    graph_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    graph_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
    return static_cast<int>(arcs_.size()) - 2;
  }

  long long run(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (long long pushed =
                 dfs(s, t, std::numeric_limits<long long>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  long long residual(int arc) const { return arcs_[arc].cap; }

 private:
  struct Arc {
    int to;
    long long cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int a : graph_[u]) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  long long dfs(int u, int t, long long limit) {
    if (u == t) return limit;
    for (int& i = next_[u]; i < static_cast<int>(graph_[u].size()); ++i) {
      const int a = graph_[u][i];
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      if (long long got = dfs(arc.to, t, std::min(limit, arc.cap))) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> graph_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace

BoundedFlow::BoundedFlow(int vertices) : vertices_(vertices) {}

int BoundedFlow::add_edge(int from, int to, long long lower, long long upper) {
  edges_.push_back({from, to, lower, upper});
  return static_cast<int>(edges_.size()) - 1;
}

std::optional<std::vector<long long>> BoundedFlow::feasible(int source,
                                                            int sink) {
  // Standard reduction: move lower bounds into vertex excesses, close the
  // s-t path with an unbounded return arc, and saturate from a super source.
  const int super_source = vertices_;
  const int super_sink = vertices_ + 1;
  Dinic dinic(vertices_ + 2);
  std::vector<long long> excess(vertices_, 0);
  std::vector<int> arc_of(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.lower > edge.upper) return std::nullopt;
    arc_of[e] = dinic.add(edge.from, edge.to, edge.upper - edge.lower);
    excess[edge.to] += edge.lower;
    excess[edge.from] -= edge.lower;
  }
  dinic.add(sink, source, std::numeric_limits<long long>::max() / 4);
  long long required = 0;
  for (int v = 0; v < vertices_; ++v) {
    if (excess[v] > 0) {
      dinic.add(super_source, v, excess[v]);
      required += excess[v];
    } else if (excess[v] < 0) {
      dinic.add(v, super_sink, -excess[v]);
    }
  }
  if (dinic.run(super_source, super_sink) != required) return std::nullopt;
  std::vector<long long> flow(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    flow[e] = edge.upper - dinic.residual(arc_of[e]);
  }
  return flow;
}

}  // namespace lorahop::detail
