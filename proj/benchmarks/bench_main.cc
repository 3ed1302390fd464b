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

#include <benchmark/benchmark.h>

#include <vector>

#include "lorahop/fcnn.h"
#include "lorahop/optimizer.h"
#include "lorahop/recommender.h"
#include "lorahop/simulator.h"
#include "lorahop/synthetic_ratings.h"
#include "lorahop/trace.h"

namespace {

using namespace lorahop;

Scenario busy_scenario(int nodes, int freqs, int slots) {
  Scenario sc;
  sc.num_nodes = nodes;
  sc.num_gateways = 1;
  sc.horizon = slots;
  for (int f = 0; f < freqs; ++f) sc.frequencies_mhz.push_back(868.0 + f);
  sc.gateway_capacity = {nodes};
  sc.freq_capacity.assign(freqs, 4);
  sc.min_symbols = 1;
  sc.demand.assign(nodes, slots);
  sc.must_transmit.assign(nodes, std::vector<bool>(slots, true));
  return sc;
}

void BM_SolveExact(benchmark::State& state) {
  const Scenario sc = busy_scenario(static_cast<int>(state.range(0)), 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(opt::solve_exact(sc, 1.0, 0.1).objective_value);
  }
}
BENCHMARK(BM_SolveExact)->Arg(2)->Arg(3)->Arg(4);

void BM_Oracle(benchmark::State& state) {
  const Scenario sc = busy_scenario(static_cast<int>(state.range(0)), 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(opt::enumerate_oracle(sc, 1.0, 0.1).objective_value);
  }
}
BENCHMARK(BM_Oracle)->Arg(2)->Arg(3);

void BM_Forward(benchmark::State& state) {
  const int F = static_cast<int>(state.range(0));
  const int input = telemetry::feature_length(8, F);
  const auto model = predictor::init_model(input, F, 1);
  std::vector<double> x(input, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(predictor::predict_channel(model, x));
  }
}
BENCHMARK(BM_Forward)->Arg(3)->Arg(9);

void BM_Impute(benchmark::State& state) {
  rec::SyntheticRatingsConfig gen;
  const auto truth = rec::generate_ratings(gen);
  const auto sparse =
      rec::sparsify(truth, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rec::impute(sparse).rows());
  }
}
BENCHMARK(BM_Impute)->Arg(10)->Arg(90)->Unit(benchmark::kMillisecond);

void BM_SimulateRandomHop(benchmark::State& state) {
  const auto trace =
      sim::ChannelTrace::load(LORAHOP_ASSET_DIR "/traces/paper_tables.csv");
  sim::SimConfig config;
  for (int i = 0; i < state.range(0); ++i) {
    config.nodes.push_back({std::string(1, static_cast<char>('A' + i % 3)), 0,
                            0, sim::Strategy::random_hop()});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(sim::run(config, trace).events.size());
  }
}
BENCHMARK(BM_SimulateRandomHop)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
