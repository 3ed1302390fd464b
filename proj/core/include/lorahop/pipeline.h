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

// End-to-end predictor study: counterfactual dataset, training, and a
// predictor_hop versus random_hop replay on the same trace and seed.

#ifndef LORAHOP_PIPELINE_H_
#define LORAHOP_PIPELINE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lorahop/compare.h"
#include "lorahop/fcnn.h"
#include "lorahop/simulator.h"
#include "lorahop/telemetry.h"
#include "lorahop/trace.h"
#include "lorahop/trainer.h"

namespace lorahop {

struct PipelineConfig {
  // Nodes, payloads and channel settings. The strategies given here drive
  // data collection; evaluation swaps every node to predictor_hop and to
  // random_hop.
  sim::SimConfig simulation;
  int dataset_rows = 5000;
  predictor::TrainConfig train;
  float l1_lambda = 1e-4f;
  predictor::Activation activation = predictor::Activation::kRelu;
  sim::Metric metric = sim::Metric::kObserved;
  std::uint64_t seed = 7;
};

// {"simulation": {...}, "dataset_rows": 5000, "seed": 7, "metric": "observed",
//  "train": {"epochs", "batch_size", "learning_rate", "beta1", "beta2",
//            "epsilon", "l1_lambda", "activation"}}
PipelineConfig pipeline_config_from_json(std::string_view text);
std::string pipeline_config_to_json(const PipelineConfig& config);

struct PipelineResult {
  telemetry::Dataset dataset;
  predictor::FcnnModel model;
  predictor::TrainReport training;
  sim::SimReport predictor_run;
  sim::SimReport random_run;
  std::vector<sim::SizeComparison> comparison;  // predictor vs random
};

// Errors keep their type and gain the failing stage's name.
PipelineResult run_pipeline(const sim::ChannelTrace& trace,
                            const PipelineConfig& config);

// Long form of the comparison: metric,size,strategy,value with metrics
// rssi, snr and pdr and strategies predictor_hop and random_hop.
std::string fig8_csv(const std::vector<sim::SizeComparison>& comparison);

std::string pipeline_summary_json(const PipelineConfig& config,
                                  const PipelineResult& result);

}  // namespace lorahop

#endif  // LORAHOP_PIPELINE_H_
