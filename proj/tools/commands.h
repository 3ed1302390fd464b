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

// One function per subcommand. Each returns the process exit status and
// lets InputError / DomainError escape for main() to map.

#ifndef LORAHOP_TOOLS_COMMANDS_H_
#define LORAHOP_TOOLS_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace lorahop::cli {

namespace fs = std::filesystem;

inline const fs::path kDefaultTrace = "traces/paper_tables.csv";

struct OptimizeOptions {
  fs::path scenario;
  double alpha = 1.0;
  double beta = 0.1;
  long long budget = 10'000'000;
  fs::path out;  // empty: stdout, no manifest
  std::uint64_t seed = 0;
};
int cmd_optimize(const OptimizeOptions& o);

struct SimulateOptions {
  fs::path config;
  fs::path trace = kDefaultTrace;
  fs::path model;
  fs::path out;     // .csv: event log, otherwise the JSON report
  fs::path events;  // optional extra event log
  std::optional<std::uint64_t> seed;
};
int cmd_simulate(const SimulateOptions& o);

struct GenDatasetOptions {
  fs::path config;
  fs::path trace = kDefaultTrace;
  fs::path out;
  int rows = 5000;
  std::uint64_t seed = 1;
};
int cmd_gen_dataset(const GenDatasetOptions& o);

struct TrainOptions {
  fs::path dataset;
  fs::path out;
  fs::path report;
  int epochs = 200;
  int batch_size = 32;
  double learning_rate = 1e-3;
  double l1_lambda = 1e-4;
  std::string activation = "relu";
  std::uint64_t seed = 1;
};
int cmd_train(const TrainOptions& o);

struct ExportOptions {
  fs::path model;
  fs::path out;
  std::string format = "c_array";
  std::string symbol = "hopping_model";
  std::uint64_t seed = 0;
};
int cmd_export(const ExportOptions& o);

struct PipelineOptions {
  fs::path config = "configs/pipeline.json";
  fs::path trace = kDefaultTrace;
  fs::path out_dir;
  std::optional<std::uint64_t> seed;
};
int cmd_pipeline(const PipelineOptions& o);

struct ImputeOptions {
  fs::path in;
  fs::path out;
  int neighbors = 20;
  bool missing_as_zero = false;
  int jobs = 1;
  std::uint64_t seed = 0;
};
int cmd_recommend_impute(const ImputeOptions& o);

struct StudyOptions {
  fs::path in;         // ratings CSV; empty: generate
  fs::path generator;  // generator config for the generated matrix
  fs::path out;
  std::vector<int> sparsities = {10, 30, 50, 70, 90};
  int seeds = 5;
  int neighbors = 20;
  bool missing_as_zero = false;
  int jobs = 1;
  std::uint64_t seed = 1;
};
int cmd_recommend_study(const StudyOptions& o);

struct GenerateOptions {
  fs::path config;
  fs::path out;
  std::optional<std::uint64_t> seed;
};
int cmd_recommend_generate(const GenerateOptions& o);

struct FigdataOptions {
  fs::path pipeline_dir;
  fs::path study;
  fs::path out_dir;
  int window_slots = 8;
  std::uint64_t seed = 0;
};
int cmd_figdata(const FigdataOptions& o);

}  // namespace lorahop::cli

#endif  // LORAHOP_TOOLS_COMMANDS_H_
