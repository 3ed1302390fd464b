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

#ifndef LORAHOP_TRAINER_H_
#define LORAHOP_TRAINER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lorahop/fcnn.h"
#include "lorahop/telemetry.h"

namespace lorahop::predictor {

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct TrainConfig {
  int epochs = 200;
  int batch_size = 32;
  AdamConfig adam;
  std::uint64_t seed = 1;
};

struct EpochStats {
  int epoch = 0;
  double train_loss = 0.0;
  double val_loss = 0.0;
  double train_accuracy = 0.0;
  double val_accuracy = 0.0;
};

struct TrainReport {
  double initial_train_loss = 0.0;
  std::vector<EpochStats> epochs;
  double test_accuracy = 0.0;
  std::size_t train_size = 0;
  std::size_t val_size = 0;
  std::size_t test_size = 0;
};

// Row indices of a seeded 60/20/20 split. Validation and test each get
// floor(n / 5) rows; training gets the remainder.
struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> validation;
  std::vector<std::size_t> test;
};
Split split_rows(std::size_t rows, std::uint64_t seed);

// Minimises mean cross-entropy plus l1_lambda * sum |kernel| over the
// training split with mini-batch Adam. Deterministic in (dataset, config).
// Throws InputError for an empty dataset or out-of-range labels and
// DomainError when the loss stops being finite.
TrainReport train(FcnnModel& model, const telemetry::Dataset& dataset,
                  const TrainConfig& config);

double accuracy(const FcnnModel& model, const telemetry::Dataset& dataset,
                std::span<const std::size_t> rows);

// Parameters widened to double, ordered as in the flat file: for each
// layer the kernel then the bias.
std::vector<double> flatten_parameters(const FcnnModel& model);
void assign_parameters(FcnnModel& model, std::span<const double> params);

// Regularised batch loss at `params` (shaped like `model`). When `gradient`
// is non-null it receives d loss / d params; the L1 term contributes
// lambda * sign(w), zero at w == 0.
double loss_and_gradient(const FcnnModel& model,
                         std::span<const double> params,
                         std::span<const std::vector<double>> features,
                         std::span<const int> labels,
                         std::vector<double>* gradient);

std::string train_report_to_json(const TrainReport& report);

}  // namespace lorahop::predictor

#endif  // LORAHOP_TRAINER_H_
