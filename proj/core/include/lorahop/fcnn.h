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

// Channel predictor: input -> Dense(10) -> Dense(10) -> Dense(F) -> softmax.
// Parameters are stored as 32-bit floats, the precision they are deployed
// with; arithmetic runs in double.

#ifndef LORAHOP_FCNN_H_
#define LORAHOP_FCNN_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "lorahop/telemetry.h"

namespace lorahop::predictor {

inline constexpr int kHiddenWidth = 10;
inline constexpr int kLayers = 3;

enum class Activation : std::uint32_t { kRelu = 0, kTanh = 1 };

std::string_view activation_name(Activation a);
Activation parse_activation(std::string_view name);

// Kernel is row-major (inputs x outputs), matching the usual dense layout.
struct DenseLayer {
  int inputs = 0;
  int outputs = 0;
  std::vector<float> kernel;
  std::vector<float> bias;

  float weight(int in, int out) const { return kernel[in * outputs + out]; }
  friend bool operator==(const DenseLayer&, const DenseLayer&) = default;
};

struct FcnnModel {
  std::array<DenseLayer, kLayers> layers;
  Activation activation = Activation::kRelu;
  float l1_lambda = 1e-4f;
  // Which kernels the L1 penalty applies to.
  std::array<bool, kLayers> l1_layers = {true, true, true};

  int input_dim() const { return layers[0].inputs; }
  int output_dim() const { return layers[kLayers - 1].outputs; }
  std::size_t parameter_count() const;

  friend bool operator==(const FcnnModel&, const FcnnModel&) = default;
};

// All-zero parameters with the given shape. Throws InputError unless
// input_dim >= 1 and outputs >= 2.
FcnnModel make_model(int input_dim, int outputs,
                     Activation activation = Activation::kRelu);

// Kernels uniform in +-sqrt(6 / (fan_in + fan_out)), biases zero.
FcnnModel init_model(int input_dim, int outputs, std::uint64_t seed,
                     Activation activation = Activation::kRelu);

std::vector<double> softmax(std::span<const double> logits);
std::vector<double> logits(const FcnnModel& model,
                           std::span<const double> features);
// Probabilities over output_dim() channels. Throws InputError on a length
// mismatch or a non-finite feature.
std::vector<double> forward(const FcnnModel& model,
                            std::span<const double> features);

// First index of the maximum.
int argmax(std::span<const double> values);

int predict_channel(const FcnnModel& model,
                    const telemetry::TelemetryWindow& window);
int predict_channel(const FcnnModel& model, std::span<const double> features);

}  // namespace lorahop::predictor

#endif  // LORAHOP_FCNN_H_
