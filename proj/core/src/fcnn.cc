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

#include "lorahop/fcnn.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "lorahop/error.h"
#include "lorahop/random.h"

namespace lorahop::predictor {

std::string_view activation_name(Activation a) {
  return a == Activation::kTanh ? "tanh" : "relu";
}

Activation parse_activation(std::string_view name) {
  if (name == "relu") return Activation::kRelu;
  if (name == "tanh") return Activation::kTanh;
  throw InputError("unknown activation '" + std::string(name) + "'");
}

std::size_t FcnnModel::parameter_count() const {
  std::size_t n = 0;
  for (const auto& layer : layers) n += layer.kernel.size() + layer.bias.size();
  return n;
}

FcnnModel make_model(int input_dim, int outputs, Activation activation) {
  require(input_dim >= 1, "model input dimension must be >= 1");
  require(outputs >= 2, "model needs at least two output channels");
  FcnnModel m;
  m.activation = activation;
  const std::array<int, kLayers + 1> widths = {input_dim, kHiddenWidth,
                                               kHiddenWidth, outputs};
  for (int l = 0; l < kLayers; ++l) {
    DenseLayer& layer = m.layers[l];
    layer.inputs = widths[l];
    layer.outputs = widths[l + 1];
    layer.kernel.assign(static_cast<std::size_t>(layer.inputs) * layer.outputs,
                        0.0f);
    layer.bias.assign(layer.outputs, 0.0f);
  }
  return m;
}

FcnnModel init_model(int input_dim, int outputs, std::uint64_t seed,
                     Activation activation) {
  FcnnModel m = make_model(input_dim, outputs, activation);
  std::mt19937_64 rng(mix64(seed));
  for (DenseLayer& layer : m.layers) {
    const double limit = std::sqrt(6.0 / (layer.inputs + layer.outputs));
    std::uniform_real_distribution<double> dist(-limit, limit);
    for (float& w : layer.kernel) w = static_cast<float>(dist(rng));
  }
  return m;
}

std::vector<double> softmax(std::span<const double> z) {
  std::vector<double> p(z.begin(), z.end());
  if (p.empty()) return p;
  const double top = *std::max_element(p.begin(), p.end());
  double sum = 0.0;
  for (double& v : p) {
    v = std::exp(v - top);
    sum += v;
  }
  for (double& v : p) v /= sum;
  return p;
}

std::vector<double> logits(const FcnnModel& model,
                           std::span<const double> features) {
  if (static_cast<int>(features.size()) != model.input_dim()) {
    throw InputError("model expects " + std::to_string(model.input_dim()) +
                     " features, got " + std::to_string(features.size()));
  }
  for (double v : features) {
    if (!std::isfinite(v)) throw InputError("non-finite feature value");
  }
  std::vector<double> a(features.begin(), features.end());
  for (int l = 0; l < kLayers; ++l) {
    const DenseLayer& layer = model.layers[l];
    std::vector<double> next(layer.bias.begin(), layer.bias.end());
    for (int i = 0; i < layer.inputs; ++i) {
      const double in = a[i];
      if (in == 0.0) continue;
      const float* row = &layer.kernel[static_cast<std::size_t>(i) *
                                       layer.outputs];
      for (int o = 0; o < layer.outputs; ++o) next[o] += in * row[o];
    }
    if (l + 1 < kLayers) {
      for (double& v : next) {
        v = model.activation == Activation::kRelu ? std::max(0.0, v)
                                                  : std::tanh(v);
      }
    }
    a = std::move(next);
  }
  return a;
}

std::vector<double> forward(const FcnnModel& model,
                            std::span<const double> features) {
  return softmax(logits(model, features));
}

int argmax(std::span<const double> values) {
  return static_cast<int>(std::max_element(values.begin(), values.end()) -
                          values.begin());
}

int predict_channel(const FcnnModel& model, std::span<const double> features) {
  return argmax(forward(model, features));
}

int predict_channel(const FcnnModel& model,
                    const telemetry::TelemetryWindow& window) {
  return predict_channel(model, window.snapshot());
}

}  // namespace lorahop::predictor
