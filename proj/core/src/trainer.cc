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

#include "lorahop/trainer.h"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <numeric>
#include <random>
#include <sstream>

#include "lorahop/error.h"
#include "lorahop/random.h"

namespace lorahop::predictor {
namespace {

struct LayerOffsets {
  std::size_t kernel;
  std::size_t bias;
};

std::array<LayerOffsets, kLayers> offsets_of(const FcnnModel& model) {
  std::array<LayerOffsets, kLayers> out{};
  std::size_t at = 0;
  for (int l = 0; l < kLayers; ++l) {
    out[l].kernel = at;
    at += model.layers[l].kernel.size();
    out[l].bias = at;
    at += model.layers[l].bias.size();
  }
  return out;
}

// Activations of every layer for one sample; pre[l] holds pre-activations.
struct Trace {
  std::array<std::vector<double>, kLayers + 1> act;
  std::array<std::vector<double>, kLayers> pre;
};

void run_forward(const FcnnModel& model, std::span<const double> p,
                 const std::array<LayerOffsets, kLayers>& off,
                 std::span<const double> x, Trace& tr) {
  tr.act[0].assign(x.begin(), x.end());
  for (int l = 0; l < kLayers; ++l) {
    const DenseLayer& shape = model.layers[l];
    std::vector<double>& z = tr.pre[l];
    z.assign(p.begin() + off[l].bias,
             p.begin() + off[l].bias + shape.outputs);
    const std::vector<double>& in = tr.act[l];
    for (int i = 0; i < shape.inputs; ++i) {
      const double v = in[i];
      if (v == 0.0) continue;
      const double* row = p.data() + off[l].kernel +
                          static_cast<std::size_t>(i) * shape.outputs;
      for (int o = 0; o < shape.outputs; ++o) z[o] += v * row[o];
    }
    std::vector<double>& a = tr.act[l + 1];
    if (l + 1 < kLayers) {
      a.resize(z.size());
      for (std::size_t k = 0; k < z.size(); ++k) {
        a[k] = model.activation == Activation::kRelu ? std::max(0.0, z[k])
                                                     : std::tanh(z[k]);
      }
    } else {
      a = softmax(z);
    }
  }
}

double l1_penalty(const FcnnModel& model, std::span<const double> p,
                  const std::array<LayerOffsets, kLayers>& off) {
  double total = 0.0;
  for (int l = 0; l < kLayers; ++l) {
    if (!model.l1_layers[l]) continue;
    const std::size_t n = model.layers[l].kernel.size();
    for (std::size_t k = 0; k < n; ++k) total += std::abs(p[off[l].kernel + k]);
  }
  return model.l1_lambda * total;
}

double accuracy_on(const FcnnModel& model, std::span<const double> p,
                   const telemetry::Dataset& data,
                   std::span<const std::size_t> rows) {
  if (rows.empty()) return 0.0;
  const auto off = offsets_of(model);
  Trace tr;
  std::size_t hits = 0;
  for (std::size_t r : rows) {
    run_forward(model, p, off, data.rows[r].features, tr);
    hits += argmax(tr.act[kLayers]) == data.rows[r].label;
  }
  return static_cast<double>(hits) / static_cast<double>(rows.size());
}

double loss_on(const FcnnModel& model, std::span<const double> p,
               const telemetry::Dataset& data,
               std::span<const std::size_t> rows) {
  if (rows.empty()) return 0.0;
  const auto off = offsets_of(model);
  Trace tr;
  double total = 0.0;
  for (std::size_t r : rows) {
    run_forward(model, p, off, data.rows[r].features, tr);
    total -= std::log(std::max(tr.act[kLayers][data.rows[r].label], 1e-300));
  }
  return total / static_cast<double>(rows.size()) + l1_penalty(model, p, off);
}

}  // namespace

Split split_rows(std::size_t rows, std::uint64_t seed) {
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(mix64(seed ^ 0x5b117ULL));
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t fifth = rows / 5;
  Split s;
  s.test.assign(order.begin(), order.begin() + fifth);
  s.validation.assign(order.begin() + fifth, order.begin() + 2 * fifth);
  s.train.assign(order.begin() + 2 * fifth, order.end());
  return s;
}

std::vector<double> flatten_parameters(const FcnnModel& model) {
  std::vector<double> out;
  out.reserve(model.parameter_count());
  for (const DenseLayer& layer : model.layers) {
    out.insert(out.end(), layer.kernel.begin(), layer.kernel.end());
    out.insert(out.end(), layer.bias.begin(), layer.bias.end());
  }
  return out;
}

void assign_parameters(FcnnModel& model, std::span<const double> params) {
  require(params.size() == model.parameter_count(),
          "parameter vector does not match the model shape");
  std::size_t at = 0;
  for (DenseLayer& layer : model.layers) {
    for (float& w : layer.kernel) w = static_cast<float>(params[at++]);
    for (float& b : layer.bias) b = static_cast<float>(params[at++]);
  }
}

double loss_and_gradient(const FcnnModel& model,
                         std::span<const double> params,
                         std::span<const std::vector<double>> features,
                         std::span<const int> labels,
                         std::vector<double>* gradient) {
  require(params.size() == model.parameter_count(),
          "parameter vector does not match the model shape");
  require(features.size() == labels.size() && !features.empty(),
          "batch needs matching, non-empty features and labels");
  const auto off = offsets_of(model);
  const double scale = 1.0 / static_cast<double>(features.size());
  if (gradient) gradient->assign(params.size(), 0.0);

  Trace tr;
  double loss = 0.0;
  std::array<std::vector<double>, kLayers> delta;
  for (std::size_t b = 0; b < features.size(); ++b) {
    const int y = labels[b];
    require(y >= 0 && y < model.output_dim(), "label out of range");
    run_forward(model, params, off, features[b], tr);
    loss -= std::log(std::max(tr.act[kLayers][y], 1e-300));
    if (!gradient) continue;

    std::vector<double>& g = *gradient;
    delta[kLayers - 1] = tr.act[kLayers];
    delta[kLayers - 1][y] -= 1.0;
    for (double& d : delta[kLayers - 1]) d *= scale;
    for (int l = kLayers - 1; l >= 0; --l) {
      const DenseLayer& shape = model.layers[l];
      const std::vector<double>& in = tr.act[l];
      const std::vector<double>& d = delta[l];
      for (int i = 0; i < shape.inputs; ++i) {
        double* row =
            g.data() + off[l].kernel + static_cast<std::size_t>(i) * shape.outputs;
        for (int o = 0; o < shape.outputs; ++o) row[o] += in[i] * d[o];
      }
      for (int o = 0; o < shape.outputs; ++o) g[off[l].bias + o] += d[o];
      if (l == 0) break;
      std::vector<double>& prev = delta[l - 1];
      prev.assign(shape.inputs, 0.0);
      for (int i = 0; i < shape.inputs; ++i) {
        const double* row = params.data() + off[l].kernel +
                            static_cast<std::size_t>(i) * shape.outputs;
        double sum = 0.0;
        for (int o = 0; o < shape.outputs; ++o) sum += row[o] * d[o];
        const double z = tr.pre[l - 1][i];
        const double slope =
            model.activation == Activation::kRelu
                ? (z > 0.0 ? 1.0 : 0.0)
                : 1.0 - tr.act[l][i] * tr.act[l][i];
        prev[i] = sum * slope;
      }
    }
  }
  loss *= scale;
  loss += l1_penalty(model, params, off);
  if (gradient && model.l1_lambda != 0.0f) {
    for (int l = 0; l < kLayers; ++l) {
      if (!model.l1_layers[l]) continue;
      const std::size_t n = model.layers[l].kernel.size();
      for (std::size_t k = 0; k < n; ++k) {
        const double w = params[off[l].kernel + k];
        if (w > 0.0) (*gradient)[off[l].kernel + k] += model.l1_lambda;
        if (w < 0.0) (*gradient)[off[l].kernel + k] -= model.l1_lambda;
      }
    }
  }
  return loss;
}

double accuracy(const FcnnModel& model, const telemetry::Dataset& dataset,
                std::span<const std::size_t> rows) {
  const auto p = flatten_parameters(model);
  return accuracy_on(model, p, dataset, rows);
}

TrainReport train(FcnnModel& model, const telemetry::Dataset& dataset,
                  const TrainConfig& config) {
  require(!dataset.rows.empty(), "training needs a non-empty dataset");
  require(config.epochs >= 0, "epochs must be >= 0");
  require(config.batch_size >= 1, "batch size must be >= 1");
  for (const auto& row : dataset.rows) {
    require(static_cast<int>(row.features.size()) == model.input_dim(),
            "dataset feature length does not match the model input");
    require(row.label >= 0 && row.label < model.output_dim(),
            "dataset label outside the model's channel range");
  }

  const Split split = split_rows(dataset.rows.size(), config.seed);
  TrainReport report;
  report.train_size = split.train.size();
  report.val_size = split.validation.size();
  report.test_size = split.test.size();

  std::vector<double> params = flatten_parameters(model);
  report.initial_train_loss = loss_on(model, params, dataset, split.train);

  if (config.epochs > 0 && !split.train.empty()) {
    const AdamConfig& adam = config.adam;
    std::vector<double> m(params.size(), 0.0);
    std::vector<double> v(params.size(), 0.0);
    std::vector<double> grad;
    std::vector<std::size_t> order = split.train;
    std::mt19937_64 rng(mix64(config.seed ^ 0xada11ULL));
    std::vector<std::vector<double>> batch_x;
    std::vector<int> batch_y;
    long long step = 0;

    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t start = 0; start < order.size();
           start += config.batch_size) {
        const std::size_t stop =
            std::min(order.size(), start + config.batch_size);
        batch_x.clear();
        batch_y.clear();
        for (std::size_t k = start; k < stop; ++k) {
          batch_x.push_back(dataset.rows[order[k]].features);
          batch_y.push_back(dataset.rows[order[k]].label);
        }
        const double loss =
            loss_and_gradient(model, params, batch_x, batch_y, &grad);
        if (!std::isfinite(loss)) {
          std::ostringstream msg;
          msg << "training diverged at epoch " << epoch
              << " (loss is not finite); the learning rate "
              << adam.learning_rate << " is too high";
          throw DomainError(msg.str());
        }
        ++step;
        const double c1 = 1.0 - std::pow(adam.beta1, static_cast<double>(step));
        const double c2 = 1.0 - std::pow(adam.beta2, static_cast<double>(step));
        for (std::size_t k = 0; k < params.size(); ++k) {
          m[k] = adam.beta1 * m[k] + (1.0 - adam.beta1) * grad[k];
          v[k] = adam.beta2 * v[k] + (1.0 - adam.beta2) * grad[k] * grad[k];
          params[k] -= adam.learning_rate * (m[k] / c1) /
                       (std::sqrt(v[k] / c2) + adam.epsilon);
        }
      }
      EpochStats stats;
      stats.epoch = epoch;
      stats.train_loss = loss_on(model, params, dataset, split.train);
      stats.val_loss = loss_on(model, params, dataset, split.validation);
      stats.train_accuracy = accuracy_on(model, params, dataset, split.train);
      stats.val_accuracy =
          accuracy_on(model, params, dataset, split.validation);
      if (!std::isfinite(stats.train_loss)) {
        throw DomainError("training diverged at epoch " +
                          std::to_string(epoch) +
                          " (loss is not finite); lower the learning rate");
      }
      report.epochs.push_back(stats);
    }
    assign_parameters(model, params);
  }
  report.test_accuracy = accuracy(model, dataset, split.test);
  return report;
}

std::string train_report_to_json(const TrainReport& report) {
  using nlohmann::json;
  json epochs = json::array();
  for (const auto& e : report.epochs) {
    epochs.push_back({{"epoch", e.epoch},
                      {"train_loss", e.train_loss},
                      {"val_loss", e.val_loss},
                      {"train_accuracy", e.train_accuracy},
                      {"val_accuracy", e.val_accuracy}});
  }
  json j = {{"initial_train_loss", report.initial_train_loss},
            {"test_accuracy", report.test_accuracy},
            {"train_size", report.train_size},
            {"val_size", report.val_size},
            {"test_size", report.test_size},
            {"epochs", epochs}};
  return j.dump(2);
}

}  // namespace lorahop::predictor
