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

#include "lorahop/pipeline.h"

#include <cmath>
#include <json.hpp>
#include <sstream>

#include "lorahop/dataset.h"
#include "lorahop/error.h"
#include "lorahop/io.h"

namespace lorahop {
namespace {

using nlohmann::json;

template <typename Fn>
auto stage(std::string_view name, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const InputError& e) {
    throw InputError(std::string(name) + ": " + e.what());
  } catch (const DomainError& e) {
    throw DomainError(std::string(name) + ": " + e.what());
  }
}

sim::SimConfig with_strategy(sim::SimConfig c, sim::Strategy s,
                             std::uint64_t seed) {
  for (sim::NodeConfig& n : c.nodes) n.strategy = s;
  c.rng_seed = seed;
  return c;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

PipelineConfig pipeline_config_from_json(std::string_view text) {
  PipelineConfig c;
  try {
    const json j = json::parse(text);
    require(j.is_object(), "pipeline config must be a JSON object");
    require(j.contains("simulation"), "pipeline config needs 'simulation'");
    c.simulation = sim::sim_config_from_json(j.at("simulation").dump());
    c.dataset_rows = j.value("dataset_rows", c.dataset_rows);
    c.seed = j.value("seed", c.seed);
    c.metric = sim::parse_metric(j.value("metric", std::string("observed")));
    if (j.contains("train")) {
      const json& t = j.at("train");
      c.train.epochs = t.value("epochs", c.train.epochs);
      c.train.batch_size = t.value("batch_size", c.train.batch_size);
      c.train.adam.learning_rate =
          t.value("learning_rate", c.train.adam.learning_rate);
      c.train.adam.beta1 = t.value("beta1", c.train.adam.beta1);
      c.train.adam.beta2 = t.value("beta2", c.train.adam.beta2);
      c.train.adam.epsilon = t.value("epsilon", c.train.adam.epsilon);
      c.l1_lambda = t.value("l1_lambda", c.l1_lambda);
      c.activation = predictor::parse_activation(
          t.value("activation", std::string("relu")));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("bad pipeline config: ") + e.what());
  }
  require(c.dataset_rows > 0, "dataset_rows must be > 0");
  require(c.l1_lambda >= 0.0f, "l1_lambda must be >= 0");
  return c;
}

std::string pipeline_config_to_json(const PipelineConfig& c) {
  const json j = {
      {"simulation", json::parse(sim::sim_config_to_json(c.simulation))},
      {"dataset_rows", c.dataset_rows},
      {"seed", c.seed},
      {"metric", sim::metric_name(c.metric)},
      {"train",
       {{"epochs", c.train.epochs},
        {"batch_size", c.train.batch_size},
        {"learning_rate", c.train.adam.learning_rate},
        {"beta1", c.train.adam.beta1},
        {"beta2", c.train.adam.beta2},
        {"epsilon", c.train.adam.epsilon},
        {"l1_lambda", c.l1_lambda},
        {"activation", predictor::activation_name(c.activation)}}}};
  return j.dump(2);
}

PipelineResult run_pipeline(const sim::ChannelTrace& trace,
                            const PipelineConfig& config) {
  PipelineResult r;
  r.dataset = stage("dataset", [&] {
    return sim::generate_labeled_dataset(trace, config.simulation,
                                         config.dataset_rows, config.seed);
  });
  r.model = stage("train", [&] {
    predictor::FcnnModel m = predictor::init_model(
        r.dataset.feature_length(), r.dataset.frequencies, config.seed,
        config.activation);
    m.l1_lambda = config.l1_lambda;
    predictor::TrainConfig tc = config.train;
    tc.seed = config.seed;
    r.training = predictor::train(m, r.dataset, tc);
    return m;
  });
  r.predictor_run = stage("simulate predictor_hop", [&] {
    return sim::run(with_strategy(config.simulation,
                                  sim::Strategy::predictor_hop(), config.seed),
                    trace, &r.model);
  });
  r.random_run = stage("simulate random_hop", [&] {
    return sim::run(with_strategy(config.simulation,
                                  sim::Strategy::random_hop(), config.seed),
                    trace);
  });
  r.comparison = stage("compare", [&] {
    return sim::compare_strategies(r.predictor_run, r.random_run,
                                   config.metric);
  });
  return r;
}

std::string fig8_csv(const std::vector<sim::SizeComparison>& comparison) {
  std::ostringstream out;
  out << "metric,size,strategy,value\n";
  auto emit = [&](const char* metric, auto pick_a, auto pick_b) {
    for (const sim::SizeComparison& c : comparison) {
      out << metric << ',' << c.size << ",predictor_hop,"
          << format_number(pick_a(c)) << '\n';
      out << metric << ',' << c.size << ",random_hop,"
          << format_number(pick_b(c)) << '\n';
    }
  };
  emit("rssi", [](const auto& c) { return c.rssi_a; },
       [](const auto& c) { return c.rssi_b; });
  emit("snr", [](const auto& c) { return c.snr_a; },
       [](const auto& c) { return c.snr_b; });
  emit("pdr", [](const auto& c) { return c.pdr_a; },
       [](const auto& c) { return c.pdr_b; });
  return out.str();
}

std::string pipeline_summary_json(const PipelineConfig& config,
                                  const PipelineResult& result) {
  json sizes = json::array();
  double best_rssi = -INFINITY;
  double best_snr = -INFINITY;
  for (const sim::SizeComparison& c : result.comparison) {
    sizes.push_back({{"size", c.size},
                     {"rssi_predictor", c.rssi_a},
                     {"rssi_random", c.rssi_b},
                     {"rssi_improvement_pct", finite_or_null(c.rssi_improvement_pct)},
                     {"snr_predictor", c.snr_a},
                     {"snr_random", c.snr_b},
                     {"snr_improvement_pct", finite_or_null(c.snr_improvement_pct)},
                     {"pdr_predictor", c.pdr_a},
                     {"pdr_random", c.pdr_b},
                     {"pdr_delta", c.pdr_delta}});
    best_rssi = std::max(best_rssi, c.rssi_improvement_pct);
    best_snr = std::max(best_snr, c.snr_improvement_pct);
  }
  const predictor::TrainReport& t = result.training;
  const double final_loss =
      t.epochs.empty() ? t.initial_train_loss : t.epochs.back().train_loss;
  const json j = {
      {"seed", config.seed},
      {"metric", sim::metric_name(config.metric)},
      {"dataset_rows", result.dataset.rows.size()},
      {"training",
       {{"initial_train_loss", t.initial_train_loss},
        {"final_train_loss", final_loss},
        {"test_accuracy", t.test_accuracy},
        {"train_size", t.train_size},
        {"val_size", t.val_size},
        {"test_size", t.test_size}}},
      {"max_rssi_improvement_pct", finite_or_null(best_rssi)},
      {"max_snr_improvement_pct", finite_or_null(best_snr)},
      {"sizes", sizes}};
  return j.dump(2);
}

}  // namespace lorahop
