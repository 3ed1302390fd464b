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

#include "commands.h"

#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lorahop/compare.h"
#include "lorahop/dataset.h"
#include "lorahop/error.h"
#include "lorahop/fcnn.h"
#include "lorahop/io.h"
#include "lorahop/model_io.h"
#include "lorahop/optimizer.h"
#include "lorahop/pipeline.h"
#include "lorahop/ratings.h"
#include "lorahop/recommender.h"
#include "lorahop/scenario_io.h"
#include "lorahop/simulator.h"
#include "lorahop/synthetic_ratings.h"
#include "lorahop/trace.h"
#include "lorahop/trainer.h"
#include "manifest.h"

namespace lorahop::cli {
namespace {

using nlohmann::json;

fs::path manifest_path(const fs::path& output) {
  return fs::path(output.string() + ".manifest.json");
}

void emit(RunManifest& manifest, const fs::path& path, std::string_view text) {
  write_text_file(path, text);
  manifest.output(path);
}

std::string flag(double v) { return format_number(v); }

}  // namespace

int cmd_optimize(const OptimizeOptions& o) {
  RunManifest manifest("optimize");
  const std::string text = read_text_file(o.scenario);
  manifest.input("scenario", text);
  manifest.input("alpha", flag(o.alpha));
  manifest.input("beta", flag(o.beta));
  manifest.input("budget", std::to_string(o.budget));
  manifest.seed("seed", o.seed);

  const Scenario sc = scenario_from_json(text);
  opt::SolveResult result;
  try {
    result = opt::solve_exact(sc, o.alpha, o.beta, o.budget);
  } catch (const opt::Infeasible& e) {
    throw DomainError(std::string(e.what()) + " [binding constraint: " +
                      std::string(constraint_name(e.binding())) + "]");
  }
  const std::string out =
      opt::solve_result_to_json(sc, result, o.alpha, o.beta) + "\n";
  if (o.out.empty()) {
    std::cout << out;
    return 0;
  }
  emit(manifest, o.out, out);
  manifest.write(manifest_path(o.out));
  return 0;
}

int cmd_simulate(const SimulateOptions& o) {
  RunManifest manifest("simulate");
  const std::string config_text = read_text_file(o.config);
  manifest.input("config", config_text);
  manifest.input_file("trace", o.trace);
  sim::SimConfig config = sim::sim_config_from_json(config_text);
  if (o.seed) config.rng_seed = *o.seed;
  manifest.seed("rng_seed", config.rng_seed);

  const sim::ChannelTrace trace = sim::ChannelTrace::load(o.trace);
  std::optional<predictor::FcnnModel> model;
  if (!o.model.empty()) {
    const auto bytes = read_binary_file(o.model);
    manifest.input("model", std::string(bytes.begin(), bytes.end()));
    model = predictor::import_flat(bytes);
  }
  const sim::SimReport report =
      sim::run(config, trace, model ? &*model : nullptr);
  if (o.out.extension() == ".csv") {
    emit(manifest, o.out, sim::events_to_csv(report));
  } else {
    emit(manifest, o.out, sim::report_to_json(report) + "\n");
  }
  if (!o.events.empty()) emit(manifest, o.events, sim::events_to_csv(report));
  manifest.write(manifest_path(o.out));
  return 0;
}

int cmd_gen_dataset(const GenDatasetOptions& o) {
  RunManifest manifest("gen-dataset");
  const std::string config_text = read_text_file(o.config);
  manifest.input("config", config_text);
  manifest.input_file("trace", o.trace);
  manifest.input("rows", std::to_string(o.rows));
  manifest.seed("seed", o.seed);
  const sim::SimConfig config = sim::sim_config_from_json(config_text);
  const sim::ChannelTrace trace = sim::ChannelTrace::load(o.trace);
  const telemetry::Dataset data =
      sim::generate_labeled_dataset(trace, config, o.rows, o.seed);
  emit(manifest, o.out, telemetry::dataset_to_json(data) + "\n");
  manifest.write(manifest_path(o.out));
  return 0;
}

int cmd_train(const TrainOptions& o) {
  RunManifest manifest("train");
  const std::string text = read_text_file(o.dataset);
  manifest.input("dataset", text);
  manifest.input("epochs", std::to_string(o.epochs));
  manifest.input("batch_size", std::to_string(o.batch_size));
  manifest.input("learning_rate", flag(o.learning_rate));
  manifest.input("l1_lambda", flag(o.l1_lambda));
  manifest.input("activation", o.activation);
  manifest.seed("seed", o.seed);
  require(o.l1_lambda >= 0.0, "l1 lambda must be >= 0");
  require(o.learning_rate > 0.0, "learning rate must be > 0");

  const telemetry::Dataset data = telemetry::dataset_from_json(text);
  require(!data.rows.empty(), "dataset has no rows");
  predictor::FcnnModel model = predictor::init_model(
      data.feature_length(), data.frequencies, o.seed,
      predictor::parse_activation(o.activation));
  model.l1_lambda = static_cast<float>(o.l1_lambda);
  predictor::TrainConfig tc;
  tc.epochs = o.epochs;
  tc.batch_size = o.batch_size;
  tc.adam.learning_rate = o.learning_rate;
  tc.seed = o.seed;
  const predictor::TrainReport report = predictor::train(model, data, tc);

  const auto bytes = predictor::export_flat(model);
  write_binary_file(o.out, bytes);
  manifest.output(o.out);
  if (!o.report.empty()) {
    emit(manifest, o.report, predictor::train_report_to_json(report) + "\n");
  }
  std::cerr << "test accuracy " << report.test_accuracy << " over "
            << report.test_size << " held-out rows\n";
  manifest.write(manifest_path(o.out));
  return 0;
}

int cmd_export(const ExportOptions& o) {
  RunManifest manifest("export");
  const auto bytes = read_binary_file(o.model);
  manifest.input("model", std::string(bytes.begin(), bytes.end()));
  manifest.input("format", o.format);
  manifest.input("symbol", o.symbol);
  manifest.seed("seed", o.seed);
  const predictor::FcnnModel model = predictor::import_flat(bytes);
  if (o.format == "c_array") {
    emit(manifest, o.out, predictor::export_c_array(model, o.symbol));
  } else if (o.format == "flat") {
    write_binary_file(o.out, predictor::export_flat(model));
    manifest.output(o.out);
  } else {
    throw InputError("export format must be c_array or flat");
  }
  manifest.write(manifest_path(o.out));
  return 0;
}

int cmd_pipeline(const PipelineOptions& o) {
  RunManifest manifest("pipeline");
  const std::string config_text = read_text_file(o.config);
  manifest.input("config", config_text);
  manifest.input_file("trace", o.trace);
  PipelineConfig config = pipeline_config_from_json(config_text);
  if (o.seed) config.seed = *o.seed;
  manifest.seed("seed", config.seed);

  const sim::ChannelTrace trace = sim::ChannelTrace::load(o.trace);
  const PipelineResult r = run_pipeline(trace, config);

  const fs::path& d = o.out_dir;
  emit(manifest, d / "dataset.json", telemetry::dataset_to_json(r.dataset) + "\n");
  emit(manifest, d / "train_report.json",
       predictor::train_report_to_json(r.training) + "\n");
  write_binary_file(d / "model.fhop", predictor::export_flat(r.model));
  manifest.output(d / "model.fhop");
  emit(manifest, d / "model.h",
       predictor::export_c_array(r.model, "hopping_model"));
  emit(manifest, d / "sim_predictor.json",
       sim::report_to_json(r.predictor_run) + "\n");
  emit(manifest, d / "sim_random.json", sim::report_to_json(r.random_run) + "\n");
  emit(manifest, d / "comparison.csv", sim::comparison_to_csv(r.comparison));
  emit(manifest, d / "fig8.csv", fig8_csv(r.comparison));
  emit(manifest, d / "report.json", pipeline_summary_json(config, r) + "\n");
  manifest.write(d / "manifest.json");
  std::cerr << "pipeline: test accuracy " << r.training.test_accuracy
            << ", outputs in " << d.string() << "\n";
  return 0;
}

int cmd_recommend_impute(const ImputeOptions& o) {
  RunManifest manifest("recommend impute");
  const std::string text = read_text_file(o.in);
  manifest.input("ratings", text);
  manifest.input("k", std::to_string(o.neighbors));
  manifest.input("missing_as_zero", o.missing_as_zero ? "1" : "0");
  manifest.seed("seed", o.seed);
  rec::ImputeOptions options;
  options.neighbors = o.neighbors;
  options.mode = o.missing_as_zero ? rec::MissingMode::kAsZero
                                   : rec::MissingMode::kCommonSupport;
  options.threads = o.jobs;
  const rec::RatingsMatrix sparse = rec::RatingsMatrix::parse_csv(text);
  emit(manifest, o.out, rec::impute(sparse, options).to_csv());
  manifest.write(manifest_path(o.out));
  return 0;
}

int cmd_recommend_study(const StudyOptions& o) {
  RunManifest manifest("recommend study");
  rec::RatingsMatrix truth;
  if (!o.in.empty()) {
    const std::string text = read_text_file(o.in);
    manifest.input("ratings", text);
    truth = rec::RatingsMatrix::parse_csv(text);
  } else {
    rec::SyntheticRatingsConfig gen;
    if (!o.generator.empty()) {
      const std::string text = read_text_file(o.generator);
      manifest.input("generator", text);
      gen = rec::synthetic_config_from_json(text);
    }
    manifest.seed("generator_seed", gen.seed);
    truth = rec::generate_ratings(gen);
  }
  std::string levels;
  for (int s : o.sparsities) levels += std::to_string(s) + ",";
  manifest.input("sparsities", levels);
  manifest.input("seeds", std::to_string(o.seeds));
  manifest.input("k", std::to_string(o.neighbors));
  manifest.input("missing_as_zero", o.missing_as_zero ? "1" : "0");
  manifest.seed("seed", o.seed);

  rec::StudyConfig config;
  config.sparsities = o.sparsities;
  config.seeds = o.seeds;
  config.base_seed = o.seed;
  config.impute.neighbors = o.neighbors;
  config.impute.mode = o.missing_as_zero ? rec::MissingMode::kAsZero
                                         : rec::MissingMode::kCommonSupport;
  config.jobs = o.jobs;
  const rec::StudyResult result = rec::run_study(truth, config);
  emit(manifest, o.out, rec::study_to_json(result) + "\n");
  for (const rec::StudyLevel& l : result.levels) {
    std::cerr << "sparsity " << l.sparsity << "%: mean per-class accuracy "
              << l.mean_accuracy << "\n";
  }
  manifest.write(manifest_path(o.out));
  return 0;
}

int cmd_recommend_generate(const GenerateOptions& o) {
  RunManifest manifest("recommend generate");
  rec::SyntheticRatingsConfig gen;
  if (!o.config.empty()) {
    const std::string text = read_text_file(o.config);
    manifest.input("config", text);
    gen = rec::synthetic_config_from_json(text);
  }
  if (o.seed) gen.seed = *o.seed;
  manifest.seed("seed", gen.seed);
  emit(manifest, o.out, rec::generate_ratings(gen).to_csv());
  manifest.write(manifest_path(o.out));
  return 0;
}

int cmd_figdata(const FigdataOptions& o) {
  RunManifest manifest("figdata");
  manifest.seed("seed", o.seed);
  manifest.input("window_slots", std::to_string(o.window_slots));
  if (o.pipeline_dir.empty() && o.study.empty()) {
    throw InputError(
        "figdata needs --pipeline-dir and/or --study from a prior run");
  }
  require(o.window_slots >= 1, "window slots must be >= 1");

  if (!o.pipeline_dir.empty()) {
    const std::string a = read_text_file(o.pipeline_dir / "sim_predictor.json");
    const std::string b = read_text_file(o.pipeline_dir / "sim_random.json");
    manifest.input("sim_predictor", a);
    manifest.input("sim_random", b);
    const auto table = sim::compare_strategies(sim::report_from_json(a),
                                               sim::report_from_json(b));
    emit(manifest, o.out_dir / "fig8_performance.csv", fig8_csv(table));
    emit(manifest, o.out_dir / "fig8_improvement.csv",
         sim::comparison_to_csv(table));
  }

  // Model size against channel count; independent of any run.
  std::ostringstream fig9;
  fig9 << "frequencies,input_dim,parameters,flat_bytes,c_array_bytes\n";
  for (int F = 2; F <= 9; ++F) {
    const int input = telemetry::feature_length(o.window_slots, F);
    const predictor::FcnnModel m = predictor::make_model(input, F);
    fig9 << F << ',' << input << ',' << m.parameter_count() << ','
         << predictor::flat_size(input, F) << ','
         << predictor::export_c_array(m, "hopping_model").size() << '\n';
  }
  emit(manifest, o.out_dir / "fig9_model_size.csv", fig9.str());

  if (!o.study.empty()) {
    const std::string text = read_text_file(o.study);
    manifest.input("study", text);
    std::ostringstream confusion, accuracy, distribution;
    confusion << "sparsity,true_rating,predicted_rating,count\n";
    accuracy << "sparsity,rating,accuracy\n";
    distribution << "rating,count\n";
    try {
      const json j = json::parse(text);
      for (const json& level : j.at("levels")) {
        const int pct = level.at("sparsity").get<int>();
        const json& pooled = level.at("pooled");
        const json& cm = pooled.at("confusion");
        for (int t = 0; t < rec::kRatingLevels; ++t) {
          for (int p = 0; p < rec::kRatingLevels; ++p) {
            confusion << pct << ',' << t + 1 << ',' << p + 1 << ','
                      << cm.at(t).at(p).get<long long>() << '\n';
          }
          const json& acc = pooled.at("per_class_accuracy").at(t);
          accuracy << pct << ',' << t + 1 << ','
                   << (acc.is_null() ? std::string()
                                     : format_number(acc.get<double>()))
                   << '\n';
        }
      }
      const json& dist = j.at("distribution");
      for (int r = 0; r < rec::kRatingLevels; ++r) {
        distribution << r + 1 << ',' << dist.at(r).get<long long>() << '\n';
      }
    } catch (const json::exception& e) {
      throw InputError(std::string("bad study report: ") + e.what());
    }
    emit(manifest, o.out_dir / "fig10_confusion.csv", confusion.str());
    emit(manifest, o.out_dir / "fig10_accuracy.csv", accuracy.str());
    emit(manifest, o.out_dir / "fig10_distribution.csv", distribution.str());
  }
  manifest.write(o.out_dir / "manifest.json");
  return 0;
}

}  // namespace lorahop::cli
