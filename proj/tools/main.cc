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

// lorahop: channel-hopping optimisation, trace-driven simulation, predictor
// training/export and the collaborative-filtering study.
//
// Exit status: 0 success, 1 domain failure (infeasible, diverged),
// 2 input error (bad flags, files or values).

#include <CLI11.hpp>
#include <functional>
#include <iostream>

#include "commands.h"
#include "lorahop/error.h"

namespace {

using namespace lorahop::cli;

constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LoRa channel-hopping toolkit", "lorahop"};
  app.set_version_flag("--version", LORAHOP_VERSION);
  app.require_subcommand(1);
  std::function<int()> action;

  OptimizeOptions opt;
  auto* optimize = app.add_subcommand(
      "optimize", "Solve a scenario exactly and print the schedule as JSON");
  optimize->add_option("--scenario", opt.scenario, "Scenario JSON")
      ->required()
      ->check(CLI::ExistingFile);
  optimize->add_option("--alpha", opt.alpha, "Collision weight")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  optimize->add_option("--beta", opt.beta, "Hop weight")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  optimize->add_option("--budget", opt.budget, "Node-expansion budget")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  optimize->add_option("--out", opt.out, "Output file (default stdout)");
  optimize->add_option("--seed", opt.seed, "Recorded only; the solver is exact");
  optimize->callback([&] { action = [&] { return cmd_optimize(opt); }; });

  SimulateOptions sim;
  auto* simulate =
      app.add_subcommand("simulate", "Replay nodes against the channel trace");
  simulate->add_option("--config", sim.config, "Simulation config JSON")
      ->required()
      ->check(CLI::ExistingFile);
  simulate->add_option("--trace", sim.trace, "Channel trace CSV")
      ->capture_default_str();
  simulate->add_option("--model", sim.model, "Flat model for predictor_hop");
  simulate->add_option("--out", sim.out,
                       "Report: .json summary or .csv event log")
      ->required();
  simulate->add_option("--events", sim.events, "Also write the event log CSV");
  simulate->add_option("--seed", sim.seed, "Override the config's rng_seed");
  simulate->callback([&] { action = [&] { return cmd_simulate(sim); }; });

  GenDatasetOptions gen;
  auto* gen_dataset = app.add_subcommand(
      "gen-dataset", "Label telemetry windows by counterfactual replay");
  gen_dataset->add_option("--config", gen.config, "Simulation config JSON")
      ->required()
      ->check(CLI::ExistingFile);
  gen_dataset->add_option("--trace", gen.trace, "Channel trace CSV")
      ->capture_default_str();
  gen_dataset->add_option("--rows", gen.rows, "Rows to emit")
      ->capture_default_str();
  gen_dataset->add_option("--seed", gen.seed)->capture_default_str();
  gen_dataset->add_option("--out", gen.out, "Dataset JSON")->required();
  gen_dataset->callback([&] { action = [&] { return cmd_gen_dataset(gen); }; });

  TrainOptions tr;
  auto* train = app.add_subcommand("train", "Train the channel predictor");
  train->add_option("--dataset", tr.dataset, "Dataset JSON")
      ->required()
      ->check(CLI::ExistingFile);
  train->add_option("--out", tr.out, "Flat model file")->required();
  train->add_option("--report", tr.report, "Per-epoch curves JSON");
  train->add_option("--epochs", tr.epochs)->capture_default_str()->check(
      CLI::NonNegativeNumber);
  train->add_option("--batch", tr.batch_size)->capture_default_str()->check(
      CLI::PositiveNumber);
  train->add_option("--lr", tr.learning_rate)->capture_default_str();
  train->add_option("--l1", tr.l1_lambda)->capture_default_str();
  train->add_option("--activation", tr.activation)
      ->capture_default_str()
      ->check(CLI::IsMember({"relu", "tanh"}));
  train->add_option("--seed", tr.seed)->capture_default_str();
  train->callback([&] { action = [&] { return cmd_train(tr); }; });

  ExportOptions ex;
  auto* exp = app.add_subcommand("export", "Convert a flat model");
  exp->add_option("--model", ex.model, "Flat model file")
      ->required()
      ->check(CLI::ExistingFile);
  exp->add_option("--format", ex.format)
      ->capture_default_str()
      ->check(CLI::IsMember({"c_array", "flat"}));
  exp->add_option("--symbol", ex.symbol, "C array name")->capture_default_str();
  exp->add_option("--out", ex.out)->required();
  exp->add_option("--seed", ex.seed, "Recorded only");
  exp->callback([&] { action = [&] { return cmd_export(ex); }; });

  PipelineOptions pipe;
  auto* pipeline = app.add_subcommand(
      "pipeline", "Dataset, training, export and predictor-vs-random replay");
  pipeline->add_option("--config", pipe.config, "Pipeline config JSON")
      ->capture_default_str()
      ->check(CLI::ExistingFile);
  pipeline->add_option("--trace", pipe.trace, "Channel trace CSV")
      ->capture_default_str();
  pipeline->add_option("--out-dir", pipe.out_dir)->required();
  pipeline->add_option("--seed", pipe.seed, "Override the config's seed");
  pipeline->callback([&] { action = [&] { return cmd_pipeline(pipe); }; });

  auto* recommend =
      app.add_subcommand("recommend", "Collaborative-filtering tools");
  recommend->require_subcommand(1);

  ImputeOptions imp;
  auto* impute = recommend->add_subcommand("impute", "Fill missing ratings");
  impute->add_option("--in", imp.in, "Sparse ratings CSV")
      ->required()
      ->check(CLI::ExistingFile);
  impute->add_option("--out", imp.out)->required();
  impute->add_option("--k", imp.neighbors)->capture_default_str()->check(
      CLI::PositiveNumber);
  impute->add_flag("--missing-as-zero", imp.missing_as_zero,
                   "Cosine over all columns with missing read as 0");
  impute->add_option("--jobs", imp.jobs)->capture_default_str()->check(
      CLI::PositiveNumber);
  impute->add_option("--seed", imp.seed, "Recorded only");
  impute->callback([&] { action = [&] { return cmd_recommend_impute(imp); }; });

  StudyOptions st;
  auto* study = recommend->add_subcommand(
      "study", "Accuracy of imputation across sparsity levels");
  study->add_option("--in", st.in, "Complete ratings CSV (default: generate)")
      ->check(CLI::ExistingFile);
  study->add_option("--generator", st.generator, "Generator config JSON")
      ->check(CLI::ExistingFile);
  study->add_option("--sparsities", st.sparsities)
      ->delimiter(',')
      ->capture_default_str();
  study->add_option("--seeds", st.seeds)->capture_default_str()->check(
      CLI::PositiveNumber);
  study->add_option("--k", st.neighbors)->capture_default_str()->check(
      CLI::PositiveNumber);
  study->add_flag("--missing-as-zero", st.missing_as_zero);
  study->add_option("--jobs", st.jobs)->capture_default_str()->check(
      CLI::PositiveNumber);
  study->add_option("--seed", st.seed)->capture_default_str();
  study->add_option("--out", st.out)->required();
  study->callback([&] { action = [&] { return cmd_recommend_study(st); }; });

  GenerateOptions ge;
  auto* generate = recommend->add_subcommand(
      "generate", "Write a synthetic soil x plant ratings matrix");
  generate->add_option("--config", ge.config, "Generator config JSON")
      ->check(CLI::ExistingFile);
  generate->add_option("--seed", ge.seed, "Override the config's seed");
  generate->add_option("--out", ge.out)->required();
  generate->callback(
      [&] { action = [&] { return cmd_recommend_generate(ge); }; });

  FigdataOptions fd;
  auto* figdata =
      app.add_subcommand("figdata", "Plot-ready CSV from earlier runs");
  figdata->add_option("--pipeline-dir", fd.pipeline_dir,
                      "Output directory of a pipeline run");
  figdata->add_option("--study", fd.study, "Report of recommend study");
  figdata->add_option("--window-slots", fd.window_slots,
                      "Window length for the model-size table")
      ->capture_default_str();
  figdata->add_option("--out-dir", fd.out_dir)->required();
  figdata->add_option("--seed", fd.seed, "Recorded only");
  figdata->callback([&] { action = [&] { return cmd_figdata(fd); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return action();
  } catch (const lorahop::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const lorahop::DomainError& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
