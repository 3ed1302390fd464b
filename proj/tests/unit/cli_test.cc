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


// Drives the installed command-line tool end to end: exit codes, outputs
// and byte-for-byte reproducibility.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace {

namespace fs = std::filesystem;

const std::string kCli = LORAHOP_CLI_PATH;
const fs::path kAssets = LORAHOP_ASSET_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("lorahop_cli_") + info->name() + "_" +
            std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Exit status of `lorahop <args>`, stdout to <dir>/stdout.
  int run(const std::string& args) const {
    const std::string cmd = "\"" + kCli + "\" " + args + " > \"" +
                            (dir_ / "stdout").string() + "\" 2> \"" +
                            (dir_ / "stderr").string() + "\"";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string out(const std::string& name) const { return slurp(dir_ / name); }
  std::string path(const std::string& name) const {
    return "\"" + (dir_ / name).string() + "\"";
  }
  static std::string asset(const std::string& rel) {
    return "\"" + (kAssets / rel).string() + "\"";
  }

  fs::path dir_;
};

TEST_F(Cli, OptimizeSingleNodeIsFree) {
  ASSERT_EQ(run("optimize --scenario " + asset("scenarios/single_node.json")),
            0);
  const auto j = nlohmann::json::parse(out("stdout"));
  EXPECT_EQ(j.at("objective_value").get<double>(), 0.0);
}

TEST_F(Cli, OptimizeWritesOutputAndManifest) {
  ASSERT_EQ(run("optimize --scenario " +
                asset("scenarios/three_nodes_busy.json") + " --out " +
                path("sol.json")),
            0);
  EXPECT_TRUE(fs::exists(dir_ / "sol.json"));
  const auto m = nlohmann::json::parse(out("sol.json.manifest.json"));
  EXPECT_EQ(m.at("command"), "optimize");
  EXPECT_EQ(m.at("digest").get<std::string>().size(), 16u);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("optimize --scenario " +
                asset("scenarios/infeasible_demand.json")),
            1);
  EXPECT_NE(out("stderr").find("binding constraint"), std::string::npos);

  std::ofstream(dir_ / "broken.json") << "{\"num_nodes\": ";
  EXPECT_EQ(run("optimize --scenario " + path("broken.json")), 2);
  EXPECT_EQ(run("optimize --scenario " + path("absent.json")), 2);
  EXPECT_EQ(run("optimize --no-such-flag"), 2);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("figdata --out-dir " + path("fig")), 2);
  EXPECT_EQ(run("--version"), 0);
}

TEST_F(Cli, SimulateIsReproducible) {
  const std::string base = "simulate --config " +
                           asset("configs/sim_three_nodes.json") +
                           " --trace " + asset("traces/paper_tables.csv");
  ASSERT_EQ(run(base + " --out " + path("a.json") + " --events " +
                path("a.csv")),
            0);
  ASSERT_EQ(run(base + " --out " + path("b.json") + " --events " +
                path("b.csv")),
            0);
  EXPECT_EQ(out("a.json"), out("b.json"));
  EXPECT_EQ(out("a.csv"), out("b.csv"));
  ASSERT_EQ(run(base + " --seed 99 --out " + path("c.json")), 0);
  EXPECT_NE(out("a.json"), out("c.json"));
}

TEST_F(Cli, FixedCarrierReportMatchesTheTable) {
  ASSERT_EQ(run("simulate --config " + asset("configs/sim_fixed_869.json") +
                " --trace " + asset("traces/paper_tables.csv") + " --out " +
                path("r.json")),
            0);
  const auto j = nlohmann::json::parse(out("r.json"));
  const auto& first = j.at("rows").at(0);
  EXPECT_EQ(first.at("size"), 30);
  EXPECT_EQ(first.at("mean_rssi").get<double>(), -71.5);
  EXPECT_EQ(first.at("pdr").get<double>(), 1.0);
}

TEST_F(Cli, DatasetTrainExportChain) {
  const std::string cfg = asset("configs/sim_three_nodes.json");
  const std::string trace = asset("traces/paper_tables.csv");
  ASSERT_EQ(run("gen-dataset --config " + cfg + " --trace " + trace +
                " --rows 300 --seed 4 --out " + path("d.json")),
            0);
  ASSERT_EQ(run("train --dataset " + path("d.json") +
                " --epochs 3 --seed 2 --out " + path("m.fhop") +
                " --report " + path("rep.json")),
            0);
  ASSERT_EQ(run("train --dataset " + path("d.json") +
                " --epochs 3 --seed 2 --out " + path("m2.fhop")),
            0);
  EXPECT_EQ(out("m.fhop"), out("m2.fhop"));
  ASSERT_EQ(run("export --model " + path("m.fhop") +
                " --format c_array --symbol hopping_model --out " +
                path("m.h")),
            0);
  EXPECT_NE(out("m.h").find("hopping_model"), std::string::npos);
  EXPECT_EQ(run("export --model " + path("m.fhop") +
                " --format c_array --symbol 1bad --out " + path("x.h")),
            2);
  // Huge features and step size overflow the logits: a domain failure.
  std::ofstream(dir_ / "huge.json")
      << R"([{"ts":1,"F":2,"normalization":"v1"},)"
      << R"({"features":[1e150,-1e150,1e150,1e150],"label":0},)"
      << R"({"features":[-1e150,1e150,1e150,-1e150],"label":1}])";
  EXPECT_EQ(run("train --dataset " + path("huge.json") +
                " --epochs 20 --lr 1e150 --out " + path("boom.fhop")),
            1);
}

TEST_F(Cli, RecommendToolsAreReproducible) {
  const std::string gen =
      "recommend generate --config " + asset("configs/ratings_synthetic.json");
  ASSERT_EQ(run(gen + " --out " + path("full.csv")), 0);
  ASSERT_EQ(run(gen + " --out " + path("full2.csv")), 0);
  EXPECT_EQ(out("full.csv"), out("full2.csv"));

  // Knock out a few entries by hand and impute them back.
  std::string text = out("full.csv");
  text[0] = ',';
  text.erase(1, 1);
  std::ofstream(dir_ / "sparse.csv") << text;
  ASSERT_EQ(run("recommend impute --in " + path("sparse.csv") + " --out " +
                path("i1.csv")),
            0);
  ASSERT_EQ(run("recommend impute --jobs 4 --in " + path("sparse.csv") +
                " --out " + path("i2.csv")),
            0);
  EXPECT_EQ(out("i1.csv"), out("i2.csv"));

  const std::string study = "recommend study --in " + path("full.csv") +
                            " --sparsities 10,50 --seeds 2 --seed 3";
  ASSERT_EQ(run(study + " --out " + path("s1.json")), 0);
  ASSERT_EQ(run(study + " --jobs 3 --out " + path("s2.json")), 0);
  EXPECT_EQ(out("s1.json"), out("s2.json"));
  ASSERT_EQ(run("figdata --study " + path("s1.json") + " --out-dir " +
                path("fig")),
            0);
  EXPECT_TRUE(fs::exists(dir_ / "fig" / "fig10_confusion.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "fig" / "fig9_model_size.csv"));
}

}  // namespace
