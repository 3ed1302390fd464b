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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "lorahop/error.h"

namespace lorahop::predictor {
namespace {

// Label 1 when the first feature exceeds the second.
telemetry::Dataset separable(int rows, std::uint64_t seed) {
  telemetry::Dataset d;
  d.window_slots = 1;
  d.frequencies = 2;  // four features
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < rows; ++k) {
    std::vector<double> x = {u(rng), u(rng), u(rng), u(rng)};
    if (std::abs(x[0] - x[1]) < 0.05) x[0] += x[0] > x[1] ? 0.1 : -0.1;
    const int label = x[0] > x[1] ? 1 : 0;
    d.rows.push_back({std::move(x), label});
  }
  return d;
}

double kernel_l1(const FcnnModel& m) {
  double s = 0.0;
  for (const DenseLayer& l : m.layers) {
    for (float w : l.kernel) s += std::abs(w);
  }
  return s;
}

TEST(SplitRows, SizesAndDisjointCover) {
  for (std::size_t n : {1u, 4u, 5u, 10u, 1001u}) {
    const Split s = split_rows(n, 3);
    EXPECT_EQ(s.validation.size(), n / 5);
    EXPECT_EQ(s.test.size(), n / 5);
    EXPECT_EQ(s.train.size(), n - 2 * (n / 5));
    std::set<std::size_t> all(s.train.begin(), s.train.end());
    all.insert(s.validation.begin(), s.validation.end());
    all.insert(s.test.begin(), s.test.end());
    EXPECT_EQ(all.size(), n);
    if (n) EXPECT_EQ(*all.rbegin(), n - 1);
  }
  EXPECT_EQ(split_rows(50, 1).train, split_rows(50, 1).train);
  EXPECT_NE(split_rows(50, 1).train, split_rows(50, 2).train);
}

TEST(Train, LearnsALinearlySeparableSet) {
  const telemetry::Dataset d = separable(1000, 1);
  FcnnModel m = init_model(4, 2, 7);
  m.l1_lambda = 0.0f;
  TrainConfig cfg;
  cfg.epochs = 60;
  cfg.adam.learning_rate = 1e-2;
  const TrainReport r = train(m, d, cfg);
  EXPECT_GE(r.test_accuracy, 0.99);
  EXPECT_LT(r.epochs.back().train_loss, 0.5 * r.initial_train_loss);
  EXPECT_EQ(r.epochs.size(), 60u);
  EXPECT_EQ(r.train_size + r.val_size + r.test_size, 1000u);
}

TEST(Train, IsDeterministic) {
  const telemetry::Dataset d = separable(300, 2);
  TrainConfig cfg;
  cfg.epochs = 5;
  FcnnModel a = init_model(4, 2, 1), b = init_model(4, 2, 1);
  const TrainReport ra = train(a, d, cfg);
  const TrainReport rb = train(b, d, cfg);
  EXPECT_EQ(a, b);
  EXPECT_EQ(train_report_to_json(ra), train_report_to_json(rb));
}

TEST(Train, ZeroEpochsLeaveTheModelUntouched) {
  const telemetry::Dataset d = separable(100, 3);
  FcnnModel m = init_model(4, 2, 5);
  const FcnnModel before = m;
  TrainConfig cfg;
  cfg.epochs = 0;
  const TrainReport r = train(m, d, cfg);
  EXPECT_EQ(m, before);
  EXPECT_TRUE(r.epochs.empty());
}

TEST(Train, L1ShrinksTheKernels) {
  const telemetry::Dataset d = separable(400, 4);
  TrainConfig cfg;
  cfg.epochs = 40;
  cfg.adam.learning_rate = 5e-3;
  FcnnModel plain = init_model(4, 2, 9), sparse = init_model(4, 2, 9);
  plain.l1_lambda = 0.0f;
  sparse.l1_lambda = 0.05f;
  train(plain, d, cfg);
  train(sparse, d, cfg);
  EXPECT_LT(kernel_l1(sparse), 0.8 * kernel_l1(plain));
}

TEST(Train, DivergenceIsADomainError) {
  telemetry::Dataset d = separable(200, 5);
  for (auto& row : d.rows) {
    for (double& x : row.features) x *= 1e150;
  }
  FcnnModel m = init_model(4, 2, 1);
  TrainConfig cfg;
  cfg.epochs = 50;
  cfg.adam.learning_rate = 1e150;
  EXPECT_THROW(train(m, d, cfg), DomainError);
}

TEST(Train, RejectsBadDatasets) {
  FcnnModel m = init_model(4, 2, 1);
  telemetry::Dataset empty;
  empty.window_slots = 1;
  empty.frequencies = 2;
  EXPECT_THROW(train(m, empty, {}), InputError);
  telemetry::Dataset bad = separable(20, 1);
  bad.rows[3].label = 2;
  EXPECT_THROW(train(m, bad, {}), InputError);
  telemetry::Dataset wide = separable(20, 1);
  FcnnModel narrow = init_model(3, 2, 1);
  EXPECT_THROW(train(narrow, wide, {}), InputError);
}

TEST(Parameters, FlattenAndAssignRoundTrip) {
  const FcnnModel m = init_model(6, 3, 11);
  const std::vector<double> p = flatten_parameters(m);
  EXPECT_EQ(p.size(), m.parameter_count());
  FcnnModel z = make_model(6, 3);
  assign_parameters(z, p);
  EXPECT_EQ(z, m);
}

struct GradientCheck {
  double error = 0.0;  // ||numeric - analytic|| / ||analytic||
  int checked = 0;
  int skipped = 0;
};

// Central differences against the analytic gradient, L1 term included.
// Coordinates within eps of w == 0 are skipped, as are those whose one-sided
// slopes disagree: a ReLU hinge inside the stencil.
GradientCheck gradient_check(Activation act, std::uint64_t seed) {
  constexpr int kInputs = 16;
  constexpr int kClasses = 3;
  constexpr int kBatch = 8;
  constexpr double kEps = 1e-3;
  FcnnModel m = init_model(kInputs, kClasses, seed, act);
  m.l1_lambda = 1e-3f;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<std::vector<double>> x(kBatch, std::vector<double>(kInputs));
  std::vector<int> y(kBatch);
  for (int b = 0; b < kBatch; ++b) {
    for (double& v : x[b]) v = n(rng);
    y[b] = b % kClasses;
  }
  const std::vector<double> p = flatten_parameters(m);
  std::vector<double> grad;
  loss_and_gradient(m, p, x, y, &grad);

  std::vector<std::size_t> kernel_slots;
  std::size_t at = 0;
  std::vector<bool> is_kernel(p.size(), false);
  for (const DenseLayer& l : m.layers) {
    for (std::size_t k = 0; k < l.kernel.size(); ++k) is_kernel[at + k] = true;
    at += l.kernel.size() + l.bias.size();
  }

  const double center = loss_and_gradient(m, p, x, y, nullptr);
  GradientCheck out;
  double diff2 = 0.0, norm2 = 0.0;
  std::vector<double> q = p;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (is_kernel[k] && std::abs(p[k]) < 2 * kEps) {
      ++out.skipped;
      continue;
    }
    q[k] = p[k] + kEps;
    const double up = loss_and_gradient(m, q, x, y, nullptr);
    q[k] = p[k] - kEps;
    const double down = loss_and_gradient(m, q, x, y, nullptr);
    q[k] = p[k];
    const double right = (up - center) / kEps;
    const double left = (center - down) / kEps;
    if (std::abs(right - left) > 1e-3) {
      ++out.skipped;
      continue;
    }
    const double numeric = (up - down) / (2 * kEps);
    diff2 += (numeric - grad[k]) * (numeric - grad[k]);
    norm2 += grad[k] * grad[k];
    ++out.checked;
  }
  out.error = std::sqrt(diff2 / norm2);
  return out;
}

TEST(Gradient, MatchesCentralDifferencesTanh) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const GradientCheck g = gradient_check(Activation::kTanh, seed);
    EXPECT_LT(g.error, 1e-4) << seed;
    EXPECT_GT(g.checked, 250);
  }
}

TEST(Gradient, MatchesCentralDifferencesRelu) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const GradientCheck g = gradient_check(Activation::kRelu, seed);
    EXPECT_LT(g.error, 1e-4) << seed;
    EXPECT_GT(g.checked, 200) << seed;
  }
}

TEST(Train, ReportJsonCarriesCurves) {
  const telemetry::Dataset d = separable(100, 6);
  FcnnModel m = init_model(4, 2, 1);
  TrainConfig cfg;
  cfg.epochs = 3;
  const std::string j = train_report_to_json(train(m, d, cfg));
  EXPECT_NE(j.find("\"epochs\""), std::string::npos);
  EXPECT_NE(j.find("\"test_accuracy\""), std::string::npos);
}

}  // namespace
}  // namespace lorahop::predictor
