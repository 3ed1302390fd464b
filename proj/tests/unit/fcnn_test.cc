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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "lorahop/error.h"

namespace lorahop::predictor {
namespace {

TEST(Fcnn, ParameterCountFollowsTheLayerShapes) {
  for (int in = 1; in <= 80; in += 13) {
    for (int f = 2; f <= 9; ++f) {
      const std::size_t want = (in * 10 + 10) + (10 * 10 + 10) + (10 * f + f);
      EXPECT_EQ(make_model(in, f).parameter_count(), want);
    }
  }
}

TEST(Fcnn, ZeroModelIsUniform) {
  const FcnnModel m = make_model(4, 3);
  const std::vector<double> x = {0.3, -1.0, 2.0, 0.0};
  for (double p : forward(m, x)) EXPECT_DOUBLE_EQ(p, 1.0 / 3.0);
  EXPECT_EQ(predict_channel(m, x), 0);
}

TEST(Fcnn, SoftmaxIsStableAndNormalised) {
  const std::vector<double> z = {1000.0, 1001.0, -1000.0};
  const std::vector<double> p = softmax(z);
  EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
  EXPECT_GT(p[1], p[0]);
  EXPECT_EQ(p[2], 0.0);
  for (double v : p) EXPECT_TRUE(std::isfinite(v));
}

TEST(Fcnn, ArgmaxTakesTheFirstMaximum) {
  const std::vector<double> v = {0.2, 0.4, 0.4};
  EXPECT_EQ(argmax(v), 1);
}

TEST(Fcnn, InitIsSeededAndBounded) {
  const FcnnModel a = init_model(16, 3, 42);
  EXPECT_EQ(a, init_model(16, 3, 42));
  EXPECT_NE(a, init_model(16, 3, 43));
  for (const DenseLayer& l : a.layers) {
    const float bound = std::sqrt(6.0f / (l.inputs + l.outputs));
    for (float w : l.kernel) EXPECT_LE(std::abs(w), bound);
    for (float b : l.bias) EXPECT_EQ(b, 0.0f);
  }
}

TEST(Fcnn, HandComputedForwardPass) {
  // Identity-like first two layers on ReLU pass the positive input through.
  FcnnModel m = make_model(1, 2);
  m.layers[0].kernel[0] = 1.0f;
  m.layers[1].kernel[0] = 1.0f;
  m.layers[2].kernel[0] = 2.0f;   // hidden 0 -> out 0
  m.layers[2].bias[1] = 1.0f;
  const std::vector<double> x = {1.5};
  const std::vector<double> z = logits(m, x);
  EXPECT_DOUBLE_EQ(z[0], 3.0);
  EXPECT_DOUBLE_EQ(z[1], 1.0);
  const std::vector<double> neg = {-1.5};
  EXPECT_DOUBLE_EQ(logits(m, neg)[0], 0.0);
  m.activation = Activation::kTanh;
  EXPECT_NEAR(logits(m, neg)[0], 2.0 * std::tanh(std::tanh(-1.5)), 1e-12);
}

TEST(Fcnn, RejectsBadShapesAndFeatures) {
  EXPECT_THROW(make_model(0, 3), InputError);
  EXPECT_THROW(make_model(4, 1), InputError);
  const FcnnModel m = make_model(2, 2);
  const std::vector<double> short_x = {1.0};
  EXPECT_THROW(forward(m, short_x), InputError);
  const std::vector<double> bad = {1.0, std::nan("")};
  EXPECT_THROW(forward(m, bad), InputError);
}

TEST(Activation, NamesRoundTrip) {
  EXPECT_EQ(parse_activation(activation_name(Activation::kRelu)),
            Activation::kRelu);
  EXPECT_EQ(parse_activation(activation_name(Activation::kTanh)),
            Activation::kTanh);
  EXPECT_THROW(parse_activation("sigmoid"), InputError);
}

}  // namespace
}  // namespace lorahop::predictor
