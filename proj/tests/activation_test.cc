// Copyright 2026 The HNN Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hnn/activation.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

namespace hnn {
namespace {

const Activation kAll[] = {Activation::Identity(), Activation::Tanh(), Activation::LeakyRelu(),
                           Activation::Gelu(),     Activation::Selu(), Activation::Rrelu()};

TEST(ActivationTest, KnownValues) {
  EXPECT_DOUBLE_EQ(activate_scalar(Activation::Tanh(), 0.5), std::tanh(0.5));
  EXPECT_DOUBLE_EQ(activate_scalar(Activation::LeakyRelu(), -2.0), -0.02);
  EXPECT_DOUBLE_EQ(activate_scalar(Activation::LeakyRelu(), 3.0), 3.0);
  EXPECT_NEAR(activate_scalar(Activation::Gelu(), 1.0), 0.8413447460685429, 1e-15);
  EXPECT_NEAR(activate_scalar(Activation::Gelu(), -1.0), -0.15865525393145707, 1e-15);
  EXPECT_NEAR(activate_scalar(Activation::Selu(), 1.0), 1.0507009873554805, 1e-15);
  EXPECT_NEAR(activate_scalar(Activation::Selu(), -1.0), -1.1113307378125628, 1e-12);
  // Eval-mode rrelu uses the midpoint slope (1/8 + 1/3) / 2.
  EXPECT_NEAR(activate_scalar(Activation::Rrelu(), -1.0), -(1.0 / 8 + 1.0 / 3) / 2, 1e-15);
}

TEST(ActivationTest, ZeroMapsToZero) {
  for (const auto& a : kAll) EXPECT_EQ(activate_scalar(a, 0.0), 0.0) << a.name();
}

TEST(ActivationTest, DerivativesMatchFiniteDifferences) {
  std::mt19937_64 rng(1);
  Matrix x(4, 5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    double v = u(rng);
    if (std::abs(v) < 1e-2) v += 0.1;
    x.data()[k] = v;
  }
  for (const auto& a : kAll) {
    Matrix out, deriv;
    std::mt19937_64 r(0);
    apply_activation(a, Mode::kEval, x, out, deriv, r);
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      const double h = 1e-6;
      const double v = x.data()[k];
      const double fd = (activate_scalar(a, v + h) - activate_scalar(a, v - h)) / (2 * h);
      EXPECT_NEAR(deriv.data()[k], fd, 1e-6) << a.name();
      EXPECT_DOUBLE_EQ(out.data()[k], activate_scalar(a, x.data()[k])) << a.name();
    }
  }
}

TEST(ActivationTest, RreluTrainingSlopesAreSeededAndBounded) {
  Matrix x = Matrix::Constant(20, 20, -1.0);
  Matrix out1, d1, out2, d2;
  std::mt19937_64 r1(42), r2(42);
  apply_activation(Activation::Rrelu(), Mode::kTrain, x, out1, d1, r1);
  apply_activation(Activation::Rrelu(), Mode::kTrain, x, out2, d2, r2);
  EXPECT_TRUE((out1.array() == out2.array()).all());
  EXPECT_GE(d1.minCoeff(), 1.0 / 8);
  EXPECT_LE(d1.maxCoeff(), 1.0 / 3);
  EXPECT_GT(d1.maxCoeff() - d1.minCoeff(), 0.05);
  EXPECT_TRUE((out1.array() == -d1.array()).all());
}

TEST(ActivationTest, ParseRoundTripsNames) {
  for (const auto& a : kAll) EXPECT_EQ(Activation::Parse(a.name()), a);
  EXPECT_EQ(Activation::Parse("LeakyReLU").kind, ActivationKind::kLeakyRelu);
  EXPECT_THROW(Activation::Parse("swish"), ConfigError);
}

}  // namespace
}  // namespace hnn
