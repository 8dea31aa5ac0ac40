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

#include "hnn/optimizer.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "test_util.h"

namespace hnn {
namespace {

ModelParams SmallParams(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return init_params(ModelShape::Uniform(3, 2, 2, 4, 3), rng);
}

Gradients RandomGradients(const ModelParams& p, std::mt19937_64& rng) {
  Gradients g = Gradients::ZerosLike(p);
  for (auto& m : g.w) m = testing::RandomMatrix(rng, m.rows(), m.cols());
  for (auto& m : g.w_e) m = testing::RandomMatrix(rng, m.rows(), m.cols());
  g.psi = testing::RandomMatrix(rng, g.psi.rows(), g.psi.cols());
  *g.head = testing::RandomMatrix(rng, g.head->rows(), g.head->cols());
  return g;
}

bool BitwiseEqual(const ModelParams& a, const ModelParams& b) {
  auto same = [](const Matrix& x, const Matrix& y) { return (x.array() == y.array()).all(); };
  for (std::size_t k = 0; k < a.w.size(); ++k) {
    if (!same(a.w[k], b.w[k]) || !same(a.w_e[k], b.w_e[k])) return false;
  }
  return same(a.psi, b.psi) && same(*a.head, *b.head);
}

TEST(OptimizerTest, ZeroLearningRateLeavesWeightsUnchanged) {
  std::mt19937_64 rng(1);
  for (const auto kind : {OptimizerKind::kAdam, OptimizerKind::kSgd}) {
    const ModelParams start = SmallParams(2);
    ModelParams p = start;
    Optimizer opt(kind, 0.0, p);
    for (int step = 0; step < 5; ++step) opt.step(p, RandomGradients(p, rng));
    EXPECT_TRUE(BitwiseEqual(p, start)) << optimizer_name(kind);
  }
}

TEST(OptimizerTest, SgdStep) {
  ModelParams p = SmallParams(3);
  const ModelParams start = p;
  std::mt19937_64 rng(4);
  const Gradients g = RandomGradients(p, rng);
  Optimizer opt(OptimizerKind::kSgd, 0.1, p);
  opt.step(p, g);
  EXPECT_LT(testing::MaxAbsDiff(p.w[1], start.w[1] - 0.1 * g.w[1]), 1e-16);
  EXPECT_LT(testing::MaxAbsDiff(*p.head, *start.head - 0.1 * *g.head), 1e-16);
}

TEST(OptimizerTest, AdamMatchesHandComputedSteps) {
  ModelParams p;
  p.w = {Matrix::Constant(1, 1, 1.0)};
  p.w_e = {Matrix::Constant(1, 1, -2.0)};
  p.psi = Matrix::Constant(1, 1, 0.5);
  Optimizer opt(OptimizerKind::kAdam, 0.01, p);
  Gradients g = Gradients::ZerosLike(p);
  g.w[0](0, 0) = 0.2;
  g.w_e[0](0, 0) = -3.0;
  g.psi(0, 0) = 0.0;

  // After one step the bias-corrected update is lr * g / (|g| + eps).
  opt.step(p, g);
  EXPECT_NEAR(p.w[0](0, 0), 1.0 - 0.01 * 0.2 / (0.2 + 1e-8), 1e-15);
  EXPECT_NEAR(p.w_e[0](0, 0), -2.0 + 0.01 * 3.0 / (3.0 + 1e-8), 1e-15);
  EXPECT_EQ(p.psi(0, 0), 0.5);

  // Second step with gradient 0.4 on w.
  g.w[0](0, 0) = 0.4;
  const double before = p.w[0](0, 0);
  opt.step(p, g);
  const double m = 0.9 * (0.1 * 0.2) + 0.1 * 0.4;
  const double v = 0.999 * (0.001 * 0.04) + 0.001 * 0.16;
  const double m_hat = m / (1 - 0.81);
  const double v_hat = v / (1 - 0.999 * 0.999);
  EXPECT_NEAR(p.w[0](0, 0), before - 0.01 * m_hat / (std::sqrt(v_hat) + 1e-8), 1e-15);
  EXPECT_EQ(opt.steps(), 2);
  EXPECT_NEAR(opt.first_moments()[0](0, 0), m, 1e-16);
  EXPECT_NEAR(opt.second_moments()[0](0, 0), v, 1e-18);
}

TEST(OptimizerTest, MomentShapesMirrorWeights) {
  const ModelParams p = SmallParams(5);
  Optimizer opt(OptimizerKind::kAdam, 0.01, p);
  ASSERT_EQ(opt.first_moments().size(), 2 * p.layers() + 2);
  EXPECT_EQ(opt.first_moments()[0].rows(), p.w[0].rows());
  EXPECT_EQ(opt.second_moments().back().cols(), p.head->cols());
}

TEST(OptimizerTest, ParseAndValidation) {
  EXPECT_EQ(parse_optimizer("adam"), OptimizerKind::kAdam);
  EXPECT_EQ(parse_optimizer(optimizer_name(OptimizerKind::kSgd)), OptimizerKind::kSgd);
  EXPECT_THROW(parse_optimizer("rmsprop"), ConfigError);
  EXPECT_THROW(Optimizer(OptimizerKind::kSgd, -1.0, SmallParams(1)), ConfigError);
}

}  // namespace
}  // namespace hnn
