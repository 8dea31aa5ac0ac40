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

#include <algorithm>
#include <cctype>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "oracles.h"

namespace hnn {
namespace {

using testing::Draw;
using testing::GradientError;
using testing::Instance;
using testing::kActivations;
using testing::KinkMargin;
using testing::kVariants;
using testing::Loss;

constexpr double kTolerance = 1e-4;

struct Case {
  ScoreFunction function;
  ScoreEmbedding embedding;
  bool cosine;
};

class GradientCheck : public ::testing::TestWithParam<Variant> {};

TEST_P(GradientCheck, HyperedgeLoss) {
  const Variant v = GetParam();
  std::mt19937_64 rng(100 + static_cast<int>(v));
  const Case cases[] = {{ScoreFunction::kMeanPairwise, ScoreEmbedding::kDependent, true},
                        {ScoreFunction::kMeanPairwise, ScoreEmbedding::kNode, false},
                        {ScoreFunction::kMaxMin, ScoreEmbedding::kDependent, true}};
  for (const auto& act : kActivations) {
    for (int draw = 0; draw < 3; ++draw) {
      for (const auto& c : cases) {
        ScoringOptions opts;
        opts.function = c.function;
        opts.embedding = c.embedding;
        opts.cosine = c.cosine;
        Instance in = Draw(rng, v, act);
        while (KinkMargin(in, opts) < 1e-3) in = Draw(rng, v, act);
        const Loss loss = [&](const ModelParams& p) {
          std::mt19937_64 r(7);
          return hyperedge_objective(in.ops, p, in.z0, in.y0, in.kind, in.batch, opts,
                                     Mode::kTrain, r);
        };
        EXPECT_LT(GradientError(loss, in.params), kTolerance)
            << variant_name(v) << "/" << act.name() << "/" << score_function_name(c.function)
            << "/" << score_embedding_name(c.embedding);
      }
    }
  }
}

TEST_P(GradientCheck, NodeClassificationLoss) {
  const Variant v = GetParam();
  std::mt19937_64 rng(200 + static_cast<int>(v));
  for (const auto& act : kActivations) {
    for (int draw = 0; draw < 3; ++draw) {
      Instance in = Draw(rng, v, act);
      while (KinkMargin(in, {}) < 1e-3) in = Draw(rng, v, act);
      const Loss loss = [&](const ModelParams& p) {
        std::mt19937_64 r(7);
        return node_objective(in.ops, p, in.z0, in.y0, in.kind, in.labels, in.labeled,
                              Mode::kTrain, r);
      };
      EXPECT_LT(GradientError(loss, in.params), kTolerance)
          << variant_name(v) << "/" << act.name();
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllVariants, GradientCheck, ::testing::ValuesIn(kVariants),
                         [](const auto& info) {
                           std::string name = variant_name(info.param);
                           name.erase(std::remove_if(name.begin(), name.end(),
                                                     [](char ch) { return !std::isalnum(ch); }),
                                      name.end());
                           return name;
                         });

TEST(BackwardTest, ZeroUpstreamGivesZeroGradients) {
  std::mt19937_64 rng(1);
  const Instance in = Draw(rng, Variant::kBase, Activation::Tanh());
  const EmbeddingState s = forward(in.ops, in.params, in.z0, in.y0, in.kind, rng);
  const Gradients g =
      backward(s, in.ops, in.params, Matrix::Zero(s.z.back().rows(), s.z.back().cols()),
               Matrix::Zero(s.y.back().rows(), s.y.back().cols()));
  for (const auto& m : g.w) EXPECT_EQ(m.cwiseAbs().maxCoeff(), 0.0);
  for (const auto& m : g.w_e) EXPECT_EQ(m.cwiseAbs().maxCoeff(), 0.0);
}

TEST(BackwardTest, ScalarLinearModelClosedForm) {
  // One node in one hyperedge, identity activations, widths 1.
  // Base: z1 = (s z0 + b y0) w, y1 = (s_e y0 + b_e z1) u with s = b = s_e = b_e = 1.
  const Hypergraph g = Hypergraph::Build({{0}}, 1);
  const PropagationOperators ops = build_operators(g, Variant::kBase);
  ModelParams p;
  p.w = {Matrix::Constant(1, 1, 0.7)};
  p.w_e = {Matrix::Constant(1, 1, -1.3)};
  p.psi = Matrix::Zero(2, 1);
  const Matrix z0 = Matrix::Constant(1, 1, 2.0);
  const Matrix y0 = Matrix::Constant(1, 1, 0.5);
  const VariantKind kind{Variant::kBase, Activation::Identity(), Activation::Identity()};
  std::mt19937_64 rng(0);
  const EmbeddingState s = forward(ops, p, z0, y0, kind, rng);
  const double gz = 0.3, gy = -0.8;
  const Gradients grads =
      backward(s, ops, p, Matrix::Constant(1, 1, gz), Matrix::Constant(1, 1, gy));
  const double a = 2.0 + 0.5;  // s z0 + b y0
  const double z1 = a * 0.7;
  const double c = 0.5 + z1;  // s_e y0 + b_e z1
  // dL/du = gy * c; dL/dw = gz * a + gy * u * a.
  EXPECT_NEAR(grads.w_e[0](0, 0), gy * c, 1e-15);
  EXPECT_NEAR(grads.w[0](0, 0), gz * a + gy * -1.3 * a, 1e-15);
}

TEST(BackwardTest, MissingCacheRejected) {
  std::mt19937_64 rng(2);
  const Instance in = Draw(rng, Variant::kP2, Activation::Tanh());
  ForwardOptions opts;
  opts.keep_cache = false;
  const EmbeddingState s = forward(in.ops, in.params, in.z0, in.y0, in.kind, rng, opts);
  EXPECT_THROW(backward(s, in.ops, in.params, s.z.back(), s.y.back()), std::invalid_argument);
}

}  // namespace
}  // namespace hnn
