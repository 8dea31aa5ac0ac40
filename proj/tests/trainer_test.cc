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

#include "hnn/trainer.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "hnn/metrics.h"
#include "test_util.h"

namespace hnn {
namespace {

// Four disjoint triangles, each carrying all three of its pairs. Every
// negative drawn from a pair must leave its cluster.
Hypergraph Clusters() {
  std::vector<NodeSet> edges;
  for (Index c = 0; c < 4; ++c) {
    const Index a = 3 * c;
    edges.push_back({a, a + 1});
    edges.push_back({a, a + 2});
    edges.push_back({a + 1, a + 2});
  }
  return Hypergraph::Build(edges, 12);
}

TrainConfig SmallConfig() {
  TrainConfig cfg;
  cfg.variant = {Variant::kBase, Activation::Tanh(), Activation::Tanh()};
  cfg.layers = 2;
  cfg.epochs = 20;
  cfg.seed = 3;
  return cfg;
}

double TrainingAuc(const HyperedgeTask& task, const ModelContext& ctx, const TrainState& state,
                   const TrainConfig& cfg) {
  std::mt19937_64 rng(99);
  NegativeSamplingOptions opts;
  opts.sources = &task.positives;
  opts.exclude = &task.observed;
  HyperedgeBatch batch;
  batch.sets = task.positives;
  const auto negatives = sample_negatives(task.graph, 4 * task.positives.size(), cfg.alpha,
                                          rng, opts);
  batch.sets.insert(batch.sets.end(), negatives.begin(), negatives.end());
  batch.labels.assign(batch.sets.size(), 0.0);
  std::fill(batch.labels.begin(), batch.labels.begin() + task.positives.size(), 1.0);
  const ObjectiveResult r = hyperedge_objective(ctx.ops, state.params, ctx.z0, ctx.y0,
                                                ctx.variant, batch, cfg.scoring, Mode::kEval,
                                                rng, &ctx.inputs);
  return auc(r.scores, batch.labels);
}

TEST(TrainConfigTest, Validation) {
  EXPECT_NO_THROW(SmallConfig().validate());
  auto bad = [](auto edit) {
    TrainConfig cfg = SmallConfig();
    edit(cfg);
    return cfg;
  };
  EXPECT_THROW(bad([](TrainConfig& c) { c.layers = 0; }).validate(), ConfigError);
  EXPECT_THROW(bad([](TrainConfig& c) { c.lr = 0.0; }).validate(), ConfigError);
  EXPECT_THROW(bad([](TrainConfig& c) { c.split_fraction = 1.0; }).validate(), ConfigError);
  EXPECT_THROW(bad([](TrainConfig& c) { c.alpha = -0.1; }).validate(), ConfigError);
  EXPECT_THROW(bad([](TrainConfig& c) { c.feature_rank = 0; }).validate(), ConfigError);
  EXPECT_THROW(bad([](TrainConfig& c) { c.eval_every = 0; }).validate(), ConfigError);
}

TEST(TrainConfigTest, TaskNames) {
  EXPECT_EQ(parse_task("hyperedge-pred"), Task::kHyperedgePrediction);
  EXPECT_EQ(parse_task("node_class"), Task::kNodeClassification);
  EXPECT_EQ(parse_task(task_name(Task::kNodeClassification)), Task::kNodeClassification);
  EXPECT_THROW(parse_task("link"), ConfigError);
}

TEST(HyperedgeTaskTest, SplitAndFilter) {
  const Hypergraph g = Hypergraph::Build(
      {{0, 1}, {1, 2}, {2, 3}, {3}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {1, 5}, {2, 6}}, 8);
  TrainConfig cfg = SmallConfig();
  const HyperedgeTask task = make_hyperedge_task(g, cfg);
  EXPECT_EQ(task.graph.num_hyperedges(), 8u);
  EXPECT_EQ(task.heldout.size(), 2u);
  EXPECT_EQ(task.observed.size(), 10u);
  for (const auto& e : task.positives) EXPECT_GE(e.size(), 2u);
  for (const auto& e : task.heldout) EXPECT_GE(e.size(), 2u);
  EXPECT_THROW(prepare_context(task.graph, cfg, Matrix::Zero(3, 2), std::nullopt), DataError);
}

TEST(TrainerTest, ZeroEpochsGiveEmptyLog) {
  TrainConfig cfg = SmallConfig();
  cfg.epochs = 0;
  const TrainState s = train_hyperedge_prediction(make_full_task(Clusters(), cfg), cfg);
  EXPECT_TRUE(s.log.empty());
  EXPECT_EQ(s.epoch, 0u);
  EXPECT_EQ(s.params.layers(), 2u);
  EXPECT_GT(s.params.w[0].cwiseAbs().maxCoeff(), 0.0);
  EXPECT_TRUE(std::isnan(s.final_metric()));
}

TEST(TrainerTest, FixedSeedGivesIdenticalLogs) {
  std::mt19937_64 rng(4);
  const Hypergraph g = Hypergraph::Build(testing::RandomEdges(rng, 20, 30, 4, true), 20);
  for (const auto act : {Activation::Tanh(), Activation::Rrelu()}) {
    TrainConfig cfg = SmallConfig();
    cfg.variant = {Variant::kPlusPlus, act, act};
    const HyperedgeTask task = make_hyperedge_task(g, cfg);
    const TrainState a = train_hyperedge_prediction(task, cfg);
    const TrainState b = train_hyperedge_prediction(make_hyperedge_task(g, cfg), cfg);
    ASSERT_EQ(a.log.size(), cfg.epochs);
    ASSERT_EQ(b.log.size(), cfg.epochs);
    for (std::size_t e = 0; e < cfg.epochs; ++e) {
      EXPECT_EQ(a.log[e].epoch, e + 1);
      EXPECT_EQ(a.log[e].loss, b.log[e].loss);
      EXPECT_EQ(a.log[e].metric, b.log[e].metric);
      EXPECT_GE(a.log[e].metric, 0.0);
      EXPECT_LE(a.log[e].metric, 1.0);
    }
    EXPECT_TRUE((a.params.psi.array() == b.params.psi.array()).all());
    cfg.seed += 1;
    const TrainState c = train_hyperedge_prediction(make_hyperedge_task(g, cfg), cfg);
    EXPECT_NE(c.log.back().loss, a.log.back().loss);
  }
}

TEST(TrainerTest, SeparableToyReachesPerfectTrainingAuc) {
  TrainConfig cfg = SmallConfig();
  cfg.epochs = 200;
  const HyperedgeTask task = make_full_task(Clusters(), cfg);
  ModelContext ctx;
  const TrainState s = train_hyperedge_prediction(task, cfg, &ctx);
  ASSERT_FALSE(s.diverged);
  ASSERT_EQ(s.log.size(), 200u);
  EXPECT_LT(s.log.back().loss, s.log.front().loss);
  EXPECT_TRUE(std::isnan(s.log.back().metric));
  EXPECT_EQ(TrainingAuc(task, ctx, s, cfg), 1.0);
}

TEST(TrainerTest, EvaluationCadenceAndCallback) {
  std::mt19937_64 rng(5);
  const Hypergraph g = Hypergraph::Build(testing::RandomEdges(rng, 16, 20, 3, true), 16);
  TrainConfig cfg = SmallConfig();
  cfg.epochs = 7;
  cfg.eval_every = 3;
  std::size_t calls = 0;
  const TrainState s = train_hyperedge_prediction(
      make_hyperedge_task(g, cfg), cfg, nullptr,
      [&](const TrainState& st) { EXPECT_EQ(st.log.size(), ++calls); });
  EXPECT_EQ(calls, 7u);
  for (const auto& rec : s.log) {
    const bool evaluated = rec.epoch % 3 == 0 || rec.epoch == 7;
    EXPECT_EQ(std::isnan(rec.metric), !evaluated) << rec.epoch;
  }
  EXPECT_EQ(s.final_metric(), s.log.back().metric);
}

TEST(TrainerTest, DivergenceStopsWithDiagnostic) {
  TrainConfig cfg = SmallConfig();
  cfg.variant = {Variant::kH2, Activation::Identity(), Activation::Identity()};
  cfg.optimizer = OptimizerKind::kSgd;
  cfg.lr = 1e300;
  cfg.scoring.cosine = false;
  cfg.scoring.embedding = ScoreEmbedding::kNode;
  const TrainState s = train_hyperedge_prediction(make_full_task(Clusters(), cfg), cfg);
  EXPECT_TRUE(s.diverged);
  EXPECT_LT(s.log.size(), cfg.epochs);
  EXPECT_NE(s.diagnostic.find("epoch " + std::to_string(s.log.size() + 1)), std::string::npos);
  for (const auto& rec : s.log) EXPECT_TRUE(std::isfinite(rec.loss));
}

TEST(TrainerTest, DivergedParametersStopBeforeEvaluation) {
  TrainConfig cfg = SmallConfig();
  cfg.variant = {Variant::kH2, Activation::Identity(), Activation::Identity()};
  cfg.optimizer = OptimizerKind::kSgd;
  cfg.lr = 1e300;
  cfg.scoring.cosine = false;
  cfg.scoring.embedding = ScoreEmbedding::kNode;
  cfg.eval_every = 1;
  const TrainState s = train_hyperedge_prediction(make_hyperedge_task(Clusters(), cfg), cfg);
  EXPECT_TRUE(s.diverged);
  EXPECT_NE(s.diagnostic.find("epoch " + std::to_string(s.log.size() + 1)), std::string::npos);
  for (const auto& rec : s.log) EXPECT_TRUE(std::isfinite(rec.metric));
}

TEST(TrainerTest, NodeClassificationSeparatesClusters) {
  NodeTask task;
  task.graph = Clusters();
  task.classes = 2;
  for (Index i = 0; i < 12; ++i) {
    task.labels.push_back(i < 6 ? 0 : 1);
    (i % 3 == 0 ? task.test_nodes : task.train_nodes).push_back(i);
  }
  TrainConfig cfg = SmallConfig();
  cfg.epochs = 100;
  ModelContext ctx;
  const TrainState s = train_node_classification(task, cfg, &ctx);
  ASSERT_EQ(s.log.size(), 100u);
  EXPECT_LT(s.log.back().loss, s.log.front().loss);
  EXPECT_EQ(evaluate_node_auc(ctx, s.params, task, task.test_nodes), 1.0);
  EXPECT_EQ(s.final_metric(), 1.0);
}

}  // namespace
}  // namespace hnn
