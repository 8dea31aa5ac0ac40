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

#ifndef HNN_TRAINER_H_
#define HNN_TRAINER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hnn/features.h"
#include "hnn/model.h"
#include "hnn/objective.h"
#include "hnn/optimizer.h"
#include "hnn/sampling.h"

namespace hnn {

enum class Task { kHyperedgePrediction, kNodeClassification };

Task parse_task(std::string_view name);
std::string task_name(Task task);

struct TrainConfig {
  VariantKind variant;
  std::size_t layers = 2;
  std::size_t hidden = 0;         // 0 keeps the input feature width
  double lr = 0.01;
  std::size_t epochs = 200;
  OptimizerKind optimizer = OptimizerKind::kAdam;
  double split_fraction = 0.8;
  double alpha = 0.5;
  ScoringOptions scoring;
  std::uint64_t seed = 0;
  std::size_t feature_rank = 64;  // rank of the bootstrapped features
  bool use_given_features = true;
  HyperedgeFeatureMode edge_features = HyperedgeFeatureMode::kAggregate;
  std::size_t eval_every = 1;
  bool resample_negatives = true;

  // Throws ConfigError on out-of-range values.
  void validate() const;
};

// Everything the forward pass needs besides the weights.
struct ModelContext {
  VariantKind variant;
  PropagationOperators ops;
  Matrix z0;
  Matrix y0;
  InputAggregates inputs;
};

ModelContext prepare_context(const Hypergraph& graph, const TrainConfig& cfg,
                             const std::optional<Matrix>& node_features,
                             const std::optional<Matrix>& edge_features,
                             Diagnostics* diag = nullptr);

ModelShape model_shape(const ModelContext& ctx, const TrainConfig& cfg, std::size_t classes);

struct EpochRecord {
  std::size_t epoch = 0;  // 1-based
  double loss = 0.0;
  double metric = 0.0;    // NaN for epochs without an evaluation
  double wall_ms = 0.0;
};

struct TrainState {
  ModelParams params;
  std::optional<Optimizer> optimizer;
  std::size_t epoch = 0;
  std::vector<EpochRecord> log;
  std::mt19937_64 rng;
  bool diverged = false;
  std::string diagnostic;

  // Metric of the most recent evaluated epoch, NaN if none.
  double final_metric() const;
};

using EpochCallback = std::function<void(const TrainState&)>;

struct HyperedgeTask {
  Hypergraph graph;                   // training graph
  std::vector<NodeSet> positives;     // training hyperedges that get scored
  std::vector<NodeSet> heldout;       // held-out positives
  HyperedgeSet observed;              // every known hyperedge
  std::optional<Matrix> node_features;
  std::optional<Matrix> edge_features;
};

// Splits g with the configured fraction and seed. Candidate sets too small
// for the score function (size < 2 for mean-pairwise) are left out of the
// scored positives but stay in the graph.
HyperedgeTask make_hyperedge_task(const Hypergraph& g, const TrainConfig& cfg,
                                  std::optional<Matrix> node_features = std::nullopt,
                                  std::optional<Matrix> edge_features = std::nullopt);

// Trains on every hyperedge of g with nothing held out; epochs then carry
// no metric.
HyperedgeTask make_full_task(const Hypergraph& g, const TrainConfig& cfg,
                             std::optional<Matrix> node_features = std::nullopt);

struct NodeTask {
  Hypergraph graph;
  std::vector<int> labels;  // class per node, -1 when unknown
  std::vector<Index> train_nodes;
  std::vector<Index> test_nodes;
  std::size_t classes = 0;
  std::optional<Matrix> node_features;
  std::optional<Matrix> edge_features;
};

// Full-batch training. Negatives are redrawn every epoch (when
// resample_negatives is set) and every evaluation uses freshly drawn
// negatives for the held-out positives. A non-finite loss stops training,
// sets `diverged` and keeps the log up to the offending epoch.
TrainState train_hyperedge_prediction(const HyperedgeTask& task, const TrainConfig& cfg,
                                      ModelContext* context_out = nullptr,
                                      const EpochCallback& on_epoch = {},
                                      Diagnostics* diag = nullptr);

TrainState train_node_classification(const NodeTask& task, const TrainConfig& cfg,
                                     ModelContext* context_out = nullptr,
                                     const EpochCallback& on_epoch = {},
                                     Diagnostics* diag = nullptr);

// Held-out AUC of the current weights: held-out positives against an equal
// number of negatives drawn from them with `rng`.
double evaluate_hyperedge_auc(const ModelContext& ctx, const ModelParams& params,
                              const HyperedgeTask& task, const TrainConfig& cfg,
                              std::mt19937_64& rng);

double evaluate_node_auc(const ModelContext& ctx, const ModelParams& params,
                         const NodeTask& task, std::span<const Index> nodes,
                         Diagnostics* diag = nullptr);

}  // namespace hnn

#endif  // HNN_TRAINER_H_
