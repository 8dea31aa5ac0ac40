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

#include <chrono>
#include <cctype>
#include <cmath>
#include <limits>

#include "hnn/loss.h"
#include "hnn/metrics.h"
#include "hnn/split.h"

namespace hnn {
namespace {

// Independent streams derived from the run seed.
constexpr std::uint64_t kSplitStream = 0x9e3779b97f4a7c15ull;
constexpr std::uint64_t kFeatureStream = 0xbf58476d1ce4e5b9ull;
constexpr std::uint64_t kEvalStream = 0x94d049bb133111ebull;

bool scorable(const NodeSet& s, ScoreFunction fn) {
  return fn == ScoreFunction::kMaxMin ? !s.empty() : s.size() >= 2;
}

std::vector<NodeSet> filter_scorable(const std::vector<NodeSet>& sets, ScoreFunction fn) {
  std::vector<NodeSet> out;
  for (const auto& s : sets) {
    if (scorable(s, fn)) out.push_back(s);
  }
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

Task parse_task(std::string_view name) {
  std::string n;
  for (const char c : name) {
    if (c == '-' || c == '_') continue;
    n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (n == "hyperedgepred" || n == "hyperedgeprediction" || n == "hyperedge") {
    return Task::kHyperedgePrediction;
  }
  if (n == "nodeclass" || n == "nodeclassification" || n == "node") {
    return Task::kNodeClassification;
  }
  throw ConfigError("unknown task '" + std::string(name) + "'");
}

std::string task_name(Task task) {
  return task == Task::kHyperedgePrediction ? "hyperedge-pred" : "node-class";
}

void TrainConfig::validate() const {
  if (layers < 1) throw ConfigError("layers must be >= 1");
  if (!(lr > 0.0) || !std::isfinite(lr)) throw ConfigError("lr must be > 0");
  if (!(split_fraction > 0.0 && split_fraction < 1.0)) {
    throw ConfigError("split fraction must lie in (0, 1)");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
  if (feature_rank < 1) throw ConfigError("feature rank must be >= 1");
  if (eval_every < 1) throw ConfigError("eval_every must be >= 1");
  if (variant.sigma_v.kind == ActivationKind::kRrelu &&
      !(variant.sigma_v.rrelu_lower <= variant.sigma_v.rrelu_upper)) {
    throw ConfigError("rrelu lower slope exceeds upper slope");
  }
}

double TrainState::final_metric() const {
  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    if (!std::isnan(it->metric)) return it->metric;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

ModelContext prepare_context(const Hypergraph& graph, const TrainConfig& cfg,
                             const std::optional<Matrix>& node_features,
                             const std::optional<Matrix>& edge_features,
                             Diagnostics* diag) {
  SubspaceIterationOptions svd;
  svd.seed = cfg.seed ^ kFeatureStream;
  const std::optional<Matrix> given = cfg.use_given_features ? node_features : std::nullopt;
  const std::size_t rank =
      std::min({cfg.feature_rank, graph.num_nodes(), std::max<std::size_t>(graph.num_hyperedges(), 1)});
  ModelContext ctx;
  ctx.variant = cfg.variant;
  ctx.z0 = init_node_features(graph, given ? given->cols() : std::min(rank, graph.num_nodes()),
                              given, svd, diag);
  ctx.y0 = init_hyperedge_features(graph, ctx.z0, std::min(rank, graph.num_hyperedges()),
                                   cfg.use_given_features ? edge_features : std::nullopt,
                                   cfg.edge_features, svd, diag);
  ctx.ops = build_operators(graph, cfg.variant.tag, diag);
  if (cfg.variant.tag == Variant::kBase && ctx.z0.cols() != ctx.y0.cols()) {
    throw ConfigError("the base variant needs node and hyperedge features of equal width");
  }
  ctx.inputs = aggregate_inputs(ctx.ops, ctx.z0, ctx.y0);
  return ctx;
}

ModelShape model_shape(const ModelContext& ctx, const TrainConfig& cfg, std::size_t classes) {
  ModelShape shape = ModelShape::Uniform(ctx.z0.cols(), ctx.y0.cols(), cfg.layers, cfg.hidden,
                                         classes);
  validate_shape(shape, cfg.variant.tag);
  return shape;
}

HyperedgeTask make_hyperedge_task(const Hypergraph& g, const TrainConfig& cfg,
                                  std::optional<Matrix> node_features,
                                  std::optional<Matrix> edge_features) {
  cfg.validate();
  std::mt19937_64 split_rng(cfg.seed ^ kSplitStream);
  HyperedgeSplit split = split_hyperedges(g, cfg.split_fraction, split_rng);
  HyperedgeTask task;
  task.positives = filter_scorable(split.train.hyperedges(), cfg.scoring.function);
  task.heldout = filter_scorable(split.heldout, cfg.scoring.function);
  task.observed = HyperedgeSet(g.hyperedges());
  task.graph = std::move(split.train);
  task.node_features = std::move(node_features);
  if (edge_features) {
    // Given hyperedge features follow the training hyperedges.
    Matrix y(split.train_ids.size(), edge_features->cols());
    for (std::size_t r = 0; r < split.train_ids.size(); ++r) {
      y.row(r) = edge_features->row(split.train_ids[r]);
    }
    task.edge_features = std::move(y);
  }
  if (task.positives.empty() || task.heldout.empty()) {
    throw DataError("no scorable hyperedges on one side of the split");
  }
  return task;
}

HyperedgeTask make_full_task(const Hypergraph& g, const TrainConfig& cfg,
                             std::optional<Matrix> node_features) {
  cfg.validate();
  HyperedgeTask task;
  task.positives = filter_scorable(g.hyperedges(), cfg.scoring.function);
  if (task.positives.empty()) throw DataError("no scorable hyperedges");
  task.observed = HyperedgeSet(g.hyperedges());
  task.graph = g;
  task.node_features = std::move(node_features);
  return task;
}

double evaluate_hyperedge_auc(const ModelContext& ctx, const ModelParams& params,
                              const HyperedgeTask& task, const TrainConfig& cfg,
                              std::mt19937_64& rng) {
  NegativeSamplingOptions opts;
  opts.sources = &task.heldout;
  opts.exclude = &task.observed;
  const std::vector<NodeSet> negatives =
      sample_negatives(task.graph, task.heldout.size(), cfg.alpha, rng, opts);
  std::vector<NodeSet> sets = task.heldout;
  sets.insert(sets.end(), negatives.begin(), negatives.end());
  std::vector<double> labels(sets.size(), 0.0);
  std::fill(labels.begin(), labels.begin() + task.heldout.size(), 1.0);

  ForwardOptions fo;
  fo.mode = Mode::kEval;
  fo.keep_cache = false;
  fo.inputs = &ctx.inputs;
  std::mt19937_64 unused(0);
  const EmbeddingState state = forward(ctx.ops, params, ctx.z0, ctx.y0, ctx.variant, unused, fo);
  const CandidateScores cs = score_candidates(state, ctx.ops, params, ctx.variant.sigma_v, sets,
                                              cfg.scoring, Mode::kEval, unused);
  return auc(cs.scores, labels);
}

TrainState train_hyperedge_prediction(const HyperedgeTask& task, const TrainConfig& cfg,
                                      ModelContext* context_out, const EpochCallback& on_epoch,
                                      Diagnostics* diag) {
  cfg.validate();
  ModelContext ctx = prepare_context(task.graph, cfg, task.node_features, task.edge_features, diag);
  TrainState state;
  state.rng.seed(cfg.seed);
  state.params = init_params(model_shape(ctx, cfg, 0), state.rng);
  state.optimizer.emplace(cfg.optimizer, cfg.lr, state.params);
  std::mt19937_64 eval_rng(cfg.seed ^ kEvalStream);

  NegativeSamplingOptions opts;
  opts.sources = &task.positives;
  opts.exclude = &task.observed;
  HyperedgeBatch batch;
  const auto draw_batch = [&]() {
    batch.sets = task.positives;
    const auto negatives =
        sample_negatives(task.graph, task.positives.size(), cfg.alpha, state.rng, opts);
    batch.sets.insert(batch.sets.end(), negatives.begin(), negatives.end());
    batch.labels.assign(batch.sets.size(), 0.0);
    std::fill(batch.labels.begin(), batch.labels.begin() + task.positives.size(), 1.0);
  };
  if (cfg.epochs > 0) draw_batch();

  for (std::size_t epoch = 1; epoch <= cfg.epochs; ++epoch) {
    const auto start = std::chrono::steady_clock::now();
    if (cfg.resample_negatives && epoch > 1) draw_batch();
    ObjectiveResult r = hyperedge_objective(ctx.ops, state.params, ctx.z0, ctx.y0, ctx.variant,
                                            batch, cfg.scoring, Mode::kTrain, state.rng,
                                            &ctx.inputs);
    if (!std::isfinite(r.loss)) {
      state.diverged = true;
      state.diagnostic = "loss became non-finite at epoch " + std::to_string(epoch);
      break;
    }
    state.optimizer->step(state.params, r.grads);
    if (!state.params.all_finite()) {
      state.diverged = true;
      state.diagnostic = "parameters became non-finite at epoch " + std::to_string(epoch);
      break;
    }
    EpochRecord rec;
    rec.epoch = epoch;
    rec.loss = r.loss;
    rec.metric = std::numeric_limits<double>::quiet_NaN();
    if (!task.heldout.empty() && (epoch % cfg.eval_every == 0 || epoch == cfg.epochs)) {
      try {
        rec.metric = evaluate_hyperedge_auc(ctx, state.params, task, cfg, eval_rng);
      } catch (const NumericError&) {
        state.diverged = true;
        state.diagnostic = "evaluation scores became non-finite at epoch " + std::to_string(epoch);
        break;
      }
    }
    rec.wall_ms = elapsed_ms(start);
    state.epoch = epoch;
    state.log.push_back(rec);
    if (on_epoch) on_epoch(state);
  }
  if (context_out != nullptr) *context_out = std::move(ctx);
  return state;
}

double evaluate_node_auc(const ModelContext& ctx, const ModelParams& params,
                         const NodeTask& task, std::span<const Index> nodes,
                         Diagnostics* diag) {
  ForwardOptions fo;
  fo.mode = Mode::kEval;
  fo.keep_cache = false;
  fo.inputs = &ctx.inputs;
  std::mt19937_64 unused(0);
  const EmbeddingState state = forward(ctx.ops, params, ctx.z0, ctx.y0, ctx.variant, unused, fo);
  return multiclass_auc(softmax_rows(classify(state, params)), task.labels, nodes, diag);
}

TrainState train_node_classification(const NodeTask& task, const TrainConfig& cfg,
                                     ModelContext* context_out, const EpochCallback& on_epoch,
                                     Diagnostics* diag) {
  cfg.validate();
  if (task.classes < 2) throw DataError("node classification needs at least two classes");
  if (task.labels.size() != task.graph.num_nodes()) throw DataError("one label per node expected");
  if (task.train_nodes.empty() || task.test_nodes.empty()) {
    throw DataError("node classification needs non-empty train and test node sets");
  }
  ModelContext ctx = prepare_context(task.graph, cfg, task.node_features, task.edge_features, diag);
  TrainState state;
  state.rng.seed(cfg.seed);
  state.params = init_params(model_shape(ctx, cfg, task.classes), state.rng);
  state.optimizer.emplace(cfg.optimizer, cfg.lr, state.params);

  for (std::size_t epoch = 1; epoch <= cfg.epochs; ++epoch) {
    const auto start = std::chrono::steady_clock::now();
    ObjectiveResult r = node_objective(ctx.ops, state.params, ctx.z0, ctx.y0, ctx.variant,
                                       task.labels, task.train_nodes, Mode::kTrain, state.rng,
                                       &ctx.inputs);
    if (!std::isfinite(r.loss)) {
      state.diverged = true;
      state.diagnostic = "loss became non-finite at epoch " + std::to_string(epoch);
      break;
    }
    state.optimizer->step(state.params, r.grads);
    if (!state.params.all_finite()) {
      state.diverged = true;
      state.diagnostic = "parameters became non-finite at epoch " + std::to_string(epoch);
      break;
    }
    EpochRecord rec;
    rec.epoch = epoch;
    rec.loss = r.loss;
    rec.metric = std::numeric_limits<double>::quiet_NaN();
    if (epoch % cfg.eval_every == 0 || epoch == cfg.epochs) {
      try {
        rec.metric = evaluate_node_auc(ctx, state.params, task, task.test_nodes);
      } catch (const NumericError&) {
        state.diverged = true;
        state.diagnostic = "evaluation scores became non-finite at epoch " + std::to_string(epoch);
        break;
      }
    }
    rec.wall_ms = elapsed_ms(start);
    state.epoch = epoch;
    state.log.push_back(rec);
    if (on_epoch) on_epoch(state);
  }
  if (context_out != nullptr) *context_out = std::move(ctx);
  return state;
}

}  // namespace hnn
