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


#ifndef HNN_EXPERIMENT_H_
#define HNN_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hnn/config.h"
#include "hnn/eval_report.h"
#include "hnn/io.h"
#include "hnn/split.h"
#include "hnn/trainer.h"

namespace hnn {

struct ExperimentSpec {
  DatasetPaths paths;
  TrainConfig config;
  Task task = Task::kHyperedgePrediction;
  std::size_t trials = 1;
  fs::path out;
  std::size_t threads = 1;
  std::size_t checkpoint_every = 0;  // 0 keeps only the final checkpoint

  // Held-out-link recommendation protocol.
  std::string fragment_type = "fragment";
  std::string candidate_type;
  double holdout_fraction = 0.2;

  // Sweep grid, in declaration order; the first key varies slowest.
  std::vector<std::pair<std::string, std::vector<std::string>>> grid;

  // Applies one option. Keys: dataset, hyperedges, features, labels,
  // node_types, splits, task, trials, out, threads, checkpoint_every, fragment_type,
  // candidate_type, holdout_fraction, grid.<key> (comma list) and every
  // training option. Throws ConfigError for unknown keys or bad values.
  void set(const std::string& key, const std::string& value);
  void apply(const KeyValues& kv);

  // Throws ConfigError when the settings are unusable.
  void validate() const;
};

struct TrialOutcome {
  std::uint64_t seed = 0;
  std::vector<EpochRecord> log;
  bool diverged = false;
  std::string diagnostic;
  Checkpoint checkpoint;
  std::vector<std::pair<std::size_t, ModelParams>> snapshots;  // (epoch, params)
  double metric = 0.0;
};

struct ExperimentResult {
  EvalReport report;
  std::vector<TrialOutcome> trials;

  bool diverged() const;
  std::string diagnostic() const;
};

// Runs spec.trials seeded runs (seed, seed + 1, ...) of spec.task. Trials
// may run concurrently; results are ordered by seed. `threads` overrides
// spec.threads.
ExperimentResult run_experiment(const ExperimentSpec& spec, const Dataset& data,
                                std::optional<std::size_t> threads = std::nullopt,
                                Diagnostics* diag = nullptr);

// Per-trial CSV logs (epoch, loss, metric, wall_ms), checkpoints and
// report.json. `dir` must not exist.
void write_experiment(const fs::path& dir, const ExperimentSpec& spec,
                      const ExperimentResult& result);

void write_epoch_log(std::ostream& out, const std::vector<EpochRecord>& log);

struct SweepCell {
  KeyValues settings;
  bool ok = false;
  std::string error;
  std::optional<ExperimentResult> result;
};

std::vector<KeyValues> expand_grid(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& grid);

// One experiment per grid cell, in grid order. A failing cell is recorded
// and the sweep continues. When `dir` is given every cell writes into
// dir/cell_NNN.
std::vector<SweepCell> run_sweep(const ExperimentSpec& spec, const Dataset& data,
                                 const std::optional<fs::path>& dir = std::nullopt,
                                 Diagnostics* diag = nullptr);

void write_sweep_csv(std::ostream& out, const ExperimentSpec& spec,
                     const std::vector<SweepCell>& cells);

struct RankingScores {
  std::vector<double> hr;    // one per cutoff
  std::vector<double> ndcg;
};

// Mean HR@K and nDCG@K over held-out links for one ranking per link.
RankingScores score_rankings(const std::vector<std::vector<Index>>& rankings,
                             const std::vector<HeldOutLink>& links);

struct RecommendationResult {
  EvalReport hnn;
  EvalReport random;
  EvalReport popularity;
  std::vector<Checkpoint> checkpoints;
  std::size_t heldout_links = 0;  // per trial
};

// Held-out-link protocol: hide a fraction of fragment-candidate links, train
// on the rest (or reuse `given`), rank every candidate of the type for each
// hidden link and compare with random and popularity rankings.
RecommendationResult run_recommendation(const ExperimentSpec& spec, const Dataset& data,
                                        const Checkpoint* given = nullptr,
                                        Diagnostics* diag = nullptr);

// Rows "node, hyperedge, values..." of the hyperedge-dependent embeddings of
// the requested nodes (all nodes when empty), with a header line. Throws
// DataError when the checkpoint does not fit the dataset.
void write_embeddings(std::ostream& out, const Dataset& data, const Checkpoint& ckpt,
                      const std::vector<Index>& nodes, Diagnostics* diag = nullptr);

// Re-evaluates a checkpoint on the split its seed selects.
EvalReport evaluate_checkpoint(const Checkpoint& ckpt, const Dataset& data,
                               Diagnostics* diag = nullptr);

}  // namespace hnn

#endif  // HNN_EXPERIMENT_H_
