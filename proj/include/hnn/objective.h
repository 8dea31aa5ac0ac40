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

#ifndef HNN_OBJECTIVE_H_
#define HNN_OBJECTIVE_H_

#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hnn/backward.h"
#include "hnn/model.h"
#include "hnn/scoring.h"

namespace hnn {

// Which vectors a candidate set is scored over.
//  kDependent: psi([z_i ; y_c]) for each member i, where y_c is the mean over
//              members of their hyperedge context D^-1 H Y(L). Positives and
//              sampled negatives are embedded the same way.
//  kNode:      the final node embeddings z_i.
enum class ScoreEmbedding { kDependent, kNode };

ScoreEmbedding parse_score_embedding(std::string_view name);
std::string score_embedding_name(ScoreEmbedding e);

struct ScoringOptions {
  ScoreFunction function = ScoreFunction::kMeanPairwise;
  bool cosine = true;  // unit-normalize before the pairwise dot product
  ScoreEmbedding embedding = ScoreEmbedding::kDependent;
};

struct CandidateScores {
  std::vector<double> scores;
  std::vector<std::size_t> offsets;  // row range of each candidate in `vectors`
  Matrix context;                    // D^-1 H Y(L), dependent mode only
  Matrix inputs;                     // [z_i ; y_c] rows, dependent mode only
  Matrix derivative;                 // psi activation derivative
  Matrix vectors;                    // scored vectors, one row per member
};

CandidateScores score_candidates(const EmbeddingState& state, const PropagationOperators& ops,
                                 const ModelParams& params, const Activation& psi_activation,
                                 std::span<const NodeSet> candidates,
                                 const ScoringOptions& options, Mode mode,
                                 std::mt19937_64& rng);

// Chains d(loss)/d(score) back to the final embeddings; adds into grad_z,
// grad_y and grad_psi.
void score_candidates_backward(const CandidateScores& cache, const PropagationOperators& ops,
                               const ModelParams& params, std::span<const NodeSet> candidates,
                               const ScoringOptions& options, std::span<const double> dscores,
                               Matrix& grad_z, Matrix& grad_y, Matrix& grad_psi);

struct HyperedgeBatch {
  std::vector<NodeSet> sets;
  std::vector<double> labels;  // 1 observed, 0 sampled
};

struct ObjectiveResult {
  double loss = 0.0;
  Gradients grads;
  std::vector<double> scores;
};

// Forward, score, binary cross-entropy and the full reverse pass.
ObjectiveResult hyperedge_objective(const PropagationOperators& ops, const ModelParams& params,
                                    const Matrix& z0, const Matrix& y0,
                                    const VariantKind& variant, const HyperedgeBatch& batch,
                                    const ScoringOptions& options, Mode mode,
                                    std::mt19937_64& rng,
                                    const InputAggregates* inputs = nullptr);

// Linear head on Z(L), softmax cross-entropy over the labeled nodes.
ObjectiveResult node_objective(const PropagationOperators& ops, const ModelParams& params,
                               const Matrix& z0, const Matrix& y0, const VariantKind& variant,
                               std::span<const int> labels, std::span<const Index> labeled,
                               Mode mode, std::mt19937_64& rng,
                               const InputAggregates* inputs = nullptr);

// Head logits Z(L) * head.
Matrix classify(const EmbeddingState& state, const ModelParams& params);

}  // namespace hnn

#endif  // HNN_OBJECTIVE_H_
