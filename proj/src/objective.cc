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

#include "hnn/objective.h"

#include <cctype>
#include <stdexcept>

#include "hnn/loss.h"

namespace hnn {

ScoreEmbedding parse_score_embedding(std::string_view name) {
  std::string n;
  for (const char c : name) n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (n == "dependent" || n == "hyperedge-dependent") return ScoreEmbedding::kDependent;
  if (n == "node") return ScoreEmbedding::kNode;
  throw ConfigError("unknown score embedding '" + std::string(name) + "'");
}

std::string score_embedding_name(ScoreEmbedding e) {
  return e == ScoreEmbedding::kDependent ? "dependent" : "node";
}

CandidateScores score_candidates(const EmbeddingState& state, const PropagationOperators& ops,
                                 const ModelParams& params, const Activation& psi_activation,
                                 std::span<const NodeSet> candidates,
                                 const ScoringOptions& options, Mode mode,
                                 std::mt19937_64& rng) {
  const Matrix& z = state.z.back();
  const Matrix& y = state.y.back();
  CandidateScores out;
  out.offsets.reserve(candidates.size() + 1);
  out.offsets.push_back(0);
  for (const auto& c : candidates) {
    for (const Index i : c) {
      if (i >= z.rows()) throw DataError("candidate references node outside the hypergraph");
    }
    out.offsets.push_back(out.offsets.back() + c.size());
  }
  const std::size_t rows = out.offsets.back();

  if (options.embedding == ScoreEmbedding::kDependent) {
    const Eigen::Index dz = z.cols();
    const Eigen::Index dy = y.cols();
    if (dz + dy != params.psi.rows()) throw DataError("dimension mismatch: psi input");
    out.context = ops.node_context.multiply(y);
    out.inputs.resize(rows, dz + dy);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(dy);
      for (const Index i : candidates[c]) mean += out.context.row(i);
      if (!candidates[c].empty()) mean /= static_cast<double>(candidates[c].size());
      std::size_t r = out.offsets[c];
      for (const Index i : candidates[c]) {
        out.inputs.row(r).head(dz) = z.row(i);
        out.inputs.row(r).tail(dy) = mean;
        ++r;
      }
    }
    apply_activation(psi_activation, mode, out.inputs * params.psi, out.vectors,
                     out.derivative, rng);
  } else {
    out.vectors.resize(rows, z.cols());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t r = out.offsets[c];
      for (const Index i : candidates[c]) out.vectors.row(r++) = z.row(i);
    }
  }

  out.scores.resize(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const Matrix block =
        out.vectors.middleRows(out.offsets[c], out.offsets[c + 1] - out.offsets[c]);
    out.scores[c] = score(options.function, block, options.cosine);
  }
  return out;
}

void score_candidates_backward(const CandidateScores& cache, const PropagationOperators& ops,
                               const ModelParams& params, std::span<const NodeSet> candidates,
                               const ScoringOptions& options, std::span<const double> dscores,
                               Matrix& grad_z, Matrix& grad_y, Matrix& grad_psi) {
  if (dscores.size() != candidates.size()) {
    throw std::invalid_argument("one score gradient per candidate expected");
  }
  Matrix gvec = Matrix::Zero(cache.vectors.rows(), cache.vectors.cols());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    if (dscores[c] == 0.0) continue;
    const std::size_t begin = cache.offsets[c];
    const std::size_t len = cache.offsets[c + 1] - begin;
    Matrix g;
    score(options.function, cache.vectors.middleRows(begin, len), options.cosine, &g);
    gvec.middleRows(begin, len) = dscores[c] * g;
  }

  if (options.embedding == ScoreEmbedding::kNode) {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      std::size_t r = cache.offsets[c];
      for (const Index i : candidates[c]) grad_z.row(i) += gvec.row(r++);
    }
    return;
  }

  const Eigen::Index dz = grad_z.cols();
  const Eigen::Index dy = grad_y.cols();
  const Matrix gpre = gvec.cwiseProduct(cache.derivative);
  grad_psi.noalias() += cache.inputs.transpose() * gpre;
  const Matrix gin = gpre * params.psi.transpose();
  Matrix gcontext = Matrix::Zero(cache.context.rows(), dy);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const std::size_t begin = cache.offsets[c];
    const std::size_t len = cache.offsets[c + 1] - begin;
    if (len == 0) continue;
    Eigen::RowVectorXd gmean = Eigen::RowVectorXd::Zero(dy);
    std::size_t r = begin;
    for (const Index i : candidates[c]) {
      grad_z.row(i) += gin.row(r).head(dz);
      gmean += gin.row(r).tail(dy);
      ++r;
    }
    gmean /= static_cast<double>(len);
    for (const Index i : candidates[c]) gcontext.row(i) += gmean;
  }
  ops.node_context_t.multiply_add(gcontext, grad_y);
}

ObjectiveResult hyperedge_objective(const PropagationOperators& ops, const ModelParams& params,
                                    const Matrix& z0, const Matrix& y0,
                                    const VariantKind& variant, const HyperedgeBatch& batch,
                                    const ScoringOptions& options, Mode mode,
                                    std::mt19937_64& rng, const InputAggregates* inputs) {
  ForwardOptions fo;
  fo.mode = mode;
  fo.inputs = inputs;
  const EmbeddingState state = forward(ops, params, z0, y0, variant, rng, fo);
  const CandidateScores cs =
      score_candidates(state, ops, params, variant.sigma_v, batch.sets, options, mode, rng);
  const BceResult bce = hyperedge_bce_loss(cs.scores, batch.labels);

  Matrix gz = Matrix::Zero(state.z.back().rows(), state.z.back().cols());
  Matrix gy = Matrix::Zero(state.y.back().rows(), state.y.back().cols());
  Matrix gpsi = Matrix::Zero(params.psi.rows(), params.psi.cols());
  score_candidates_backward(cs, ops, params, batch.sets, options, bce.grad, gz, gy, gpsi);

  ObjectiveResult r;
  r.loss = bce.loss;
  r.grads = backward(state, ops, params, gz, gy);
  r.grads.psi = std::move(gpsi);
  r.scores = cs.scores;
  return r;
}

Matrix classify(const EmbeddingState& state, const ModelParams& params) {
  if (!params.head) throw ConfigError("model has no classifier head");
  return state.z.back() * *params.head;
}

ObjectiveResult node_objective(const PropagationOperators& ops, const ModelParams& params,
                               const Matrix& z0, const Matrix& y0, const VariantKind& variant,
                               std::span<const int> labels, std::span<const Index> labeled,
                               Mode mode, std::mt19937_64& rng, const InputAggregates* inputs) {
  ForwardOptions fo;
  fo.mode = mode;
  fo.inputs = inputs;
  const EmbeddingState state = forward(ops, params, z0, y0, variant, rng, fo);
  const Matrix logits = classify(state, params);
  const CrossEntropyResult ce = node_ce_loss(logits, labels, labeled);

  const Matrix gz = ce.grad * params.head->transpose();
  const Matrix gy = Matrix::Zero(state.y.back().rows(), state.y.back().cols());
  ObjectiveResult r;
  r.loss = ce.loss;
  r.grads = backward(state, ops, params, gz, gy);
  r.grads.head = state.z.back().transpose() * ce.grad;
  return r;
}

}  // namespace hnn
