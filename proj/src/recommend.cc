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

#include "hnn/recommend.h"

#include <algorithm>

namespace hnn {

double cosine(const Eigen::Ref<const Eigen::RowVectorXd>& a,
              const Eigen::Ref<const Eigen::RowVectorXd>& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return a.dot(b) / (na * nb);
}

std::vector<ScoredCandidate> recommend(const Hypergraph& g, const Matrix& embeddings,
                                       Index fragment, const std::string& candidate_type,
                                       std::size_t k, Diagnostics* diag) {
  if (fragment >= g.num_nodes()) throw DataError("fragment index out of range");
  if (static_cast<std::size_t>(embeddings.rows()) != g.num_nodes()) {
    throw DataError("embedding rows do not match N");
  }
  const auto candidates = g.nodes_of_type(candidate_type);
  if (candidates.empty()) {
    warn(diag, "no nodes of type '" + candidate_type + "'");
    return {};
  }
  std::vector<ScoredCandidate> scored;
  scored.reserve(candidates.size());
  for (const Index c : candidates) {
    scored.push_back({c, cosine(embeddings.row(fragment), embeddings.row(c))});
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const ScoredCandidate& a, const ScoredCandidate& b) {
                     return a.score != b.score ? a.score > b.score : a.node < b.node;
                   });
  if (scored.size() > k) scored.resize(k);
  return scored;
}

std::vector<ScoredCandidate> recommend(const Hypergraph& g, const EmbeddingState& state,
                                       Index fragment, const std::string& candidate_type,
                                       std::size_t k, Diagnostics* diag) {
  return recommend(g, state.z.back(), fragment, candidate_type, k, diag);
}

std::vector<Index> random_ranking(const Hypergraph& g, const std::string& candidate_type,
                                  std::mt19937_64& rng) {
  auto order = g.nodes_of_type(candidate_type);
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const std::size_t j =
        i + std::uniform_int_distribution<std::size_t>(0, order.size() - 1 - i)(rng);
    std::swap(order[i], order[j]);
  }
  return order;
}

std::vector<Index> popularity_ranking(const Hypergraph& g, const std::string& candidate_type) {
  auto order = g.nodes_of_type(candidate_type);
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    const auto da = g.node_edges(a).size();
    const auto db = g.node_edges(b).size();
    return da != db ? da > db : a < b;
  });
  return order;
}

}  // namespace hnn
