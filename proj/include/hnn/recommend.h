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

#ifndef HNN_RECOMMEND_H_
#define HNN_RECOMMEND_H_

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hnn/hypergraph.h"
#include "hnn/model.h"

namespace hnn {

struct ScoredCandidate {
  Index node;
  double score;
};

// Cosine of a and b; 0 when either is the zero vector.
double cosine(const Eigen::Ref<const Eigen::RowVectorXd>& a,
              const Eigen::Ref<const Eigen::RowVectorXd>& b);

// Scores every node of candidate_type by cosine with the fragment's
// embedding, sorts descending with ascending node index breaking ties, and
// returns the top k. An absent candidate type yields an empty list and a
// warning.
std::vector<ScoredCandidate> recommend(const Hypergraph& g, const Matrix& embeddings,
                                       Index fragment, const std::string& candidate_type,
                                       std::size_t k, Diagnostics* diag = nullptr);

std::vector<ScoredCandidate> recommend(const Hypergraph& g, const EmbeddingState& state,
                                       Index fragment, const std::string& candidate_type,
                                       std::size_t k, Diagnostics* diag = nullptr);

// Uniformly shuffled candidates.
std::vector<Index> random_ranking(const Hypergraph& g, const std::string& candidate_type,
                                  std::mt19937_64& rng);

// Candidates by hyperedge degree, descending; ties by ascending index.
std::vector<Index> popularity_ranking(const Hypergraph& g, const std::string& candidate_type);

}  // namespace hnn

#endif  // HNN_RECOMMEND_H_
