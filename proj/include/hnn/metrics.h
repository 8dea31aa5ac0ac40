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

#ifndef HNN_METRICS_H_
#define HNN_METRICS_H_

#include <cstddef>
#include <span>

#include "hnn/common.h"

namespace hnn {

// Probability that a random positive outscores a random negative, ties
// counted 1/2 (rank-sum form of the Mann-Whitney U statistic). Throws
// std::invalid_argument unless both classes are present and NumericError
// on non-finite scores.
double auc(std::span<const double> scores, std::span<const double> labels);

// Macro average of one-vs-rest AUC over the classes present among the
// masked nodes. Classes with no masked member, or whose members make up the
// whole masked set, are skipped with a warning.
double multiclass_auc(const Matrix& probabilities, std::span<const int> labels,
                      std::span<const Index> mask, Diagnostics* diag = nullptr);

// 1-based rank of `truth` in `ranked`; throws std::invalid_argument when absent.
std::size_t rank_of(std::span<const Index> ranked, Index truth);

double hit_rate_at_k(std::span<const Index> ranked, Index truth, std::size_t k);

// Single relevant item: 1 / log2(rank + 1) when rank <= k, else 0.
double ndcg_at_k(std::span<const Index> ranked, Index truth, std::size_t k);

}  // namespace hnn

#endif  // HNN_METRICS_H_
