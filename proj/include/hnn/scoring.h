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

#ifndef HNN_SCORING_H_
#define HNN_SCORING_H_

#include <string>
#include <string_view>

#include "hnn/common.h"

namespace hnn {

enum class ScoreFunction { kMeanPairwise, kMaxMin };

ScoreFunction parse_score_function(std::string_view name);
std::string score_function_name(ScoreFunction fn);

// Mean over the k(k-1)/2 unordered pairs of x_i . x_j, with each row unit
// normalized first when `normalize` is set. Zero rows are left as they are
// and reported through diag. Requires k >= 2. When grad is non-null it
// receives d(score)/d(rows).
double score_mean_pairwise(const Matrix& embs, bool normalize = true,
                           Matrix* grad = nullptr, Diagnostics* diag = nullptr);

// Negated mean per-dimension range: -(1/d) sum_t (max_i x_it - min_i x_it).
// Tight clusters score near 0, spread sets score lower. Requires k >= 1.
// Ties route the gradient to the lowest row index.
double score_maxmin(const Matrix& embs, Matrix* grad = nullptr);

double score(ScoreFunction fn, const Matrix& embs, bool normalize = true,
             Matrix* grad = nullptr, Diagnostics* diag = nullptr);

}  // namespace hnn

#endif  // HNN_SCORING_H_
