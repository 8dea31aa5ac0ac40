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

#include "hnn/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hnn {

double auc(std::span<const double> scores, std::span<const double> labels) {
  if (scores.size() != labels.size()) throw std::invalid_argument("scores/labels length mismatch");
  const std::size_t n = scores.size();
  for (const double s : scores) {
    if (!std::isfinite(s)) throw NumericError("AUC scores must be finite");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double pos = 0.0;
  double neg = 0.0;
  double rank_sum = 0.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    // Tied block occupies ranks i+1 .. j; every member gets their mean.
    const double mean_rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) {
      if (labels[order[t]] > 0.5) {
        rank_sum += mean_rank;
        pos += 1.0;
      } else {
        neg += 1.0;
      }
    }
    i = j;
  }
  if (pos == 0.0 || neg == 0.0) {
    throw std::invalid_argument("AUC needs at least one positive and one negative");
  }
  return (rank_sum - pos * (pos + 1.0) / 2.0) / (pos * neg);
}

double multiclass_auc(const Matrix& probabilities, std::span<const int> labels,
                      std::span<const Index> mask, Diagnostics* diag) {
  if (mask.empty()) throw std::invalid_argument("empty evaluation mask");
  const Eigen::Index classes = probabilities.cols();
  double total = 0.0;
  int used = 0;
  std::vector<double> scores(mask.size());
  std::vector<double> truth(mask.size());
  for (Eigen::Index c = 0; c < classes; ++c) {
    std::size_t members = 0;
    for (std::size_t t = 0; t < mask.size(); ++t) {
      scores[t] = probabilities(mask[t], c);
      truth[t] = labels[mask[t]] == c ? 1.0 : 0.0;
      members += labels[mask[t]] == c ? 1 : 0;
    }
    if (members == 0 || members == mask.size()) {
      warn(diag, "class " + std::to_string(c) + " skipped in one-vs-rest AUC");
      continue;
    }
    total += auc(scores, truth);
    ++used;
  }
  if (used == 0) throw std::invalid_argument("no class has both positives and negatives");
  return total / used;
}

std::size_t rank_of(std::span<const Index> ranked, Index truth) {
  const auto it = std::find(ranked.begin(), ranked.end(), truth);
  if (it == ranked.end()) throw std::invalid_argument("truth item missing from ranking");
  return static_cast<std::size_t>(it - ranked.begin()) + 1;
}

double hit_rate_at_k(std::span<const Index> ranked, Index truth, std::size_t k) {
  return rank_of(ranked, truth) <= k ? 1.0 : 0.0;
}

double ndcg_at_k(std::span<const Index> ranked, Index truth, std::size_t k) {
  const std::size_t r = rank_of(ranked, truth);
  return r <= k ? 1.0 / std::log2(static_cast<double>(r) + 1.0) : 0.0;
}

}  // namespace hnn
