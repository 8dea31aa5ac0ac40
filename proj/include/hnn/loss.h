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

#ifndef HNN_LOSS_H_
#define HNN_LOSS_H_

#include <span>
#include <vector>

#include "hnn/common.h"

namespace hnn {

// Logistic link rho(f) = 1 / (1 + exp(-f)).
double sigmoid(double f);

struct BceResult {
  double loss = 0.0;
  std::vector<double> grad;  // d loss / d score = (rho(f) - y) / n
};

// Mean binary cross-entropy of rho(score) against 0/1 labels, evaluated as
// softplus(-f) for positives and softplus(f) for negatives.
BceResult hyperedge_bce_loss(std::span<const double> scores, std::span<const double> labels);

struct CrossEntropyResult {
  double loss = 0.0;
  Matrix grad;  // d loss / d logits; zero rows for unlabeled nodes
};

// Softmax cross-entropy averaged over the labeled nodes only.
CrossEntropyResult node_ce_loss(const Matrix& logits, std::span<const int> labels,
                                std::span<const Index> labeled);

// Row-wise softmax.
Matrix softmax_rows(const Matrix& logits);

}  // namespace hnn

#endif  // HNN_LOSS_H_
