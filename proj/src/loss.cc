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

#include "hnn/loss.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hnn {

double sigmoid(double f) {
  if (f >= 0.0) return 1.0 / (1.0 + std::exp(-f));
  const double e = std::exp(f);
  return e / (1.0 + e);
}

namespace {

double softplus(double f) { return std::max(f, 0.0) + std::log1p(std::exp(-std::abs(f))); }

}  // namespace

BceResult hyperedge_bce_loss(std::span<const double> scores, std::span<const double> labels) {
  if (scores.empty()) throw std::invalid_argument("empty batch");
  if (scores.size() != labels.size()) throw std::invalid_argument("scores/labels length mismatch");
  const double n = static_cast<double>(scores.size());
  BceResult r;
  r.grad.resize(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const double y = labels[i];
    if (y != 0.0 && y != 1.0) throw std::invalid_argument("labels must be 0 or 1");
    r.loss += y == 1.0 ? softplus(-scores[i]) : softplus(scores[i]);
    r.grad[i] = (sigmoid(scores[i]) - y) / n;
  }
  r.loss /= n;
  return r;
}

Matrix softmax_rows(const Matrix& logits) {
  Matrix p(logits.rows(), logits.cols());
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    const double mx = logits.row(i).maxCoeff();
    p.row(i) = (logits.row(i).array() - mx).exp();
    p.row(i) /= p.row(i).sum();
  }
  return p;
}

CrossEntropyResult node_ce_loss(const Matrix& logits, std::span<const int> labels,
                                std::span<const Index> labeled) {
  if (labeled.empty()) throw std::invalid_argument("empty labeled node set");
  if (labels.size() != static_cast<std::size_t>(logits.rows())) {
    throw std::invalid_argument("label vector length does not match logits rows");
  }
  const double n = static_cast<double>(labeled.size());
  CrossEntropyResult r;
  r.grad = Matrix::Zero(logits.rows(), logits.cols());
  for (const Index i : labeled) {
    const int c = labels[i];
    if (c < 0 || c >= logits.cols()) {
      throw std::invalid_argument("node " + std::to_string(i) + " has no valid label");
    }
    const double mx = logits.row(i).maxCoeff();
    const Eigen::RowVectorXd shifted = logits.row(i).array() - mx;
    const double lse = std::log(shifted.array().exp().sum());
    r.loss += lse - shifted(c);
    Eigen::RowVectorXd p = (shifted.array() - lse).exp();
    p(c) -= 1.0;
    r.grad.row(i) += p / n;
  }
  r.loss /= n;
  return r;
}

}  // namespace hnn
