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

#include "hnn/scoring.h"

#include <cctype>

namespace hnn {

ScoreFunction parse_score_function(std::string_view name) {
  std::string n;
  for (const char c : name) {
    if (c == '-' || c == '_') continue;
    n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (n == "meanpairwise" || n == "cosine" || n == "mean") return ScoreFunction::kMeanPairwise;
  if (n == "maxmin") return ScoreFunction::kMaxMin;
  throw ConfigError("unknown score function '" + std::string(name) + "'");
}

std::string score_function_name(ScoreFunction fn) {
  return fn == ScoreFunction::kMeanPairwise ? "mean-pairwise" : "max-min";
}

double score_mean_pairwise(const Matrix& embs, bool normalize, Matrix* grad,
                           Diagnostics* diag) {
  const Eigen::Index k = embs.rows();
  if (k < 2) throw std::invalid_argument("mean pairwise score needs at least two vectors");
  Matrix unit = embs;
  Eigen::VectorXd norms = Eigen::VectorXd::Ones(k);
  if (normalize) {
    for (Eigen::Index i = 0; i < k; ++i) {
      const double n = embs.row(i).norm();
      if (n > 0.0) {
        unit.row(i) /= n;
        norms(i) = n;
      } else {
        norms(i) = 0.0;
        warn(diag, "zero embedding vector left unnormalized in pairwise score");
      }
    }
  }
  const double pairs = static_cast<double>(k) * static_cast<double>(k - 1) / 2.0;
  double sum = 0.0;
  for (Eigen::Index i = 1; i < k; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) sum += unit.row(i).dot(unit.row(j));
  }
  if (grad != nullptr) {
    const Eigen::RowVectorXd total = unit.colwise().sum();
    grad->resize(k, embs.cols());
    for (Eigen::Index i = 0; i < k; ++i) {
      Eigen::RowVectorXd g = (total - unit.row(i)) / pairs;
      if (normalize && norms(i) > 0.0) {
        g = (g - g.dot(unit.row(i)) * unit.row(i)) / norms(i);
      }
      grad->row(i) = g;
    }
  }
  return sum / pairs;
}

double score_maxmin(const Matrix& embs, Matrix* grad) {
  const Eigen::Index k = embs.rows();
  const Eigen::Index d = embs.cols();
  if (k < 1) throw std::invalid_argument("max-min score needs at least one vector");
  if (grad != nullptr) *grad = Matrix::Zero(k, d);
  if (d == 0) return 0.0;
  double total = 0.0;
  for (Eigen::Index t = 0; t < d; ++t) {
    Eigen::Index arg_max = 0;
    Eigen::Index arg_min = 0;
    for (Eigen::Index i = 1; i < k; ++i) {
      if (embs(i, t) > embs(arg_max, t)) arg_max = i;
      if (embs(i, t) < embs(arg_min, t)) arg_min = i;
    }
    total += embs(arg_max, t) - embs(arg_min, t);
    if (grad != nullptr) {
      (*grad)(arg_max, t) -= 1.0 / static_cast<double>(d);
      (*grad)(arg_min, t) += 1.0 / static_cast<double>(d);
    }
  }
  return -total / static_cast<double>(d);
}

double score(ScoreFunction fn, const Matrix& embs, bool normalize, Matrix* grad,
             Diagnostics* diag) {
  return fn == ScoreFunction::kMeanPairwise ? score_mean_pairwise(embs, normalize, grad, diag)
                                            : score_maxmin(embs, grad);
}

}  // namespace hnn
