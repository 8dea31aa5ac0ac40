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

#ifndef HNN_FEATURES_H_
#define HNN_FEATURES_H_

#include <cstdint>
#include <optional>

#include "hnn/common.h"
#include "hnn/hypergraph.h"
#include "hnn/sparse_matrix.h"

namespace hnn {

struct SubspaceIterationOptions {
  int oversampling = 8;
  int power_iterations = 4;
  std::uint64_t seed = 0;
};

// Top-k singular triplets of a sparse matrix by randomized subspace
// iteration with a seeded Gaussian test matrix. Columns are sign-normalized
// so the largest-magnitude entry of each left vector is positive.
struct TruncatedSvd {
  Matrix u;               // rows x k
  Eigen::VectorXd sigma;  // k, descending
  Matrix v;               // cols x k
};

TruncatedSvd randomized_svd(const SparseMatrix& m, std::size_t k,
                            const SubspaceIterationOptions& opts = {});

// Rank-f factor U diag(sqrt(sigma)). Singular values below the numerical
// rank are zero-filled (with a warning). Requires 1 <= f <= min(rows, cols).
Matrix svd_features(const SparseMatrix& m, std::size_t f,
                    const SubspaceIterationOptions& opts = {},
                    Diagnostics* diag = nullptr);

// Z(1): the given matrix when present, otherwise the rank-f factor of
// A = HH^T - D.
Matrix init_node_features(const Hypergraph& g, std::size_t f,
                          const std::optional<Matrix>& given,
                          const SubspaceIterationOptions& opts = {},
                          Diagnostics* diag = nullptr);

enum class HyperedgeFeatureMode {
  kAggregate,  // (D^-1 H)^T Z(1)
  kSvd,        // rank-f factor of A^(e) = H^T H - D^e
};

Matrix init_hyperedge_features(const Hypergraph& g, const Matrix& z1, std::size_t f,
                               const std::optional<Matrix>& given,
                               HyperedgeFeatureMode mode = HyperedgeFeatureMode::kAggregate,
                               const SubspaceIterationOptions& opts = {},
                               Diagnostics* diag = nullptr);

// Throws DataError on NaN/Inf entries.
void check_finite(const Matrix& m, const char* what);

}  // namespace hnn

#endif  // HNN_FEATURES_H_
