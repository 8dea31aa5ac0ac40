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

#include "hnn/features.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace hnn {
namespace {

Matrix orthonormal_basis(const Matrix& y) {
  Eigen::HouseholderQR<Matrix> qr(y);
  Matrix thin = Matrix::Identity(y.rows(), y.cols());
  return qr.householderQ() * thin;
}

}  // namespace

TruncatedSvd randomized_svd(const SparseMatrix& m, std::size_t k,
                            const SubspaceIterationOptions& opts) {
  const std::size_t n_min = std::min(m.rows(), m.cols());
  if (k == 0 || k > n_min) {
    throw std::invalid_argument("svd rank must be in [1, min(rows, cols)]");
  }
  const std::size_t width = std::min(n_min, k + static_cast<std::size_t>(opts.oversampling));

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix omega(m.cols(), width);
  for (Eigen::Index r = 0; r < omega.rows(); ++r) {
    for (Eigen::Index c = 0; c < omega.cols(); ++c) omega(r, c) = normal(rng);
  }

  const SparseMatrix mt = m.transpose();
  Matrix q = orthonormal_basis(m.multiply(omega));
  for (int it = 0; it < opts.power_iterations; ++it) {
    const Matrix w = orthonormal_basis(mt.multiply(q));
    q = orthonormal_basis(m.multiply(w));
  }

  // B = Q^T M, computed as (M^T Q)^T.
  const Matrix b = mt.multiply(q).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);

  TruncatedSvd out;
  out.sigma = svd.singularValues().head(k);
  out.u = q * svd.matrixU().leftCols(k);
  out.v = svd.matrixV().leftCols(k);
  for (std::size_t c = 0; c < k; ++c) {
    Eigen::Index arg = 0;
    out.u.col(c).cwiseAbs().maxCoeff(&arg);
    if (out.u(arg, c) < 0.0) {
      out.u.col(c) *= -1.0;
      out.v.col(c) *= -1.0;
    }
  }
  return out;
}

Matrix svd_features(const SparseMatrix& m, std::size_t f,
                    const SubspaceIterationOptions& opts, Diagnostics* diag) {
  if (f == 0 || f > std::min(m.rows(), m.cols())) {
    throw ConfigError("feature rank " + std::to_string(f) + " outside [1, " +
                      std::to_string(std::min(m.rows(), m.cols())) + "]");
  }
  TruncatedSvd svd = randomized_svd(m, f, opts);
  const double top = svd.sigma.size() > 0 ? svd.sigma(0) : 0.0;
  const double cutoff = std::max(top, 1.0) * 1e-10;
  std::size_t zeroed = 0;
  Matrix x(m.rows(), f);
  for (std::size_t c = 0; c < f; ++c) {
    if (svd.sigma(c) <= cutoff) {
      x.col(c).setZero();
      ++zeroed;
    } else {
      x.col(c) = svd.u.col(c) * std::sqrt(svd.sigma(c));
    }
  }
  if (zeroed > 0) {
    warn(diag, "requested rank " + std::to_string(f) + " exceeds numerical rank; " +
                   std::to_string(zeroed) + " trailing column(s) zero-filled");
  }
  return x;
}

Matrix init_node_features(const Hypergraph& g, std::size_t f,
                          const std::optional<Matrix>& given,
                          const SubspaceIterationOptions& opts, Diagnostics* diag) {
  if (given) {
    if (static_cast<std::size_t>(given->rows()) != g.num_nodes()) {
      throw DataError("node features have " + std::to_string(given->rows()) +
                      " rows, hypergraph has " + std::to_string(g.num_nodes()) + " nodes");
    }
    check_finite(*given, "node features");
    return *given;
  }
  return svd_features(node_adjacency(g), f, opts, diag);
}

Matrix init_hyperedge_features(const Hypergraph& g, const Matrix& z1, std::size_t f,
                               const std::optional<Matrix>& given,
                               HyperedgeFeatureMode mode,
                               const SubspaceIterationOptions& opts, Diagnostics* diag) {
  if (static_cast<std::size_t>(z1.rows()) != g.num_nodes()) {
    throw DataError("node embedding rows do not match N");
  }
  if (given) {
    if (static_cast<std::size_t>(given->rows()) != g.num_hyperedges()) {
      throw DataError("hyperedge features have " + std::to_string(given->rows()) +
                      " rows, hypergraph has " + std::to_string(g.num_hyperedges()) +
                      " hyperedges");
    }
    check_finite(*given, "hyperedge features");
    return *given;
  }
  if (mode == HyperedgeFeatureMode::kSvd) {
    return svd_features(hyperedge_adjacency(g), f, opts, diag);
  }
  const auto d_inv = pseudo_inverse(node_degree_vector(g));
  // (D^-1 H)^T = H^T D^-1
  return g.incidence().transpose().scaled({}, d_inv).multiply(z1);
}

void check_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) throw DataError(std::string(what) + " contain NaN or Inf");
}

}  // namespace hnn
