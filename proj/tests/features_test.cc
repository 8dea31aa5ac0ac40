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

#include <cmath>
#include <limits>
#include <random>

#include <Eigen/SVD>
#include <gtest/gtest.h>

#include "test_util.h"

namespace hnn {
namespace {

using testing::DenseIncidence;
using testing::MaxAbsDiff;
using testing::RandomEdges;
using testing::Triangle;

// Compares columns up to sign.
double MaxDiffUpToSign(const Matrix& a, const Matrix& b) {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    const double plus = (a.col(c) - b.col(c)).cwiseAbs().maxCoeff();
    const double minus = (a.col(c) + b.col(c)).cwiseAbs().maxCoeff();
    worst = std::max(worst, std::min(plus, minus));
  }
  return worst;
}

Matrix DenseFactor(const Matrix& m, std::size_t f) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  Matrix out(m.rows(), f);
  for (std::size_t c = 0; c < f; ++c) {
    out.col(c) = svd.matrixU().col(c) * std::sqrt(svd.singularValues()(c));
  }
  return out;
}

TEST(SvdFeaturesTest, DiagonalMatrixTopComponent) {
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = 4;
  d(1, 1) = 1;
  const Matrix x = svd_features(SparseMatrix::FromDense(d), 1);
  ASSERT_EQ(x.cols(), 1);
  EXPECT_NEAR(std::abs(x(0, 0)), 2.0, 1e-10);
  EXPECT_NEAR(x(1, 0), 0.0, 1e-10);
  EXPECT_NEAR(x(2, 0), 0.0, 1e-10);
}

TEST(SvdFeaturesTest, ZeroMatrixGivesZeros) {
  Diagnostics diag;
  const Matrix x = svd_features(SparseMatrix(4, 4), 2, {}, &diag);
  EXPECT_EQ(x.rows(), 4);
  EXPECT_EQ(x.cols(), 2);
  EXPECT_EQ(x.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_FALSE(diag.empty());
}

TEST(SvdFeaturesTest, RankBeyondNumericalRankZeroFillsWithWarning) {
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = 4;
  d(1, 1) = 1;
  Diagnostics diag;
  const Matrix x = svd_features(SparseMatrix::FromDense(d), 3, {}, &diag);
  EXPECT_EQ(x.col(2).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_FALSE(diag.empty());
}

TEST(SvdFeaturesTest, RankOutsideRangeIsRejected) {
  const SparseMatrix m = SparseMatrix::Identity(3);
  EXPECT_THROW(svd_features(m, 0), ConfigError);
  EXPECT_THROW(svd_features(m, 4), ConfigError);
}

TEST(SvdFeaturesTest, FullRankReconstructsPsdMatrix) {
  std::mt19937_64 rng(7);
  const Matrix b = testing::RandomMatrix(rng, 6, 6);
  const Matrix m = b.transpose() * b;
  const TruncatedSvd svd = randomized_svd(SparseMatrix::FromDense(m), 6);
  const Matrix rebuilt = svd.u * svd.sigma.asDiagonal() * svd.u.transpose();
  EXPECT_LT((rebuilt - m).norm() / m.norm(), 1e-6);
}

TEST(SvdFeaturesTest, FullRankReconstructsIndefiniteMatrix) {
  std::mt19937_64 rng(9);
  const auto edges = RandomEdges(rng, 8, 6, 4, true);
  const SparseMatrix a = node_adjacency(Hypergraph::Build(edges, 8));
  const TruncatedSvd svd = randomized_svd(a, 8);
  const Matrix rebuilt = svd.u * svd.sigma.asDiagonal() * svd.v.transpose();
  EXPECT_LT((rebuilt - a.to_dense()).norm() / a.to_dense().norm(), 1e-6);
}

TEST(SvdFeaturesTest, ResidualNonIncreasingInRank) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t n = 10;
    const SparseMatrix a = node_adjacency(Hypergraph::Build(RandomEdges(rng, n, 8, 5, true), n));
    const Matrix dense = a.to_dense();
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t f = 1; f <= n; ++f) {
      const TruncatedSvd svd = randomized_svd(a, f);
      const double residual =
          (dense - svd.u * svd.sigma.asDiagonal() * svd.v.transpose()).norm();
      EXPECT_LE(residual, previous + 1e-9) << "rank " << f;
      previous = residual;
    }
  }
}

TEST(SvdFeaturesTest, RepeatableForFixedSeed) {
  std::mt19937_64 rng(4);
  const SparseMatrix a = node_adjacency(Hypergraph::Build(RandomEdges(rng, 30, 40, 5, true), 30));
  SubspaceIterationOptions opts;
  opts.seed = 99;
  const Matrix x = svd_features(a, 5, opts);
  const Matrix y = svd_features(a, 5, opts);
  EXPECT_TRUE((x.array() == y.array()).all());
  EXPECT_TRUE(x.allFinite());
}

TEST(NodeFeaturesTest, TriangleMatchesDenseFactorization) {
  const Hypergraph g = Triangle();
  const Matrix h = DenseIncidence(g);
  const Matrix a = h * h.transpose() - Matrix(h.rowwise().sum().asDiagonal());
  const Matrix x = init_node_features(g, 2, std::nullopt);
  EXPECT_LT(MaxDiffUpToSign(x, DenseFactor(a, 2)), 1e-8);
}

TEST(NodeFeaturesTest, GivenFeaturesPassThrough) {
  const Hypergraph g = Triangle();
  Matrix given(3, 2);
  given << 1, 2, 3, 4, 5, 6;
  EXPECT_TRUE((init_node_features(g, 7, given).array() == given.array()).all());
  EXPECT_THROW(init_node_features(g, 2, Matrix(2, 2)), DataError);
  EXPECT_THROW(init_node_features(g, 0, std::nullopt), ConfigError);
}

TEST(NodeFeaturesTest, NonFiniteGivenFeaturesRejected) {
  Matrix given = Matrix::Zero(3, 1);
  given(1, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(init_node_features(Triangle(), 1, given), DataError);
}

TEST(HyperedgeFeaturesTest, AggregationWithUnitDegrees) {
  // Each node sits in exactly one hyperedge, so D = I.
  const Hypergraph g = Hypergraph::Build({{0, 1, 2}, {3}, {4, 5}}, 6);
  const Matrix y = init_hyperedge_features(g, Matrix::Ones(6, 1), 1, std::nullopt);
  EXPECT_EQ(y(0, 0), 3.0);
  EXPECT_EQ(y(1, 0), 1.0);
  EXPECT_EQ(y(2, 0), 2.0);
}

TEST(HyperedgeFeaturesTest, TriangleAggregationMatchesDenseOracle) {
  const Hypergraph g = Triangle();
  const Matrix h = DenseIncidence(g);
  const Matrix z = Matrix::Identity(3, 3);
  const Matrix expected = (testing::DiagPinv(h.rowwise().sum()) * h).transpose() * z;
  EXPECT_LT(MaxAbsDiff(init_hyperedge_features(g, z, 3, std::nullopt), expected), 1e-15);
}

TEST(HyperedgeFeaturesTest, SvdModeFactorsHyperedgeAdjacency) {
  const Hypergraph g = Triangle();
  const Matrix h = DenseIncidence(g);
  const Matrix ae = h.transpose() * h - Matrix(h.colwise().sum().transpose().asDiagonal());
  const Matrix y = init_hyperedge_features(g, Matrix::Ones(3, 1), 2, std::nullopt,
                                           HyperedgeFeatureMode::kSvd);
  EXPECT_LT(MaxDiffUpToSign(y, DenseFactor(ae, 2)), 1e-8);
}

TEST(HyperedgeFeaturesTest, GivenFeaturesPassThroughAndShapesChecked) {
  const Hypergraph g = Triangle();
  Matrix given(3, 2);
  given << 1, 0, 0, 1, 1, 1;
  EXPECT_TRUE((init_hyperedge_features(g, Matrix::Ones(3, 1), 2, given).array() ==
               given.array())
                  .all());
  EXPECT_THROW(init_hyperedge_features(g, Matrix::Ones(3, 1), 2, Matrix(4, 2)), DataError);
  EXPECT_THROW(init_hyperedge_features(g, Matrix::Ones(2, 1), 2, std::nullopt), DataError);
}

}  // namespace
}  // namespace hnn
