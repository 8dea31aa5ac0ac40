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

#ifndef HNN_SPARSE_MATRIX_H_
#define HNN_SPARSE_MATRIX_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hnn/common.h"

namespace hnn {

struct Triplet {
  Index row;
  Index col;
  double value;
};

// Compressed sparse row matrix. Column indices are strictly increasing
// within a row and no explicit zeros are stored.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  // Duplicates are summed; entries that sum to exactly zero are dropped.
  static SparseMatrix FromTriplets(std::size_t rows, std::size_t cols,
                                   std::vector<Triplet> triplets);
  static SparseMatrix Identity(std::size_t n);
  static SparseMatrix Diagonal(std::span<const double> diag);
  static SparseMatrix FromDense(const Matrix& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return col_idx_.size(); }

  std::span<const Index> row_indices(std::size_t r) const {
    return {col_idx_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }
  std::span<const double> row_values(std::size_t r) const {
    return {values_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }

  // Returns 0 for entries not stored.
  double at(std::size_t r, std::size_t c) const;

  SparseMatrix transpose() const;
  Matrix to_dense() const;

  // diag(left) * this * diag(right); either span may be empty to skip.
  SparseMatrix scaled(std::span<const double> left,
                      std::span<const double> right) const;

  std::vector<double> row_sums() const;
  std::vector<double> col_sums() const;

  // Dense products. Rows are reduced in storage order, so results are
  // bitwise reproducible for a fixed input.
  Matrix multiply(const Matrix& dense) const;
  void multiply_add(const Matrix& dense, Matrix& out) const;

  bool operator==(const SparseMatrix& other) const = default;

 private:
  friend SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b,
                          double alpha, double beta);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<Index> col_idx_;
  std::vector<double> values_;
};

// Sparse-sparse product (row-wise Gustavson). Zeros produced by exact
// cancellation are pruned.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

// Left-to-right chain product.
SparseMatrix multiply_chain(std::initializer_list<const SparseMatrix*> factors);

// alpha * a + beta * b.
SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b,
                 double alpha = 1.0, double beta = 1.0);

}  // namespace hnn

#endif  // HNN_SPARSE_MATRIX_H_
