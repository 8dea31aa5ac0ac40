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

#include "hnn/sparse_matrix.h"

#include <algorithm>
#include <stdexcept>

namespace hnn {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

SparseMatrix SparseMatrix::FromTriplets(std::size_t rows, std::size_t cols,
                                        std::vector<Triplet> triplets) {
  for (const auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) {
      throw std::out_of_range("sparse triplet index out of range");
    }
  }
  std::stable_sort(triplets.begin(), triplets.end(),
                   [](const Triplet& a, const Triplet& b) {
                     return a.row != b.row ? a.row < b.row : a.col < b.col;
                   });
  SparseMatrix m(rows, cols);
  std::size_t i = 0;
  while (i < triplets.size()) {
    const Index r = triplets[i].row;
    const Index c = triplets[i].col;
    double sum = 0.0;
    while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c) {
      sum += triplets[i].value;
      ++i;
    }
    if (sum != 0.0) {
      m.col_idx_.push_back(c);
      m.values_.push_back(sum);
      ++m.row_ptr_[r + 1];
    }
  }
  for (std::size_t r = 0; r < rows; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];
  return m;
}

SparseMatrix SparseMatrix::Identity(std::size_t n) {
  std::vector<double> ones(n, 1.0);
  return Diagonal(ones);
}

SparseMatrix SparseMatrix::Diagonal(std::span<const double> diag) {
  SparseMatrix m(diag.size(), diag.size());
  for (std::size_t r = 0; r < diag.size(); ++r) {
    if (diag[r] != 0.0) {
      m.col_idx_.push_back(static_cast<Index>(r));
      m.values_.push_back(diag[r]);
    }
    m.row_ptr_[r + 1] = m.col_idx_.size();
  }
  return m;
}

SparseMatrix SparseMatrix::FromDense(const Matrix& dense) {
  SparseMatrix m(dense.rows(), dense.cols());
  for (Eigen::Index r = 0; r < dense.rows(); ++r) {
    for (Eigen::Index c = 0; c < dense.cols(); ++c) {
      if (dense(r, c) != 0.0) {
        m.col_idx_.push_back(static_cast<Index>(c));
        m.values_.push_back(dense(r, c));
      }
    }
    m.row_ptr_[r + 1] = m.col_idx_.size();
  }
  return m;
}

double SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto idx = row_indices(r);
  const auto it = std::lower_bound(idx.begin(), idx.end(), static_cast<Index>(c));
  if (it == idx.end() || *it != c) return 0.0;
  return values_[row_ptr_[r] + (it - idx.begin())];
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  std::vector<std::size_t> counts(cols_ + 1, 0);
  for (const Index c : col_idx_) ++counts[c + 1];
  for (std::size_t c = 0; c < cols_; ++c) counts[c + 1] += counts[c];
  t.row_ptr_ = counts;
  t.col_idx_.resize(nnz());
  t.values_.resize(nnz());
  std::vector<std::size_t> next(counts.begin(), counts.end() - 1);
  // Rows are visited in increasing order, so each transposed row comes out
  // sorted by column.
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const std::size_t dst = next[col_idx_[k]]++;
      t.col_idx_[dst] = static_cast<Index>(r);
      t.values_[dst] = values_[k];
    }
  }
  return t;
}

Matrix SparseMatrix::to_dense() const {
  Matrix d = Matrix::Zero(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      d(r, col_idx_[k]) = values_[k];
    }
  }
  return d;
}

SparseMatrix SparseMatrix::scaled(std::span<const double> left,
                                  std::span<const double> right) const {
  if ((!left.empty() && left.size() != rows_) ||
      (!right.empty() && right.size() != cols_)) {
    throw std::invalid_argument("diagonal scaling size mismatch");
  }
  SparseMatrix m(rows_, cols_);
  m.col_idx_.reserve(nnz());
  m.values_.reserve(nnz());
  for (std::size_t r = 0; r < rows_; ++r) {
    const double lr = left.empty() ? 1.0 : left[r];
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      const double rc = right.empty() ? 1.0 : right[col_idx_[k]];
      const double v = lr * values_[k] * rc;
      if (v != 0.0) {
        m.col_idx_.push_back(col_idx_[k]);
        m.values_.push_back(v);
      }
    }
    m.row_ptr_[r + 1] = m.col_idx_.size();
  }
  return m;
}

std::vector<double> SparseMatrix::row_sums() const {
  std::vector<double> s(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) s[r] += values_[k];
  }
  return s;
}

std::vector<double> SparseMatrix::col_sums() const {
  std::vector<double> s(cols_, 0.0);
  for (std::size_t k = 0; k < nnz(); ++k) s[col_idx_[k]] += values_[k];
  return s;
}

Matrix SparseMatrix::multiply(const Matrix& dense) const {
  Matrix out = Matrix::Zero(rows_, dense.cols());
  multiply_add(dense, out);
  return out;
}

void SparseMatrix::multiply_add(const Matrix& dense, Matrix& out) const {
  if (static_cast<std::size_t>(dense.rows()) != cols_ ||
      static_cast<std::size_t>(out.rows()) != rows_ || out.cols() != dense.cols()) {
    throw std::invalid_argument("sparse-dense product shape mismatch");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    auto dst = out.row(r);
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      dst.noalias() += values_[k] * dense.row(col_idx_[k]);
    }
  }
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("sparse product shape mismatch");
  }
  SparseMatrix c(a.rows_, b.cols_);
  std::vector<double> acc(b.cols_, 0.0);
  std::vector<char> touched(b.cols_, 0);
  std::vector<Index> pattern;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    pattern.clear();
    for (std::size_t ka = a.row_ptr_[r]; ka < a.row_ptr_[r + 1]; ++ka) {
      const Index mid = a.col_idx_[ka];
      const double av = a.values_[ka];
      for (std::size_t kb = b.row_ptr_[mid]; kb < b.row_ptr_[mid + 1]; ++kb) {
        const Index col = b.col_idx_[kb];
        if (!touched[col]) {
          touched[col] = 1;
          pattern.push_back(col);
        }
        acc[col] += av * b.values_[kb];
      }
    }
    std::sort(pattern.begin(), pattern.end());
    for (const Index col : pattern) {
      if (acc[col] != 0.0) {
        c.col_idx_.push_back(col);
        c.values_.push_back(acc[col]);
      }
      acc[col] = 0.0;
      touched[col] = 0;
    }
    c.row_ptr_[r + 1] = c.col_idx_.size();
  }
  return c;
}

SparseMatrix multiply_chain(std::initializer_list<const SparseMatrix*> factors) {
  if (factors.size() == 0) throw std::invalid_argument("empty product chain");
  auto it = factors.begin();
  SparseMatrix result = **it;
  for (++it; it != factors.end(); ++it) result = multiply(result, **it);
  return result;
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b, double alpha,
                 double beta) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("sparse sum shape mismatch");
  }
  SparseMatrix c(a.rows_, a.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::size_t ka = a.row_ptr_[r];
    std::size_t kb = b.row_ptr_[r];
    const std::size_t ea = a.row_ptr_[r + 1];
    const std::size_t eb = b.row_ptr_[r + 1];
    while (ka < ea || kb < eb) {
      Index col;
      double v;
      if (kb == eb || (ka < ea && a.col_idx_[ka] < b.col_idx_[kb])) {
        col = a.col_idx_[ka];
        v = alpha * a.values_[ka++];
      } else if (ka == ea || b.col_idx_[kb] < a.col_idx_[ka]) {
        col = b.col_idx_[kb];
        v = beta * b.values_[kb++];
      } else {
        col = a.col_idx_[ka];
        v = alpha * a.values_[ka++] + beta * b.values_[kb++];
      }
      if (v != 0.0) {
        c.col_idx_.push_back(col);
        c.values_.push_back(v);
      }
    }
    c.row_ptr_[r + 1] = c.col_idx_.size();
  }
  return c;
}

}  // namespace hnn
