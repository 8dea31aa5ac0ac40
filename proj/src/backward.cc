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

#include "hnn/backward.h"

#include <stdexcept>

namespace hnn {

Gradients Gradients::ZerosLike(const ModelParams& params) {
  Gradients g;
  for (const auto& m : params.w) g.w.push_back(Matrix::Zero(m.rows(), m.cols()));
  for (const auto& m : params.w_e) g.w_e.push_back(Matrix::Zero(m.rows(), m.cols()));
  g.psi = Matrix::Zero(params.psi.rows(), params.psi.cols());
  if (params.head) g.head = Matrix::Zero(params.head->rows(), params.head->cols());
  return g;
}

Gradients backward(const EmbeddingState& state, const PropagationOperators& ops,
                   const ModelParams& params, const Matrix& grad_z, const Matrix& grad_y) {
  const std::size_t layers = params.layers();
  if (!state.has_cache() || state.agg_z.size() != layers || state.layers() != layers) {
    throw std::invalid_argument("backward needs a forward pass run with keep_cache");
  }
  if (grad_z.rows() != state.z.back().rows() || grad_z.cols() != state.z.back().cols() ||
      grad_y.rows() != state.y.back().rows() || grad_y.cols() != state.y.back().cols()) {
    throw std::invalid_argument("upstream gradient shape does not match final embeddings");
  }
  const bool base = ops.b_v.has_value();
  Gradients g = Gradients::ZerosLike(params);

  Matrix gz = grad_z;  // d loss / d Z(k+1)
  Matrix gy = grad_y;  // d loss / d Y(k+1)
  for (std::size_t k = layers; k-- > 0;) {
    // Hyperedge stream: Y(k+1) = sigma_e(C_k W_e), C_k = S_e Y(k) [+ B_e Z(k+1)].
    const Matrix gv = gy.cwiseProduct(state.dact_y[k]);
    g.w_e[k].noalias() = state.agg_y[k].transpose() * gv;
    const Matrix gc = gv * params.w_e[k].transpose();
    if (base) ops.b_e_t->multiply_add(gc, gz);

    // Node stream: Z(k+1) = sigma_v(A_k W), A_k = S_v Z(k) [+ B_v Y(k)].
    const Matrix gu = gz.cwiseProduct(state.dact_z[k]);
    g.w[k].noalias() = state.agg_z[k].transpose() * gu;
    if (k == 0) break;
    const Matrix ga = gu * params.w[k].transpose();
    Matrix gy_prev = ops.s_e_t.multiply(gc);
    if (base) ops.b_v_t->multiply_add(ga, gy_prev);
    gz = ops.s_v_t.multiply(ga);
    gy = std::move(gy_prev);
  }
  return g;
}

}  // namespace hnn
