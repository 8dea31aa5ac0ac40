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

#ifndef HNN_BACKWARD_H_
#define HNN_BACKWARD_H_

#include <optional>
#include <vector>

#include "hnn/common.h"
#include "hnn/model.h"

namespace hnn {

// Same layout as ModelParams.
struct Gradients {
  std::vector<Matrix> w;
  std::vector<Matrix> w_e;
  Matrix psi;
  std::optional<Matrix> head;

  static Gradients ZerosLike(const ModelParams& params);
};

// Reverse-mode pass through the layer stack given d(loss)/d(Z(L)) and
// d(loss)/d(Y(L)). Fills w and w_e; psi and head are returned as zeros.
// For Base the hyperedge update's dependence on Z(k+1) is part of the chain.
// Throws std::invalid_argument when the state has no forward cache.
Gradients backward(const EmbeddingState& state, const PropagationOperators& ops,
                   const ModelParams& params, const Matrix& grad_z, const Matrix& grad_y);

}  // namespace hnn

#endif  // HNN_BACKWARD_H_
