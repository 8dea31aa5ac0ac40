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

#ifndef HNN_OPTIMIZER_H_
#define HNN_OPTIMIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "hnn/backward.h"
#include "hnn/model.h"

namespace hnn {

enum class OptimizerKind { kAdam, kSgd };

OptimizerKind parse_optimizer(std::string_view name);
std::string optimizer_name(OptimizerKind kind);

struct AdamSettings {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Per-matrix first and second moments, laid out like ModelParams.
class Optimizer {
 public:
  Optimizer(OptimizerKind kind, double lr, const ModelParams& params, AdamSettings adam = {});

  void step(ModelParams& params, const Gradients& grads);

  OptimizerKind kind() const { return kind_; }
  double learning_rate() const { return lr_; }
  long steps() const { return steps_; }
  const std::vector<Matrix>& first_moments() const { return m_; }
  const std::vector<Matrix>& second_moments() const { return v_; }

 private:
  void update(Matrix& param, const Matrix& grad, std::size_t slot, double c1, double c2);

  OptimizerKind kind_;
  double lr_;
  AdamSettings adam_;
  long steps_ = 0;
  std::vector<Matrix> m_;
  std::vector<Matrix> v_;
};

}  // namespace hnn

#endif  // HNN_OPTIMIZER_H_
