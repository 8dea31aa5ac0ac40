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

#include "hnn/optimizer.h"

#include <cctype>
#include <cmath>

namespace hnn {

OptimizerKind parse_optimizer(std::string_view name) {
  std::string n;
  for (const char c : name) n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (n == "adam") return OptimizerKind::kAdam;
  if (n == "sgd") return OptimizerKind::kSgd;
  throw ConfigError("unknown optimizer '" + std::string(name) + "'");
}

std::string optimizer_name(OptimizerKind kind) {
  return kind == OptimizerKind::kAdam ? "adam" : "sgd";
}

namespace {

template <typename Fn>
void for_each_matrix(const ModelParams& p, Fn&& fn) {
  for (const auto& m : p.w) fn(m);
  for (const auto& m : p.w_e) fn(m);
  fn(p.psi);
  if (p.head) fn(*p.head);
}

}  // namespace

Optimizer::Optimizer(OptimizerKind kind, double lr, const ModelParams& params,
                     AdamSettings adam)
    : kind_(kind), lr_(lr), adam_(adam) {
  if (!(lr >= 0.0)) throw ConfigError("learning rate must be non-negative");
  if (kind_ == OptimizerKind::kAdam) {
    for_each_matrix(params, [&](const Matrix& m) {
      m_.push_back(Matrix::Zero(m.rows(), m.cols()));
      v_.push_back(Matrix::Zero(m.rows(), m.cols()));
    });
  }
}

void Optimizer::update(Matrix& param, const Matrix& grad, std::size_t slot, double c1,
                       double c2) {
  if (kind_ == OptimizerKind::kSgd) {
    param.noalias() -= lr_ * grad;
    return;
  }
  Matrix& m = m_[slot];
  Matrix& v = v_[slot];
  m = adam_.beta1 * m + (1.0 - adam_.beta1) * grad;
  v = adam_.beta2 * v + (1.0 - adam_.beta2) * grad.cwiseProduct(grad);
  param.array() -= lr_ * (m.array() / c1) / ((v.array() / c2).sqrt() + adam_.epsilon);
}

void Optimizer::step(ModelParams& params, const Gradients& grads) {
  ++steps_;
  const double c1 = 1.0 - std::pow(adam_.beta1, static_cast<double>(steps_));
  const double c2 = 1.0 - std::pow(adam_.beta2, static_cast<double>(steps_));
  std::size_t slot = 0;
  for (std::size_t k = 0; k < params.w.size(); ++k) update(params.w[k], grads.w[k], slot++, c1, c2);
  for (std::size_t k = 0; k < params.w_e.size(); ++k) {
    update(params.w_e[k], grads.w_e[k], slot++, c1, c2);
  }
  update(params.psi, grads.psi, slot++, c1, c2);
  if (params.head) update(*params.head, *grads.head, slot++, c1, c2);
}

}  // namespace hnn
