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

#ifndef HNN_ACTIVATION_H_
#define HNN_ACTIVATION_H_

#include <random>
#include <string>
#include <string_view>

#include "hnn/common.h"

namespace hnn {

enum class ActivationKind { kIdentity, kTanh, kLeakyRelu, kGelu, kSelu, kRrelu };

struct Activation {
  ActivationKind kind = ActivationKind::kTanh;
  double leaky_slope = 0.01;
  double rrelu_lower = 1.0 / 8.0;
  double rrelu_upper = 1.0 / 3.0;

  static Activation Identity() { return {ActivationKind::kIdentity}; }
  static Activation Tanh() { return {ActivationKind::kTanh}; }
  static Activation LeakyRelu(double slope = 0.01) {
    Activation a{ActivationKind::kLeakyRelu};
    a.leaky_slope = slope;
    return a;
  }
  static Activation Gelu() { return {ActivationKind::kGelu}; }
  static Activation Selu() { return {ActivationKind::kSelu}; }
  static Activation Rrelu(double lower = 1.0 / 8.0, double upper = 1.0 / 3.0) {
    Activation a{ActivationKind::kRrelu};
    a.rrelu_lower = lower;
    a.rrelu_upper = upper;
    return a;
  }

  // Accepts tanh, leaky-relu, gelu, selu, rrelu, identity (and a few
  // spelling variants). Throws ConfigError otherwise.
  static Activation Parse(std::string_view name);
  std::string name() const;

  bool operator==(const Activation&) const = default;
};

enum class Mode { kTrain, kEval };

// Applies the activation elementwise and records its derivative at each
// entry. rrelu draws one slope per entry from rng in training mode and uses
// the midpoint slope in eval mode; rng is untouched otherwise.
void apply_activation(const Activation& act, Mode mode, const Matrix& preact,
                      Matrix& out, Matrix& derivative, std::mt19937_64& rng);

double activate_scalar(const Activation& act, double x);

}  // namespace hnn

#endif  // HNN_ACTIVATION_H_
