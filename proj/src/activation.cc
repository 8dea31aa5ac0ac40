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

#include "hnn/activation.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace hnn {
namespace {

constexpr double kSeluLambda = 1.0507009873554804934193349852946;
constexpr double kSeluAlpha = 1.6732632423543772848170429916717;

std::string normalize(std::string_view name) {
  std::string s;
  for (const char c : name) {
    if (c == '-' || c == '_' || c == ' ') continue;
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return s;
}

double gelu(double x) { return 0.5 * x * std::erfc(-x / std::numbers::sqrt2); }

double gelu_derivative(double x) {
  const double cdf = 0.5 * std::erfc(-x / std::numbers::sqrt2);
  const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
  return cdf + x * pdf;
}

}  // namespace

Activation Activation::Parse(std::string_view name) {
  const std::string n = normalize(name);
  if (n == "tanh") return Tanh();
  if (n == "leakyrelu" || n == "lrelu") return LeakyRelu();
  if (n == "gelu") return Gelu();
  if (n == "selu") return Selu();
  if (n == "rrelu") return Rrelu();
  if (n == "identity" || n == "linear" || n == "none") return Identity();
  throw ConfigError("unknown activation '" + std::string(name) + "'");
}

std::string Activation::name() const {
  switch (kind) {
    case ActivationKind::kIdentity: return "identity";
    case ActivationKind::kTanh: return "tanh";
    case ActivationKind::kLeakyRelu: return "leaky-relu";
    case ActivationKind::kGelu: return "gelu";
    case ActivationKind::kSelu: return "selu";
    case ActivationKind::kRrelu: return "rrelu";
  }
  return "unknown";
}

double activate_scalar(const Activation& act, double x) {
  switch (act.kind) {
    case ActivationKind::kIdentity: return x;
    case ActivationKind::kTanh: return std::tanh(x);
    case ActivationKind::kLeakyRelu: return x >= 0.0 ? x : act.leaky_slope * x;
    case ActivationKind::kGelu: return gelu(x);
    case ActivationKind::kSelu:
      return x > 0.0 ? kSeluLambda * x : kSeluLambda * kSeluAlpha * std::expm1(x);
    case ActivationKind::kRrelu:
      return x >= 0.0 ? x : 0.5 * (act.rrelu_lower + act.rrelu_upper) * x;
  }
  return x;
}

void apply_activation(const Activation& act, Mode mode, const Matrix& preact,
                      Matrix& out, Matrix& derivative, std::mt19937_64& rng) {
  out.resize(preact.rows(), preact.cols());
  derivative.resize(preact.rows(), preact.cols());
  const Eigen::Index n = preact.size();
  const double* x = preact.data();
  double* y = out.data();
  double* dy = derivative.data();
  switch (act.kind) {
    case ActivationKind::kIdentity:
      for (Eigen::Index i = 0; i < n; ++i) {
        y[i] = x[i];
        dy[i] = 1.0;
      }
      break;
    case ActivationKind::kTanh:
      for (Eigen::Index i = 0; i < n; ++i) {
        y[i] = std::tanh(x[i]);
        dy[i] = 1.0 - y[i] * y[i];
      }
      break;
    case ActivationKind::kLeakyRelu:
      for (Eigen::Index i = 0; i < n; ++i) {
        const double s = x[i] >= 0.0 ? 1.0 : act.leaky_slope;
        y[i] = s * x[i];
        dy[i] = s;
      }
      break;
    case ActivationKind::kGelu:
      for (Eigen::Index i = 0; i < n; ++i) {
        y[i] = gelu(x[i]);
        dy[i] = gelu_derivative(x[i]);
      }
      break;
    case ActivationKind::kSelu:
      for (Eigen::Index i = 0; i < n; ++i) {
        if (x[i] > 0.0) {
          y[i] = kSeluLambda * x[i];
          dy[i] = kSeluLambda;
        } else {
          const double e = std::exp(x[i]);
          y[i] = kSeluLambda * kSeluAlpha * (e - 1.0);
          dy[i] = kSeluLambda * kSeluAlpha * e;
        }
      }
      break;
    case ActivationKind::kRrelu:
      if (mode == Mode::kTrain) {
        std::uniform_real_distribution<double> slope(act.rrelu_lower, act.rrelu_upper);
        for (Eigen::Index i = 0; i < n; ++i) {
          const double a = slope(rng);
          const double s = x[i] >= 0.0 ? 1.0 : a;
          y[i] = s * x[i];
          dy[i] = s;
        }
      } else {
        const double mid = 0.5 * (act.rrelu_lower + act.rrelu_upper);
        for (Eigen::Index i = 0; i < n; ++i) {
          const double s = x[i] >= 0.0 ? 1.0 : mid;
          y[i] = s * x[i];
          dy[i] = s;
        }
      }
      break;
  }
}

}  // namespace hnn
