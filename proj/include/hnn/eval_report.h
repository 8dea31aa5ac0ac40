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


#ifndef HNN_EVAL_REPORT_H_
#define HNN_EVAL_REPORT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hnn {

inline constexpr std::array<std::size_t, 4> kRankingCutoffs = {1, 10, 25, 50};

struct MetricSummary {
  std::string name;              // "auc", "hr", "ndcg"
  std::optional<std::size_t> k;  // cutoff for ranking metrics
  std::vector<double> values;    // one per trial, in seed order
  double mean = 0.0;
  double std = 0.0;              // sample standard deviation, 0 for one trial

  std::string label() const;     // "auc", "hr@10", ...
};

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

MeanStd summarize(const std::vector<double>& values);

struct EvalReport {
  std::string task;
  std::string method;  // "hnn", "random", "popularity"
  std::vector<std::uint64_t> seeds;
  std::vector<MetricSummary> metrics;

  std::size_t trials() const { return seeds.size(); }

  // Appends a metric with one value per seed. Throws std::invalid_argument
  // on a count mismatch.
  void add(const std::string& name, std::optional<std::size_t> k, std::vector<double> values);

  const MetricSummary* find(const std::string& label) const;

  // Throws NumericError when a metric leaves [0, 1] or no trial was run.
  void validate() const;

  std::string to_json(int indent = 2) const;
  static EvalReport FromJson(const std::string& text);
};

}  // namespace hnn

#endif  // HNN_EVAL_REPORT_H_
