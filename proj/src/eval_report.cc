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

#include "hnn/eval_report.h"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "hnn/common.h"

namespace hnn {

std::string MetricSummary::label() const {
  return k ? name + "@" + std::to_string(*k) : name;
}

MeanStd summarize(const std::vector<double>& values) {
  MeanStd out;
  if (values.empty()) return out;
  for (const double v : values) out.mean += v;
  out.mean /= static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (const double v : values) ss += (v - out.mean) * (v - out.mean);
    out.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return out;
}

void EvalReport::add(const std::string& name, std::optional<std::size_t> k,
                     std::vector<double> values) {
  if (values.size() != seeds.size()) {
    throw std::invalid_argument("metric " + name + " has " + std::to_string(values.size()) +
                                " values for " + std::to_string(seeds.size()) + " seeds");
  }
  MetricSummary m;
  m.name = name;
  m.k = k;
  const MeanStd s = summarize(values);
  m.values = std::move(values);
  m.mean = s.mean;
  m.std = s.std;
  metrics.push_back(std::move(m));
}

const MetricSummary* EvalReport::find(const std::string& label) const {
  for (const auto& m : metrics) {
    if (m.label() == label) return &m;
  }
  return nullptr;
}

void EvalReport::validate() const {
  if (trials() < 1) throw NumericError("report holds no trials");
  for (const auto& m : metrics) {
    for (const double v : m.values) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw NumericError("metric " + m.label() + " left [0, 1]: " + std::to_string(v));
      }
    }
    if (!(m.std >= 0.0)) throw NumericError("metric " + m.label() + " has invalid spread");
  }
}

std::string EvalReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["task"] = task;
  j["method"] = method;
  j["trials"] = trials();
  j["seeds"] = seeds;
  j["metrics"] = nlohmann::ordered_json::array();
  for (const auto& m : metrics) {
    nlohmann::ordered_json e;
    e["name"] = m.name;
    e["k"] = m.k ? nlohmann::ordered_json(*m.k) : nlohmann::ordered_json(nullptr);
    e["values"] = m.values;
    e["mean"] = m.mean;
    e["std"] = m.std;
    j["metrics"].push_back(std::move(e));
  }
  return j.dump(indent);
}

EvalReport EvalReport::FromJson(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    EvalReport r;
    r.task = j.at("task").get<std::string>();
    r.method = j.value("method", std::string());
    r.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    for (const auto& e : j.at("metrics")) {
      MetricSummary m;
      m.name = e.at("name").get<std::string>();
      if (!e.at("k").is_null()) m.k = e.at("k").get<std::size_t>();
      m.values = e.at("values").get<std::vector<double>>();
      m.mean = e.at("mean").get<double>();
      m.std = e.at("std").get<double>();
      r.metrics.push_back(std::move(m));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace hnn
