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

#include "hnn/sampling.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hnn/common.h"

namespace hnn {

std::size_t NodeSetHash::operator()(const NodeSet& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const Index v : s) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

HyperedgeSet::HyperedgeSet(const std::vector<NodeSet>& sets) {
  for (const auto& s : sets) {
    NodeSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sets_.insert(std::move(sorted));
  }
}

std::size_t retained_count(std::size_t size, double alpha) {
  if (size == 0) return 0;
  // The epsilon keeps products like 0.7 * 10 from rounding up past 7.
  const double raw = std::ceil(alpha * static_cast<double>(size) - 1e-9);
  const auto keep = static_cast<std::size_t>(std::max(raw, 0.0));
  return std::min(keep, size - 1);
}

namespace {

std::size_t uniform_index(std::size_t n, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// Draws `need` distinct nodes outside the sorted set `e`.
NodeSet draw_outside(const NodeSet& e, std::size_t num_nodes, std::size_t need,
                     std::mt19937_64& rng) {
  const std::size_t available = num_nodes - e.size();
  NodeSet picked;
  picked.reserve(need);
  if (need * 4 <= available) {
    while (picked.size() < need) {
      const auto v = static_cast<Index>(uniform_index(num_nodes, rng));
      if (std::binary_search(e.begin(), e.end(), v)) continue;
      if (std::find(picked.begin(), picked.end(), v) != picked.end()) continue;
      picked.push_back(v);
    }
    return picked;
  }
  NodeSet complement;
  complement.reserve(available);
  std::size_t pos = 0;
  for (Index v = 0; v < num_nodes; ++v) {
    if (pos < e.size() && e[pos] == v) {
      ++pos;
      continue;
    }
    complement.push_back(v);
  }
  for (std::size_t i = 0; i < need; ++i) {
    const std::size_t j = i + uniform_index(complement.size() - i, rng);
    std::swap(complement[i], complement[j]);
    picked.push_back(complement[i]);
  }
  return picked;
}

}  // namespace

std::vector<NodeSet> sample_negatives(const Hypergraph& g, std::size_t count, double alpha,
                                      std::mt19937_64& rng,
                                      const NegativeSamplingOptions& options) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
  const std::vector<NodeSet>& sources =
      options.sources != nullptr ? *options.sources : g.hyperedges();
  if (count > 0 && sources.empty()) throw DataError("no hyperedges to derive negatives from");
  HyperedgeSet own;
  const HyperedgeSet* exclude = options.exclude;
  if (exclude == nullptr) {
    own = HyperedgeSet(g.hyperedges());
    exclude = &own;
  }

  std::vector<NodeSet> negatives;
  negatives.reserve(count);
  int failures = 0;
  while (negatives.size() < count) {
    const NodeSet& e = sources[uniform_index(sources.size(), rng)];
    const std::size_t keep = retained_count(e.size(), alpha);
    const std::size_t need = e.size() - keep;
    if (g.num_nodes() < e.size() + need) {
      if (++failures >= options.max_failures) {
        throw DataError("negative sampling failed " + std::to_string(failures) +
                        " times in a row: hyperedges too large for V - e");
      }
      continue;
    }
    NodeSet pool = e;
    NodeSet candidate;
    candidate.reserve(e.size());
    for (std::size_t i = 0; i < keep; ++i) {
      const std::size_t j = i + uniform_index(pool.size() - i, rng);
      std::swap(pool[i], pool[j]);
      candidate.push_back(pool[i]);
    }
    const NodeSet outside = draw_outside(e, g.num_nodes(), need, rng);
    candidate.insert(candidate.end(), outside.begin(), outside.end());
    std::sort(candidate.begin(), candidate.end());
    if (exclude->contains(candidate)) {
      if (++failures >= options.max_failures) {
        throw DataError("negative sampling failed " + std::to_string(failures) +
                        " times in a row: every draw matched an observed hyperedge");
      }
      continue;
    }
    failures = 0;
    negatives.push_back(std::move(candidate));
  }
  return negatives;
}

}  // namespace hnn
