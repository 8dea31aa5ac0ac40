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

#include "hnn/split.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace hnn {

std::size_t train_count(std::size_t m, double p) {
  return static_cast<std::size_t>(std::llround(p * static_cast<double>(m)));
}

HyperedgeSplit split_hyperedges(const Hypergraph& g, double p, std::mt19937_64& rng) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("split fraction must lie in (0, 1)");
  const std::size_t m = g.num_hyperedges();
  const std::size_t n_train = train_count(m, p);
  if (m < 2 || n_train == 0 || n_train == m) {
    throw DataError("split of " + std::to_string(m) + " hyperedges at p = " +
                    std::to_string(p) + " leaves one side empty");
  }
  std::vector<Index> order(m);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const std::size_t j = i + std::uniform_int_distribution<std::size_t>(0, m - 1 - i)(rng);
    std::swap(order[i], order[j]);
  }
  HyperedgeSplit s;
  s.train_ids.assign(order.begin(), order.begin() + n_train);
  s.heldout_ids.assign(order.begin() + n_train, order.end());
  std::sort(s.train_ids.begin(), s.train_ids.end());
  std::sort(s.heldout_ids.begin(), s.heldout_ids.end());
  std::vector<NodeSet> train_sets;
  train_sets.reserve(n_train);
  for (const Index j : s.train_ids) train_sets.push_back(g.hyperedges()[j]);
  for (const Index j : s.heldout_ids) s.heldout.push_back(g.hyperedges()[j]);
  s.train = Hypergraph::Build(std::move(train_sets), g.num_nodes());
  if (g.has_node_types()) s.train = s.train.with_node_types(g.node_types());
  return s;
}

LinkHoldout holdout_links(const Hypergraph& g, const std::string& fragment_type,
                          const std::string& candidate_type, double fraction,
                          std::mt19937_64& rng) {
  if (!g.has_node_types()) throw DataError("link holdout needs node types");
  if (!(fraction > 0.0 && fraction < 1.0)) throw ConfigError("holdout fraction must lie in (0, 1)");
  const auto& types = g.node_types();
  std::set<std::pair<Index, Index>> pairs;
  for (const auto& e : g.hyperedges()) {
    for (const Index f : e) {
      if (types[f] != fragment_type) continue;
      for (const Index k : e) {
        if (types[k] == candidate_type && k != f) pairs.emplace(f, k);
      }
    }
  }
  std::vector<std::pair<Index, Index>> all(pairs.begin(), pairs.end());
  LinkHoldout out;
  out.total_links = all.size();
  if (all.empty()) throw DataError("no " + fragment_type + " / " + candidate_type + " links");
  const std::size_t n_out = std::max<std::size_t>(1, train_count(all.size(), fraction));
  for (std::size_t i = 0; i < n_out; ++i) {
    const std::size_t j = i + std::uniform_int_distribution<std::size_t>(0, all.size() - 1 - i)(rng);
    std::swap(all[i], all[j]);
  }
  std::set<std::pair<Index, Index>> removed(all.begin(), all.begin() + n_out);
  for (const auto& [f, k] : removed) out.links.push_back({f, k});

  std::vector<NodeSet> edges;
  edges.reserve(g.num_hyperedges());
  for (const auto& e : g.hyperedges()) {
    NodeSet kept;
    for (const Index v : e) {
      bool drop = false;
      if (types[v] == candidate_type) {
        for (const Index f : e) {
          if (types[f] == fragment_type && removed.count({f, v}) > 0) {
            drop = true;
            break;
          }
        }
      }
      if (!drop) kept.push_back(v);
    }
    edges.push_back(std::move(kept));
  }
  out.train = Hypergraph::Build(std::move(edges), g.num_nodes()).with_node_types(types);
  return out;
}

}  // namespace hnn
