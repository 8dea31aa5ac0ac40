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

#ifndef HNN_SAMPLING_H_
#define HNN_SAMPLING_H_

#include <cstddef>
#include <random>
#include <unordered_set>
#include <vector>

#include "hnn/hypergraph.h"

namespace hnn {

struct NodeSetHash {
  std::size_t operator()(const NodeSet& s) const noexcept;
};

// Exact-match lookup over sorted node sets.
class HyperedgeSet {
 public:
  HyperedgeSet() = default;
  explicit HyperedgeSet(const std::vector<NodeSet>& sets);
  void insert(const NodeSet& sorted) { sets_.insert(sorted); }
  bool contains(const NodeSet& sorted) const { return sets_.count(sorted) > 0; }
  std::size_t size() const { return sets_.size(); }

 private:
  std::unordered_set<NodeSet, NodeSetHash> sets_;
};

// Members of e kept by a negative: ceil(alpha |e|), capped at |e| - 1 so a
// negative always replaces at least one node.
std::size_t retained_count(std::size_t size, double alpha);

struct NegativeSamplingOptions {
  // Hyperedges (sorted node sets) negatives are forged from; defaults to
  // all of g.
  const std::vector<NodeSet>* sources = nullptr;
  // Sets a negative may not equal; defaults to the hyperedges of g.
  const HyperedgeSet* exclude = nullptr;
  int max_failures = 100;
};

// Each negative starts from a uniformly drawn source hyperedge e, keeps
// retained_count(|e|, alpha) uniformly chosen members and fills the rest
// uniformly without replacement from V - e. Infeasible or duplicate draws
// are retried; max_failures consecutive failures throw DataError.
std::vector<NodeSet> sample_negatives(const Hypergraph& g, std::size_t count, double alpha,
                                      std::mt19937_64& rng,
                                      const NegativeSamplingOptions& options = {});

}  // namespace hnn

#endif  // HNN_SAMPLING_H_
