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

#ifndef HNN_SPLIT_H_
#define HNN_SPLIT_H_

#include <random>
#include <string>
#include <vector>

#include "hnn/hypergraph.h"

namespace hnn {

struct HyperedgeSplit {
  Hypergraph train;                 // same N, only the training hyperedges
  std::vector<Index> train_ids;     // original hyperedge indices, ascending
  std::vector<Index> heldout_ids;   // original hyperedge indices, ascending
  std::vector<NodeSet> heldout;     // member lists of the held-out hyperedges
};

// round(p * M) hyperedges go to the training side, chosen uniformly at
// random. Nodes seen only in held-out hyperedges stay as isolated nodes.
// Throws ConfigError for p outside (0, 1) and DataError when either side
// would be empty.
HyperedgeSplit split_hyperedges(const Hypergraph& g, double p, std::mt19937_64& rng);

std::size_t train_count(std::size_t m, double p);

struct HeldOutLink {
  Index fragment;
  Index candidate;
};

struct LinkHoldout {
  Hypergraph train;  // node types preserved
  std::vector<HeldOutLink> links;
  std::size_t total_links = 0;
};

// Collects the distinct (fragment, candidate) pairs that co-occur in a
// hyperedge, holds out round(fraction * pairs) of them uniformly at random
// (at least one), and deletes the candidate from every hyperedge it shares
// with that fragment.
LinkHoldout holdout_links(const Hypergraph& g, const std::string& fragment_type,
                          const std::string& candidate_type, double fraction,
                          std::mt19937_64& rng);

}  // namespace hnn

#endif  // HNN_SPLIT_H_
