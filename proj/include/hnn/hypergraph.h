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

#ifndef HNN_HYPERGRAPH_H_
#define HNN_HYPERGRAPH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hnn/common.h"
#include "hnn/sparse_matrix.h"

namespace hnn {

using NodeSet = std::vector<Index>;

// Immutable hypergraph over nodes 0..N-1. Both incidence directions are kept
// sorted: edge_members(j) lists the nodes of hyperedge j and node_edges(i)
// lists the hyperedges containing node i.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Member lists are sorted and de-duplicated. An empty hyperedge or an
  // out-of-range node throws DataError naming the offending hyperedge.
  static Hypergraph Build(std::vector<NodeSet> hyperedges, std::size_t num_nodes);

  std::size_t num_nodes() const { return node_edges_.size(); }
  std::size_t num_hyperedges() const { return edge_members_.size(); }
  std::size_t num_incidences() const { return num_incidences_; }

  std::span<const Index> edge_members(std::size_t j) const { return edge_members_[j]; }
  std::span<const Index> node_edges(std::size_t i) const { return node_edges_[i]; }
  const std::vector<NodeSet>& hyperedges() const { return edge_members_; }

  bool has_node_types() const { return !node_type_.empty(); }
  const std::vector<std::string>& node_types() const { return node_type_; }
  // Throws DataError if the size is not N.
  Hypergraph with_node_types(std::vector<std::string> types) const;
  std::vector<Index> nodes_of_type(const std::string& type) const;

  // N x M binary incidence matrix H.
  SparseMatrix incidence() const;

 private:
  std::vector<NodeSet> edge_members_;
  std::vector<NodeSet> node_edges_;
  std::vector<std::string> node_type_;
  std::size_t num_incidences_ = 0;
};

struct DegreeProfile {
  std::vector<double> node_degree;       // d: hyperedges per node (diag of D)
  std::vector<double> hyperedge_size;    // d^e: nodes per hyperedge (diag of D^e)
  std::vector<double> neighbor_degree;   // d^v: row sums of A = HH^T - D
};

DegreeProfile degrees(const Hypergraph& g);

// The two diagonals alone, without forming A.
std::vector<double> node_degree_vector(const Hypergraph& g);
std::vector<double> hyperedge_size_vector(const Hypergraph& g);

// A = HH^T - D. Entry (i, j) counts the hyperedges holding both i and j.
SparseMatrix node_adjacency(const Hypergraph& g);

// A^(e) = H^T H - D^e. Entry (j, k) is |e_j ∩ e_k|.
SparseMatrix hyperedge_adjacency(const Hypergraph& g);

// Line graph with per-hyperedge thresholds: {j, k} is an edge when
// |e_j ∩ e_k| > delta[j] or |e_j ∩ e_k| > delta[k]. Returned pairs have
// j < k and are sorted. Non-positive thresholds throw std::invalid_argument.
std::vector<std::pair<Index, Index>> line_graph(const Hypergraph& g,
                                                std::span<const double> delta);

// Reciprocals with 0 where the input is 0.
std::vector<double> pseudo_inverse(std::span<const double> values);

struct TransitionMatrices {
  SparseMatrix node;       // P   = H De^-1 (D^-1 H)^T, N x N
  SparseMatrix hyperedge;  // P_e = (D^-1 H)^T H De^-1, M x M
};

// Isolated nodes get a zero inverse degree; a warning is recorded for them.
TransitionMatrices transition_matrices(const Hypergraph& g, Diagnostics* diag = nullptr);

}  // namespace hnn

#endif  // HNN_HYPERGRAPH_H_
