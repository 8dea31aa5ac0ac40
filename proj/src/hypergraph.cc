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

#include "hnn/hypergraph.h"

#include <algorithm>
#include <stdexcept>

namespace hnn {

Hypergraph Hypergraph::Build(std::vector<NodeSet> hyperedges, std::size_t num_nodes) {
  Hypergraph g;
  g.node_edges_.resize(num_nodes);
  for (std::size_t j = 0; j < hyperedges.size(); ++j) {
    NodeSet& members = hyperedges[j];
    if (members.empty()) {
      throw DataError("hyperedge " + std::to_string(j) + " is empty");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.back() >= num_nodes) {
      throw DataError("hyperedge " + std::to_string(j) + " references node " +
                      std::to_string(members.back()) + " but N = " +
                      std::to_string(num_nodes));
    }
    for (const Index i : members) g.node_edges_[i].push_back(static_cast<Index>(j));
    g.num_incidences_ += members.size();
  }
  g.edge_members_ = std::move(hyperedges);
  return g;
}

Hypergraph Hypergraph::with_node_types(std::vector<std::string> types) const {
  if (types.size() != num_nodes()) {
    throw DataError("node type list has " + std::to_string(types.size()) +
                    " entries, expected " + std::to_string(num_nodes()));
  }
  Hypergraph g = *this;
  g.node_type_ = std::move(types);
  return g;
}

std::vector<Index> Hypergraph::nodes_of_type(const std::string& type) const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < node_type_.size(); ++i) {
    if (node_type_[i] == type) out.push_back(static_cast<Index>(i));
  }
  return out;
}

SparseMatrix Hypergraph::incidence() const {
  std::vector<Triplet> t;
  t.reserve(num_incidences_);
  for (std::size_t j = 0; j < edge_members_.size(); ++j) {
    for (const Index i : edge_members_[j]) t.push_back({i, static_cast<Index>(j), 1.0});
  }
  return SparseMatrix::FromTriplets(num_nodes(), num_hyperedges(), std::move(t));
}

std::vector<double> node_degree_vector(const Hypergraph& g) {
  std::vector<double> d(g.num_nodes());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<double>(g.node_edges(i).size());
  return d;
}

std::vector<double> hyperedge_size_vector(const Hypergraph& g) {
  std::vector<double> de(g.num_hyperedges());
  for (std::size_t j = 0; j < de.size(); ++j) {
    de[j] = static_cast<double>(g.edge_members(j).size());
  }
  return de;
}

DegreeProfile degrees(const Hypergraph& g) {
  DegreeProfile p;
  p.node_degree = node_degree_vector(g);
  p.hyperedge_size = hyperedge_size_vector(g);
  p.neighbor_degree = node_adjacency(g).row_sums();
  return p;
}

SparseMatrix node_adjacency(const Hypergraph& g) {
  const SparseMatrix h = g.incidence();
  const SparseMatrix hht = multiply(h, h.transpose());
  return add(hht, SparseMatrix::Diagonal(node_degree_vector(g)), 1.0, -1.0);
}

SparseMatrix hyperedge_adjacency(const Hypergraph& g) {
  const SparseMatrix h = g.incidence();
  const SparseMatrix hth = multiply(h.transpose(), h);
  return add(hth, SparseMatrix::Diagonal(hyperedge_size_vector(g)), 1.0, -1.0);
}

std::vector<std::pair<Index, Index>> line_graph(const Hypergraph& g,
                                                std::span<const double> delta) {
  if (delta.size() != g.num_hyperedges()) {
    throw std::invalid_argument("line graph needs one threshold per hyperedge");
  }
  for (const double d : delta) {
    if (!(d > 0.0)) throw std::invalid_argument("line graph thresholds must be positive");
  }
  const SparseMatrix ae = hyperedge_adjacency(g);
  std::vector<std::pair<Index, Index>> edges;
  for (std::size_t j = 0; j < ae.rows(); ++j) {
    const auto cols = ae.row_indices(j);
    const auto vals = ae.row_values(j);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] <= j) continue;
      const double overlap = vals[k];
      if (overlap > delta[j] || overlap > delta[cols[k]]) {
        edges.emplace_back(static_cast<Index>(j), cols[k]);
      }
    }
  }
  return edges;
}

std::vector<double> pseudo_inverse(std::span<const double> values) {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = values[i] == 0.0 ? 0.0 : 1.0 / values[i];
  }
  return out;
}

TransitionMatrices transition_matrices(const Hypergraph& g, Diagnostics* diag) {
  const auto d = node_degree_vector(g);
  std::size_t isolated = 0;
  for (const double v : d) isolated += v == 0.0 ? 1 : 0;
  if (isolated > 0) {
    warn(diag, std::to_string(isolated) +
                   " isolated node(s): inverse degree set to 0, their rows and "
                   "columns of P are zero");
  }
  const auto d_inv = pseudo_inverse(d);
  const auto de_inv = pseudo_inverse(hyperedge_size_vector(g));
  const SparseMatrix h = g.incidence();
  const SparseMatrix ht = h.transpose();
  // P = H De^-1 H^T D^-1 and P_e = H^T D^-1 H De^-1.
  TransitionMatrices t;
  t.node = multiply(h.scaled({}, de_inv), ht.scaled({}, d_inv));
  t.hyperedge = multiply(ht.scaled({}, d_inv), h.scaled({}, de_inv));
  return t;
}

}  // namespace hnn
