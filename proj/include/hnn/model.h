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

#ifndef HNN_MODEL_H_
#define HNN_MODEL_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hnn/activation.h"
#include "hnn/common.h"
#include "hnn/hypergraph.h"
#include "hnn/sparse_matrix.h"

namespace hnn {

// Base couples the node and hyperedge streams; the other variants update
// each stream from its own previous layer only.
enum class Variant { kBase, kP2, kPlusPlus, kWt, kH2 };

Variant parse_variant(std::string_view name);
std::string variant_name(Variant v);

struct VariantKind {
  Variant tag = Variant::kBase;
  Activation sigma_v = Activation::Tanh();
  Activation sigma_e = Activation::Tanh();
};

struct PropagationOperators {
  Variant variant = Variant::kBase;
  SparseMatrix s_v, s_v_t;  // N x N, and its transpose
  SparseMatrix s_e, s_e_t;  // M x M
  // Cross-stream operators, Base only: B_v = D^-1 H, B_e = (H De^-1)^T.
  std::optional<SparseMatrix> b_v, b_v_t;
  std::optional<SparseMatrix> b_e, b_e_t;
  // D^-1 H: averages hyperedge rows onto their member nodes.
  SparseMatrix node_context, node_context_t;

  std::size_t num_nodes() const { return s_v.rows(); }
  std::size_t num_hyperedges() const { return s_e.rows(); }
};

PropagationOperators build_operators(const Hypergraph& g, Variant variant,
                                     Diagnostics* diag = nullptr);

struct ModelParams {
  std::vector<Matrix> w;    // node weights, layer k: width_z[k] x width_z[k+1]
  std::vector<Matrix> w_e;  // hyperedge weights, layer k: width_y[k] x width_y[k+1]
  Matrix psi;               // (width_z[L] + width_y[L]) x d
  std::optional<Matrix> head;  // width_z[L] x classes

  std::size_t layers() const { return w.size(); }
  std::size_t num_parameters() const;
  bool all_finite() const;
};

struct ModelShape {
  std::vector<std::size_t> node_widths;  // L + 1 entries, [0] = input dim
  std::vector<std::size_t> edge_widths;  // L + 1 entries, [0] = input dim
  std::size_t psi_dim = 0;               // 0 selects node_widths.back()
  std::size_t classes = 0;               // 0 means no classifier head

  // Uniform widths: every layer keeps `hidden` (0 keeps the input dims).
  static ModelShape Uniform(std::size_t node_in, std::size_t edge_in, std::size_t layers,
                            std::size_t hidden = 0, std::size_t classes = 0);
};

// Throws ConfigError when the shape cannot be used with the variant (Base
// needs matching node and hyperedge widths at every layer).
void validate_shape(const ModelShape& shape, Variant variant);

// Uniform in +-sqrt(6 / (fan_in + fan_out)).
ModelParams init_params(const ModelShape& shape, std::mt19937_64& rng);

struct EmbeddingState {
  std::vector<Matrix> z;  // L + 1 node embeddings, z[0] is the input
  std::vector<Matrix> y;  // L + 1 hyperedge embeddings
  // Aggregated layer inputs and activation derivatives, per layer.
  std::vector<Matrix> agg_z, agg_y;
  std::vector<Matrix> dact_z, dact_y;

  std::size_t layers() const { return z.empty() ? 0 : z.size() - 1; }
  bool has_cache() const { return !agg_z.empty(); }
};

// Layer-0 aggregates depend only on the inputs and can be reused across
// epochs: S_v Z0 (+ B_v Y0 for Base) and S_e Y0.
struct InputAggregates {
  Matrix node;
  Matrix edge;
};

InputAggregates aggregate_inputs(const PropagationOperators& ops, const Matrix& z0,
                                 const Matrix& y0);

struct ForwardOptions {
  Mode mode = Mode::kEval;
  bool keep_cache = true;
  const InputAggregates* inputs = nullptr;
};

// Dimension mismatches throw DataError before any compute.
EmbeddingState forward(const PropagationOperators& ops, const ModelParams& params,
                       const Matrix& z0, const Matrix& y0, const VariantKind& variant,
                       std::mt19937_64& rng, const ForwardOptions& options = {});

// psi([z_i ; y_e]) = sigma_v([z_i ; y_e] * psi), evaluated in eval mode.
Vector hyperedge_dependent_embedding(const Vector& z_i, const Vector& y_e,
                                     const ModelParams& params,
                                     const Activation& activation);

// One row per hyperedge containing the node, in hyperedge order.
Matrix export_embedding_set(const Hypergraph& g, const EmbeddingState& state,
                            const ModelParams& params, const Activation& activation,
                            Index node);

}  // namespace hnn

#endif  // HNN_MODEL_H_
