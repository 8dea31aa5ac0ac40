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

#include "hnn/model.h"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace hnn {

Variant parse_variant(std::string_view name) {
  std::string n;
  for (const char c : name) {
    if (c == '-' || c == '_') continue;
    n.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (n == "base" || n == "hnn") return Variant::kBase;
  if (n == "p2" || n == "hnnp2") return Variant::kP2;
  if (n == "plusplus" || n == "++" || n == "hnn++") return Variant::kPlusPlus;
  if (n == "wt" || n == "hnnwt") return Variant::kWt;
  if (n == "h2" || n == "hnnh2") return Variant::kH2;
  throw ConfigError("unknown variant '" + std::string(name) + "'");
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::kBase: return "base";
    case Variant::kP2: return "p2";
    case Variant::kPlusPlus: return "plusplus";
    case Variant::kWt: return "wt";
    case Variant::kH2: return "h2";
  }
  return "unknown";
}

PropagationOperators build_operators(const Hypergraph& g, Variant variant,
                                     Diagnostics* diag) {
  const SparseMatrix h = g.incidence();
  const SparseMatrix ht = h.transpose();
  const auto d_inv = pseudo_inverse(node_degree_vector(g));
  const auto de_inv = pseudo_inverse(hyperedge_size_vector(g));
  const TransitionMatrices t = transition_matrices(g, diag);
  const SparseMatrix& p = t.node;
  const SparseMatrix& pe = t.hyperedge;

  const SparseMatrix dinv_h = h.scaled(d_inv, {});          // D^-1 H
  const SparseMatrix deinv_ht = ht.scaled(de_inv, {});      // De^-1 H^T
  const SparseMatrix deinv_ht_dinv = ht.scaled(de_inv, d_inv);  // De^-1 H^T D^-1
  const SparseMatrix dinv_h_deinv = h.scaled(d_inv, de_inv);    // D^-1 H De^-1

  PropagationOperators ops;
  ops.variant = variant;
  switch (variant) {
    case Variant::kBase:
      ops.s_v = multiply_chain({&dinv_h, &pe, &deinv_ht_dinv});
      ops.s_e = multiply_chain({&deinv_ht, &p, &dinv_h_deinv});
      ops.b_v = dinv_h;
      ops.b_e = deinv_ht;
      break;
    case Variant::kP2:
      ops.s_v = add(add(multiply(dinv_h, deinv_ht_dinv), p), multiply(p, p));
      ops.s_e = add(add(multiply(deinv_ht, dinv_h_deinv), pe), multiply(pe, pe));
      break;
    case Variant::kPlusPlus:
      ops.s_v = add(multiply_chain({&dinv_h, &pe, &deinv_ht_dinv}), p);
      ops.s_e = add(multiply_chain({&deinv_ht, &p, &dinv_h_deinv}), pe);
      break;
    case Variant::kWt: {
      const SparseMatrix ht_dinv = ht.scaled({}, d_inv);
      const SparseMatrix h_deinv = h.scaled({}, de_inv);
      ops.s_v = multiply_chain({&dinv_h, &pe, &ht_dinv});
      ops.s_e = multiply_chain({&deinv_ht, &p, &h_deinv});
      break;
    }
    case Variant::kH2:
      ops.s_v = add(multiply(h, ht), p);
      ops.s_e = add(multiply(ht, h), pe);
      break;
  }
  ops.s_v_t = ops.s_v.transpose();
  ops.s_e_t = ops.s_e.transpose();
  if (ops.b_v) ops.b_v_t = ops.b_v->transpose();
  if (ops.b_e) ops.b_e_t = ops.b_e->transpose();
  ops.node_context = dinv_h;
  ops.node_context_t = dinv_h.transpose();
  return ops;
}

std::size_t ModelParams::num_parameters() const {
  std::size_t n = static_cast<std::size_t>(psi.size());
  for (const auto& m : w) n += static_cast<std::size_t>(m.size());
  for (const auto& m : w_e) n += static_cast<std::size_t>(m.size());
  if (head) n += static_cast<std::size_t>(head->size());
  return n;
}

bool ModelParams::all_finite() const {
  const auto finite = [](const Matrix& m) { return m.allFinite(); };
  return finite(psi) && std::all_of(w.begin(), w.end(), finite) &&
         std::all_of(w_e.begin(), w_e.end(), finite) && (!head || finite(*head));
}

ModelShape ModelShape::Uniform(std::size_t node_in, std::size_t edge_in, std::size_t layers,
                               std::size_t hidden, std::size_t classes) {
  ModelShape s;
  s.node_widths.assign(layers + 1, hidden == 0 ? node_in : hidden);
  s.edge_widths.assign(layers + 1, hidden == 0 ? edge_in : hidden);
  s.node_widths[0] = node_in;
  s.edge_widths[0] = edge_in;
  s.classes = classes;
  return s;
}

void validate_shape(const ModelShape& shape, Variant variant) {
  if (shape.node_widths.size() < 2 || shape.node_widths.size() != shape.edge_widths.size()) {
    throw ConfigError("model needs at least one layer and matching width lists");
  }
  for (std::size_t k = 0; k < shape.node_widths.size(); ++k) {
    if (shape.node_widths[k] == 0 || shape.edge_widths[k] == 0) {
      throw ConfigError("layer widths must be positive");
    }
  }
  if (variant == Variant::kBase) {
    const std::size_t w0 = shape.node_widths[0];
    for (std::size_t k = 0; k < shape.node_widths.size(); ++k) {
      if (shape.node_widths[k] != w0 || shape.edge_widths[k] != w0) {
        throw ConfigError(
            "the base variant mixes node and hyperedge streams at every layer, so all "
            "widths must equal the input feature dimension " + std::to_string(w0));
      }
    }
  }
}

namespace {

Matrix glorot(std::size_t fan_in, std::size_t fan_out, std::mt19937_64& rng) {
  const double bound = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  std::uniform_real_distribution<double> u(-bound, bound);
  Matrix m(fan_in, fan_out);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = u(rng);
  return m;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DataError("dimension mismatch: " + what);
}

}  // namespace

ModelParams init_params(const ModelShape& shape, std::mt19937_64& rng) {
  ModelParams p;
  const std::size_t layers = shape.node_widths.size() - 1;
  for (std::size_t k = 0; k < layers; ++k) {
    p.w.push_back(glorot(shape.node_widths[k], shape.node_widths[k + 1], rng));
    p.w_e.push_back(glorot(shape.edge_widths[k], shape.edge_widths[k + 1], rng));
  }
  const std::size_t psi_in = shape.node_widths.back() + shape.edge_widths.back();
  const std::size_t psi_out = shape.psi_dim == 0 ? shape.node_widths.back() : shape.psi_dim;
  p.psi = glorot(psi_in, psi_out, rng);
  if (shape.classes > 0) p.head = glorot(shape.node_widths.back(), shape.classes, rng);
  return p;
}

InputAggregates aggregate_inputs(const PropagationOperators& ops, const Matrix& z0,
                                 const Matrix& y0) {
  require(static_cast<std::size_t>(z0.rows()) == ops.num_nodes(), "Z0 rows vs N");
  require(static_cast<std::size_t>(y0.rows()) == ops.num_hyperedges(), "Y0 rows vs M");
  InputAggregates in;
  in.node = ops.s_v.multiply(z0);
  if (ops.b_v) {
    require(z0.cols() == y0.cols(), "base variant needs equal Z0 and Y0 widths");
    ops.b_v->multiply_add(y0, in.node);
  }
  in.edge = ops.s_e.multiply(y0);
  return in;
}

EmbeddingState forward(const PropagationOperators& ops, const ModelParams& params,
                       const Matrix& z0, const Matrix& y0, const VariantKind& variant,
                       std::mt19937_64& rng, const ForwardOptions& options) {
  const std::size_t layers = params.layers();
  const bool base = ops.b_v.has_value();
  require(layers >= 1 && params.w_e.size() == layers, "layer count");
  require(static_cast<std::size_t>(z0.rows()) == ops.num_nodes(), "Z0 rows vs N");
  require(static_cast<std::size_t>(y0.rows()) == ops.num_hyperedges(), "Y0 rows vs M");
  Eigen::Index zw = z0.cols();
  Eigen::Index yw = y0.cols();
  for (std::size_t k = 0; k < layers; ++k) {
    require(params.w[k].rows() == zw, "W(" + std::to_string(k) + ") rows");
    if (base) {
      require(zw == yw, "Z and Y widths at layer " + std::to_string(k));
      require(params.w_e[k].rows() == params.w[k].cols(),
              "W_e(" + std::to_string(k) + ") rows vs W cols");
    } else {
      require(params.w_e[k].rows() == yw, "W_e(" + std::to_string(k) + ") rows");
    }
    zw = params.w[k].cols();
    yw = params.w_e[k].cols();
  }
  if (options.inputs != nullptr) {
    require(options.inputs->node.rows() == z0.rows() && options.inputs->node.cols() == z0.cols(),
            "cached node aggregate");
    require(options.inputs->edge.rows() == y0.rows() && options.inputs->edge.cols() == y0.cols(),
            "cached hyperedge aggregate");
  }

  EmbeddingState s;
  s.z.reserve(layers + 1);
  s.y.reserve(layers + 1);
  s.z.push_back(z0);
  s.y.push_back(y0);
  for (std::size_t k = 0; k < layers; ++k) {
    const bool first = k == 0 && options.inputs != nullptr;
    Matrix agg_z;
    if (first) {
      agg_z = options.inputs->node;
    } else {
      agg_z = ops.s_v.multiply(s.z[k]);
      if (base) ops.b_v->multiply_add(s.y[k], agg_z);
    }
    Matrix z_next, dz;
    apply_activation(variant.sigma_v, options.mode, agg_z * params.w[k], z_next, dz, rng);

    Matrix agg_y = first ? options.inputs->edge : ops.s_e.multiply(s.y[k]);
    if (base) ops.b_e->multiply_add(z_next, agg_y);
    Matrix y_next, dy;
    apply_activation(variant.sigma_e, options.mode, agg_y * params.w_e[k], y_next, dy, rng);

    s.z.push_back(std::move(z_next));
    s.y.push_back(std::move(y_next));
    if (options.keep_cache) {
      s.agg_z.push_back(std::move(agg_z));
      s.agg_y.push_back(std::move(agg_y));
      s.dact_z.push_back(std::move(dz));
      s.dact_y.push_back(std::move(dy));
    }
  }
  return s;
}

Vector hyperedge_dependent_embedding(const Vector& z_i, const Vector& y_e,
                                     const ModelParams& params,
                                     const Activation& activation) {
  if (z_i.size() + y_e.size() != params.psi.rows()) {
    throw DataError("dimension mismatch: [z ; y] has " +
                    std::to_string(z_i.size() + y_e.size()) + " entries, psi expects " +
                    std::to_string(params.psi.rows()));
  }
  Eigen::RowVectorXd concat(z_i.size() + y_e.size());
  concat << z_i.transpose(), y_e.transpose();
  Eigen::RowVectorXd pre = concat * params.psi;
  Vector out(pre.size());
  for (Eigen::Index t = 0; t < pre.size(); ++t) out(t) = activate_scalar(activation, pre(t));
  return out;
}

Matrix export_embedding_set(const Hypergraph& g, const EmbeddingState& state,
                            const ModelParams& params, const Activation& activation,
                            Index node) {
  if (node >= g.num_nodes()) throw DataError("node index out of range");
  const Matrix& z = state.z.back();
  const Matrix& y = state.y.back();
  const auto edges = g.node_edges(node);
  Matrix out(edges.size(), params.psi.cols());
  for (std::size_t r = 0; r < edges.size(); ++r) {
    out.row(r) = hyperedge_dependent_embedding(z.row(node).transpose(),
                                               y.row(edges[r]).transpose(), params,
                                               activation)
                     .transpose();
  }
  return out;
}

}  // namespace hnn
