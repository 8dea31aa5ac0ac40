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

#include "hnn/convert.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "hnn/pickle.h"

namespace hnn {
namespace {

using pickle::Kind;
using pickle::Value;
using pickle::ValuePtr;

std::vector<std::int64_t> integers(const Value& v, const std::string& what) {
  std::vector<std::int64_t> out;
  switch (v.kind) {
    case Kind::kList:
    case Kind::kTuple:
    case Kind::kSet:
      for (const auto& item : v.items) out.push_back(item->integer());
      return out;
    case Kind::kArray:
      if (v.shape.size() > 1) throw DataError(what + ": expected a flat array");
      for (const double d : v.data) {
        if (d != std::floor(d)) throw DataError(what + ": non-integral entry");
        out.push_back(static_cast<std::int64_t>(d));
      }
      return out;
    default:
      throw DataError(what + ": expected a sequence, found " + pickle::describe(v.kind));
  }
}

const Value& field(const Value& obj, const std::string& key, const std::string& what) {
  const ValuePtr* v = obj.find(key);
  if (v == nullptr) throw DataError(what + ": missing field '" + key + "'");
  return **v;
}

Matrix features_from(const Value& v, const std::string& what) {
  if (v.kind == Kind::kArray) {
    if (v.shape.size() != 2) throw DataError(what + ": expected a 2-d array");
    Matrix m(v.shape[0], v.shape[1]);
    std::copy(v.data.begin(), v.data.end(), m.data());
    return m;
  }
  if (v.kind == Kind::kObject && v.cls && v.cls->s.find("csr_") != std::string::npos) {
    const ValuePtr* shape = v.find("_shape");
    if (shape == nullptr) shape = v.find("shape");
    if (shape == nullptr) throw DataError(what + ": sparse matrix without a shape");
    const auto dims = integers(**shape, what);
    if (dims.size() != 2 || dims[0] < 0 || dims[1] < 0) throw DataError(what + ": bad shape");
    const Value& data = field(v, "data", what);
    const auto indices = integers(field(v, "indices", what), what);
    const auto indptr = integers(field(v, "indptr", what), what);
    if (indptr.size() != static_cast<std::size_t>(dims[0]) + 1 ||
        data.data.size() != indices.size() ||
        indptr.back() != static_cast<std::int64_t>(indices.size())) {
      throw DataError(what + ": inconsistent CSR arrays");
    }
    Matrix m = Matrix::Zero(dims[0], dims[1]);
    for (std::int64_t r = 0; r < dims[0]; ++r) {
      for (std::int64_t k = indptr[r]; k < indptr[r + 1]; ++k) {
        if (indices[k] < 0 || indices[k] >= dims[1]) throw DataError(what + ": column out of range");
        m(r, indices[k]) += data.data[k];
      }
    }
    return m;
  }
  throw DataError(what + ": unsupported feature container " + pickle::describe(v.kind) +
                  (v.cls ? " (" + v.cls->s + ")" : ""));
}

std::vector<int> labels_from(const Value& v, const std::string& what) {
  const auto argmax_row = [&](const std::vector<double>& row) {
    return static_cast<int>(std::max_element(row.begin(), row.end()) - row.begin());
  };
  if (v.kind == Kind::kArray && v.shape.size() == 2) {
    std::vector<int> out;
    for (std::size_t r = 0; r < v.shape[0]; ++r) {
      out.push_back(argmax_row(std::vector<double>(v.data.begin() + r * v.shape[1],
                                                   v.data.begin() + (r + 1) * v.shape[1])));
    }
    return out;
  }
  if ((v.kind == Kind::kList || v.kind == Kind::kTuple) && !v.items.empty() &&
      (v.items[0]->kind == Kind::kList || v.items[0]->kind == Kind::kArray)) {
    std::vector<int> out;
    for (const auto& row : v.items) {
      std::vector<double> vals;
      if (row->kind == Kind::kArray) {
        vals = row->data;
      } else {
        for (const auto& x : row->items) vals.push_back(x->number());
      }
      if (vals.empty()) throw DataError(what + ": empty one-hot row");
      out.push_back(argmax_row(vals));
    }
    return out;
  }
  std::vector<int> out;
  for (const auto x : integers(v, what)) {
    if (x < 0) throw DataError(what + ": negative class");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

std::vector<Index> node_list(const Value& v, std::size_t n, const std::string& what) {
  std::vector<Index> out;
  for (const auto x : integers(v, what)) {
    if (x < 0 || static_cast<std::size_t>(x) >= n) {
      throw DataError(what + ": node " + std::to_string(x) + " out of range");
    }
    out.push_back(static_cast<Index>(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

InputFormat parse_input_format(const std::string& name) {
  const std::string n = lower(name);
  if (n == "hypergcn" || n == "pickle") return InputFormat::kHyperGcn;
  if (n == "text" || n == "hnn") return InputFormat::kText;
  throw ConfigError("unknown input format '" + name + "' (expected hypergcn or text)");
}

Dataset read_hypergcn(const fs::path& dir) {
  const fs::path hg_path = dir / "hypergraph.pickle";
  if (!fs::exists(hg_path)) throw DataError(hg_path.string() + " not found");
  const ValuePtr hg = pickle::load_file(hg_path);
  if (hg->kind != Kind::kDict) {
    throw DataError(hg_path.string() + ": expected a dict of hyperedges, found " +
                    pickle::describe(hg->kind));
  }
  if (hg->entries.empty()) throw DataError(hg_path.string() + ": no hyperedges");

  Dataset d;
  const fs::path feat_path = dir / "features.pickle";
  if (fs::exists(feat_path)) {
    d.features = features_from(*pickle::load_file(feat_path), feat_path.string());
  }
  const fs::path label_path = dir / "labels.pickle";
  if (fs::exists(label_path)) d.labels = labels_from(*pickle::load_file(label_path), label_path.string());

  std::vector<NodeSet> edges;
  std::int64_t max_node = -1;
  for (std::size_t j = 0; j < hg->entries.size(); ++j) {
    const std::string what = hg_path.string() + ": hyperedge " + std::to_string(j);
    NodeSet e;
    for (const auto x : integers(*hg->entries[j].second, what)) {
      if (x < 0) throw DataError(what + ": negative node index");
      max_node = std::max(max_node, x);
      e.push_back(static_cast<Index>(x));
    }
    if (e.empty()) throw DataError(what + " is empty");
    edges.push_back(std::move(e));
  }
  std::size_t n = static_cast<std::size_t>(max_node + 1);
  if (d.features) n = static_cast<std::size_t>(d.features->rows());
  if (!d.labels.empty()) {
    if (d.features && d.labels.size() != n) {
      throw DataError(label_path.string() + ": " + std::to_string(d.labels.size()) +
                      " labels for " + std::to_string(n) + " feature rows");
    }
    n = std::max(n, d.labels.size());
    d.labels.resize(n, -1);
    d.num_classes = static_cast<std::size_t>(*std::max_element(d.labels.begin(), d.labels.end())) + 1;
  }
  if (static_cast<std::int64_t>(n) <= max_node) {
    throw DataError(hg_path.string() + ": node " + std::to_string(max_node) + " exceeds the " +
                    std::to_string(n) + " feature rows");
  }
  d.graph = Hypergraph::Build(std::move(edges), n);

  const fs::path split_dir = dir / "splits";
  if (fs::is_directory(split_dir)) {
    std::vector<std::pair<long, fs::path>> files;
    for (const auto& entry : fs::directory_iterator(split_dir)) {
      if (entry.path().extension() != ".pickle") continue;
      const std::string stem = entry.path().stem().string();
      long key = 0;
      try {
        key = std::stol(stem);
      } catch (const std::exception&) {
        throw DataError(entry.path().string() + ": split files must be numbered");
      }
      files.emplace_back(key, entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& [key, path] : files) {
      const ValuePtr s = pickle::load_file(path);
      if (s->kind != Kind::kDict) throw DataError(path.string() + ": expected a dict");
      NodeSplit split;
      split.train = node_list(field(*s, "train", path.string()), n, path.string());
      split.test = node_list(field(*s, "test", path.string()), n, path.string());
      if (split.train.empty() || split.test.empty()) {
        throw DataError(path.string() + ": split needs both train and test nodes");
      }
      d.splits.push_back(std::move(split));
    }
  }
  return d;
}

Manifest convert_dataset(InputFormat format, const fs::path& input, const fs::path& output) {
  Dataset d = format == InputFormat::kHyperGcn
                  ? read_hypergcn(input)
                  : load_dataset(DatasetPaths::FromDirectory(input));
  const std::string source = (format == InputFormat::kHyperGcn ? "hypergcn:" : "text:") +
                             fs::absolute(input).lexically_normal().string();
  write_dataset(output, d, source);
  return manifest_of(d, source);
}

}  // namespace hnn
