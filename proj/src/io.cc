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

#include "hnn/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "hnn/config.h"

namespace hnn {
namespace {

constexpr char kMagic[8] = {'H', 'N', 'N', 'C', 'K', 'P', 'T', '\0'};
constexpr std::uint32_t kCheckpointVersion = 1;

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& msg) {
  throw DataError(source + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t b = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > b) out.push_back(line.substr(b, i - b));
  }
  return out;
}

bool blank(std::string_view line) { return tokens(line).empty(); }

template <typename T>
bool parse_number(std::string_view s, T& v) {
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  return r.ec == std::errc() && r.ptr == s.data() + s.size();
}

Index parse_index(std::string_view s, const std::string& source, std::size_t line) {
  std::uint64_t v = 0;
  if (!parse_number(s, v) || v > std::numeric_limits<Index>::max()) {
    fail(source, line, "'" + std::string(s) + "' is not a node index");
  }
  return static_cast<Index>(v);
}

std::ifstream open_in(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot create " + path.string());
  return out;
}

void close_checked(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw DataError("write failed for " + path.string());
}

Index checked_node(std::string_view s, std::size_t n, const std::string& source,
                   std::size_t line) {
  const Index i = parse_index(s, source, line);
  if (i >= n) {
    fail(source, line, "node " + std::to_string(i) + " out of range for " + std::to_string(n) +
                           " nodes");
  }
  return i;
}

template <typename T>
void write_pod(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::istream& in, const std::string& source) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw DataError(source + ": truncated checkpoint");
  return v;
}

}  // namespace

Hypergraph parse_hypergraph(std::istream& in, const std::string& source) {
  std::vector<NodeSet> edges;
  std::optional<std::size_t> declared;
  std::size_t max_node = 0;
  bool any = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') {
      const auto t = tokens(line);
      if (t.size() == 2 && t[0] == "#nodes") {
        std::uint64_t n = 0;
        if (!parse_number(t[1], n)) fail(source, line_no, "bad node count");
        declared = static_cast<std::size_t>(n);
      }
      continue;
    }
    const auto t = tokens(line);
    if (t.empty()) fail(source, line_no, "empty hyperedge");
    NodeSet e;
    e.reserve(t.size());
    for (const auto tok : t) {
      const Index i = parse_index(tok, source, line_no);
      if (declared && i >= *declared) {
        fail(source, line_no, "node " + std::to_string(i) + " exceeds the declared count");
      }
      max_node = std::max<std::size_t>(max_node, i);
      any = true;
      e.push_back(i);
    }
    edges.push_back(std::move(e));
  }
  if (edges.empty()) throw DataError(source + ": no hyperedges");
  const std::size_t n = declared ? *declared : (any ? max_node + 1 : 0);
  return Hypergraph::Build(std::move(edges), n);
}

Hypergraph read_hypergraph(const fs::path& path) {
  auto in = open_in(path);
  return parse_hypergraph(in, path.string());
}

void write_hypergraph(std::ostream& out, const Hypergraph& g) {
  out << "#nodes " << g.num_nodes() << '\n';
  for (const auto& e : g.hyperedges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

std::vector<std::string> read_node_types(const fs::path& path, std::size_t num_nodes) {
  auto in = open_in(path);
  const std::string source = path.string();
  std::vector<std::string> types(num_nodes);
  std::vector<bool> seen(num_nodes, false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line) || line[0] == '#') continue;
    const auto t = tokens(line);
    if (t.size() != 2) fail(source, line_no, "expected index and type");
    const Index i = checked_node(t[0], num_nodes, source, line_no);
    if (seen[i]) fail(source, line_no, "node " + std::to_string(i) + " typed twice");
    seen[i] = true;
    types[i] = std::string(t[1]);
  }
  for (std::size_t i = 0; i < num_nodes; ++i) {
    if (!seen[i]) throw DataError(source + ": node " + std::to_string(i) + " has no type");
  }
  return types;
}

void write_node_types(std::ostream& out, const std::vector<std::string>& types) {
  for (std::size_t i = 0; i < types.size(); ++i) out << i << '\t' << types[i] << '\n';
}

Matrix read_matrix_tsv(const fs::path& path, std::optional<std::size_t> rows) {
  auto in = open_in(path);
  const std::string source = path.string();
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t n = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line) || line[0] == '#') continue;
    const auto t = tokens(line);
    if (n == 0) cols = t.size();
    if (t.size() != cols) {
      fail(source, line_no, "expected " + std::to_string(cols) + " columns, found " +
                                std::to_string(t.size()));
    }
    for (const auto tok : t) {
      double v = 0.0;
      if (!parse_number(tok, v)) fail(source, line_no, "'" + std::string(tok) + "' is not a number");
      if (!std::isfinite(v)) fail(source, line_no, "non-finite value");
      values.push_back(v);
    }
    ++n;
  }
  if (n == 0) throw DataError(source + ": empty matrix");
  if (rows && n != *rows) {
    throw DataError(source + ": expected " + std::to_string(*rows) + " rows, found " +
                    std::to_string(n));
  }
  Matrix m(n, cols);
  std::copy(values.begin(), values.end(), m.data());
  return m;
}

void write_matrix_tsv(std::ostream& out, const Matrix& m) {
  std::string line;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    line.clear();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) line.push_back('\t');
      line += format_double(m(r, c));
    }
    line.push_back('\n');
    out << line;
  }
}

std::vector<int> read_labels(const fs::path& path, std::size_t num_nodes) {
  auto in = open_in(path);
  const std::string source = path.string();
  std::vector<int> labels(num_nodes, -1);
  std::string line;
  std::size_t line_no = 0;
  bool any = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line) || line[0] == '#') continue;
    const auto t = tokens(line);
    if (t.size() != 2) fail(source, line_no, "expected index and class");
    const Index i = checked_node(t[0], num_nodes, source, line_no);
    int c = 0;
    if (!parse_number(t[1], c) || c < 0) fail(source, line_no, "bad class '" + std::string(t[1]) + "'");
    if (labels[i] != -1) fail(source, line_no, "node " + std::to_string(i) + " labeled twice");
    labels[i] = c;
    any = true;
  }
  if (!any) throw DataError(source + ": no labels");
  return labels;
}

void write_labels(std::ostream& out, const std::vector<int>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= 0) out << i << '\t' << labels[i] << '\n';
  }
}

NodeSplit read_node_split(const fs::path& path, std::size_t num_nodes) {
  auto in = open_in(path);
  const std::string source = path.string();
  NodeSplit split;
  std::vector<bool> seen(num_nodes, false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line) || line[0] == '#') continue;
    const auto t = tokens(line);
    if (t.size() != 2) fail(source, line_no, "expected index and train|test");
    const Index i = checked_node(t[0], num_nodes, source, line_no);
    if (seen[i]) fail(source, line_no, "node " + std::to_string(i) + " listed twice");
    seen[i] = true;
    if (t[1] == "train") {
      split.train.push_back(i);
    } else if (t[1] == "test") {
      split.test.push_back(i);
    } else {
      fail(source, line_no, "expected train or test, got '" + std::string(t[1]) + "'");
    }
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  if (split.train.empty() || split.test.empty()) {
    throw DataError(source + ": split needs both train and test nodes");
  }
  return split;
}

void write_node_split(std::ostream& out, const NodeSplit& split) {
  for (const Index i : split.train) out << i << "\ttrain\n";
  for (const Index i : split.test) out << i << "\ttest\n";
}

DatasetPaths DatasetPaths::FromDirectory(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw DataError("dataset directory " + dir.string() + " not found");
  DatasetPaths p;
  p.hyperedges = dir / "hyperedges.txt";
  if (!fs::exists(p.hyperedges)) throw DataError(p.hyperedges.string() + " not found");
  const auto opt = [&](const char* name) {
    const fs::path f = dir / name;
    return fs::exists(f) ? f : fs::path();
  };
  p.features = opt("features.tsv");
  p.labels = opt("labels.tsv");
  p.node_types = opt("node_types.tsv");
  p.splits_dir = opt("splits");
  return p;
}

Dataset load_dataset(const DatasetPaths& paths) {
  Dataset d;
  d.graph = read_hypergraph(paths.hyperedges);
  const std::size_t n = d.graph.num_nodes();
  if (!paths.node_types.empty()) {
    d.graph = d.graph.with_node_types(read_node_types(paths.node_types, n));
  }
  if (!paths.features.empty()) d.features = read_matrix_tsv(paths.features, n);
  if (!paths.labels.empty()) {
    d.labels = read_labels(paths.labels, n);
    d.num_classes = static_cast<std::size_t>(*std::max_element(d.labels.begin(), d.labels.end())) + 1;
  }
  if (!paths.splits_dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(paths.splits_dir)) {
      if (entry.path().extension() == ".tsv") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) d.splits.push_back(read_node_split(f, n));
  }
  return d;
}

Manifest manifest_of(const Dataset& d, const std::string& source) {
  Manifest m;
  m.num_nodes = d.graph.num_nodes();
  m.num_hyperedges = d.graph.num_hyperedges();
  m.num_classes = d.num_classes;
  m.num_features = d.features ? static_cast<std::size_t>(d.features->cols()) : 0;
  m.num_splits = d.splits.size();
  m.source = source;
  return m;
}

Manifest read_manifest(const fs::path& path) {
  auto in = open_in(path);
  try {
    const auto j = nlohmann::json::parse(in);
    Manifest m;
    m.num_nodes = j.at("num_nodes").get<std::size_t>();
    m.num_hyperedges = j.at("num_hyperedges").get<std::size_t>();
    m.num_classes = j.at("num_classes").get<std::size_t>();
    m.num_features = j.at("num_features").get<std::size_t>();
    m.num_splits = j.value("num_splits", std::size_t{0});
    m.source = j.value("source", std::string());
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path.string() + ": malformed manifest: " + e.what());
  }
}

void write_dataset(const fs::path& dir, const Dataset& d, const std::string& source) {
  if (fs::exists(dir)) throw DataError("refusing to overwrite " + dir.string());
  fs::create_directories(dir);
  try {
    const auto write = [&](const fs::path& path, const auto& body) {
      auto out = open_out(path);
      body(out);
      close_checked(out, path);
    };
    write(dir / "hyperedges.txt", [&](std::ostream& o) { write_hypergraph(o, d.graph); });
    if (d.graph.has_node_types()) {
      write(dir / "node_types.tsv",
            [&](std::ostream& o) { write_node_types(o, d.graph.node_types()); });
    }
    if (d.features) {
      write(dir / "features.tsv", [&](std::ostream& o) { write_matrix_tsv(o, *d.features); });
    }
    if (!d.labels.empty()) {
      write(dir / "labels.tsv", [&](std::ostream& o) { write_labels(o, d.labels); });
    }
    if (!d.splits.empty()) {
      fs::create_directories(dir / "splits");
      for (std::size_t s = 0; s < d.splits.size(); ++s) {
        char name[32];
        std::snprintf(name, sizeof(name), "split_%02zu.tsv", s);
        write(dir / "splits" / name, [&](std::ostream& o) { write_node_split(o, d.splits[s]); });
      }
    }
    const Manifest m = manifest_of(d, source);
    nlohmann::ordered_json j;
    j["num_nodes"] = m.num_nodes;
    j["num_hyperedges"] = m.num_hyperedges;
    j["num_classes"] = m.num_classes;
    j["num_features"] = m.num_features;
    j["num_splits"] = m.num_splits;
    j["num_incidences"] = d.graph.num_incidences();
    j["source"] = m.source;
    write(dir / "manifest.json", [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  } catch (...) {
    std::error_code ec;
    fs::remove_all(dir, ec);
    throw;
  }
}

fs::path unique_path(const fs::path& base) {
  if (!fs::exists(base)) return base;
  for (std::size_t i = 1;; ++i) {
    fs::path p = base;
    p += "-" + std::to_string(i);
    if (!fs::exists(p)) return p;
  }
}

void save_checkpoint(const fs::path& path, const Checkpoint& ckpt) {
  nlohmann::ordered_json meta;
  meta["task"] = task_name(ckpt.task);
  meta["num_nodes"] = ckpt.num_nodes;
  meta["num_hyperedges"] = ckpt.num_hyperedges;
  meta["layers"] = ckpt.params.layers();
  meta["has_head"] = ckpt.params.head.has_value();
  meta["has_node_features"] = ckpt.node_features.has_value();
  nlohmann::ordered_json cfg;
  for (const auto& [k, v] : train_config_entries(ckpt.config)) cfg[k] = v;
  meta["config"] = std::move(cfg);
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
  for (const auto& [k, v] : ckpt.extra) extra[k] = v;
  meta["extra"] = std::move(extra);
  const std::string text = meta.dump();

  std::vector<const Matrix*> mats;
  for (const auto& m : ckpt.params.w) mats.push_back(&m);
  for (const auto& m : ckpt.params.w_e) mats.push_back(&m);
  mats.push_back(&ckpt.params.psi);
  if (ckpt.params.head) mats.push_back(&*ckpt.params.head);
  if (ckpt.node_features) mats.push_back(&*ckpt.node_features);

  auto out = open_out(path);
  out.write(kMagic, sizeof(kMagic));
  write_pod(out, kCheckpointVersion);
  write_pod(out, static_cast<std::uint64_t>(text.size()));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  write_pod(out, static_cast<std::uint32_t>(mats.size()));
  for (const Matrix* m : mats) {
    write_pod(out, static_cast<std::uint64_t>(m->rows()));
    write_pod(out, static_cast<std::uint64_t>(m->cols()));
    out.write(reinterpret_cast<const char*>(m->data()),
              static_cast<std::streamsize>(sizeof(double) * m->size()));
  }
  close_checked(out, path);
}

Checkpoint load_checkpoint(const fs::path& path) {
  auto in = open_in(path);
  const std::string source = path.string();
  char magic[sizeof(kMagic)];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw DataError(source + ": not a checkpoint");
  }
  if (read_pod<std::uint32_t>(in, source) != kCheckpointVersion) {
    throw DataError(source + ": unsupported checkpoint version");
  }
  const auto len = read_pod<std::uint64_t>(in, source);
  if (len > (1u << 24)) throw DataError(source + ": corrupt metadata length");
  std::string text(len, '\0');
  in.read(text.data(), static_cast<std::streamsize>(len));
  if (!in) throw DataError(source + ": truncated checkpoint");

  Checkpoint ck;
  std::size_t layers = 0;
  bool has_head = false;
  bool has_features = false;
  try {
    const auto meta = nlohmann::ordered_json::parse(text);
    ck.task = parse_task(meta.at("task").get<std::string>());
    ck.num_nodes = meta.at("num_nodes").get<std::size_t>();
    ck.num_hyperedges = meta.at("num_hyperedges").get<std::size_t>();
    layers = meta.at("layers").get<std::size_t>();
    has_head = meta.at("has_head").get<bool>();
    has_features = meta.value("has_node_features", false);
    for (const auto& [k, v] : meta.at("config").items()) {
      if (!set_train_option(ck.config, k, v.get<std::string>())) {
        throw DataError(source + ": unknown config key " + k);
      }
    }
    if (meta.contains("extra")) {
      for (const auto& [k, v] : meta.at("extra").items()) {
        ck.extra.emplace_back(k, v.get<std::string>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(source + ": malformed metadata: " + e.what());
  } catch (const ConfigError& e) {
    throw DataError(source + ": " + e.what());
  }

  const auto count = read_pod<std::uint32_t>(in, source);
  if (count != 2 * layers + 1 + (has_head ? 1 : 0) + (has_features ? 1 : 0)) {
    throw DataError(source + ": matrix count does not match the layer count");
  }
  std::vector<Matrix> mats;
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto rows = read_pod<std::uint64_t>(in, source);
    const auto cols = read_pod<std::uint64_t>(in, source);
    if (rows > (1u << 26) || cols > (1u << 26) || rows * cols > (1ull << 32)) throw DataError(source + ": corrupt matrix shape");
    Matrix m(rows, cols);
    in.read(reinterpret_cast<char*>(m.data()),
            static_cast<std::streamsize>(sizeof(double) * m.size()));
    if (!in) throw DataError(source + ": truncated checkpoint");
    mats.push_back(std::move(m));
  }
  std::size_t at = 0;
  for (std::size_t k = 0; k < layers; ++k) ck.params.w.push_back(std::move(mats[at++]));
  for (std::size_t k = 0; k < layers; ++k) ck.params.w_e.push_back(std::move(mats[at++]));
  ck.params.psi = std::move(mats[at++]);
  if (has_head) ck.params.head = std::move(mats[at++]);
  if (has_features) ck.node_features = std::move(mats[at++]);
  return ck;
}

}  // namespace hnn
