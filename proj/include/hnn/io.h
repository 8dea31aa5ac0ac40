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


#ifndef HNN_IO_H_
#define HNN_IO_H_

#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hnn/config.h"
#include "hnn/hypergraph.h"
#include "hnn/model.h"
#include "hnn/trainer.h"

namespace hnn {

namespace fs = std::filesystem;

// Hyperedge file: one hyperedge per line, whitespace-separated node indices.
// An optional "#nodes N" line fixes the node count (otherwise max index + 1);
// other '#' lines are comments. A blank line is an empty hyperedge and is
// rejected.
Hypergraph parse_hypergraph(std::istream& in, const std::string& source);
Hypergraph read_hypergraph(const fs::path& path);
void write_hypergraph(std::ostream& out, const Hypergraph& g);

// "index<TAB>type" per node, every node exactly once.
std::vector<std::string> read_node_types(const fs::path& path, std::size_t num_nodes);
void write_node_types(std::ostream& out, const std::vector<std::string>& types);

// Dense matrix, one tab-separated row per line.
Matrix read_matrix_tsv(const fs::path& path, std::optional<std::size_t> rows = std::nullopt);
void write_matrix_tsv(std::ostream& out, const Matrix& m);

// "index<TAB>class" for labeled nodes; unlisted nodes get -1.
std::vector<int> read_labels(const fs::path& path, std::size_t num_nodes);
void write_labels(std::ostream& out, const std::vector<int>& labels);

struct NodeSplit {
  std::vector<Index> train;
  std::vector<Index> test;
};

// "index<TAB>train|test" per line.
NodeSplit read_node_split(const fs::path& path, std::size_t num_nodes);
void write_node_split(std::ostream& out, const NodeSplit& split);

struct DatasetPaths {
  fs::path hyperedges;
  fs::path features;    // empty when absent
  fs::path labels;
  fs::path node_types;
  fs::path splits_dir;

  // Standard layout: hyperedges.txt, features.tsv, labels.tsv,
  // node_types.tsv, splits/*.tsv. Missing optional files are left empty.
  static DatasetPaths FromDirectory(const fs::path& dir);
};

struct Dataset {
  Hypergraph graph;
  std::optional<Matrix> features;
  std::vector<int> labels;  // empty when unlabeled
  std::size_t num_classes = 0;
  std::vector<NodeSplit> splits;
};

struct Manifest {
  std::size_t num_nodes = 0;
  std::size_t num_hyperedges = 0;
  std::size_t num_classes = 0;
  std::size_t num_features = 0;
  std::size_t num_splits = 0;
  std::string source;
};

Dataset load_dataset(const DatasetPaths& paths);
Manifest manifest_of(const Dataset& d, const std::string& source);
Manifest read_manifest(const fs::path& path);

// Writes the standard layout plus manifest.json into a fresh directory.
// The directory is removed again if any write fails.
void write_dataset(const fs::path& dir, const Dataset& d, const std::string& source);

// `base` when it does not exist yet, else the first free base-1, base-2, ...
fs::path unique_path(const fs::path& base);

struct Checkpoint {
  Task task = Task::kHyperedgePrediction;
  TrainConfig config;
  ModelParams params;
  std::size_t num_nodes = 0;
  std::size_t num_hyperedges = 0;
  KeyValues extra;  // protocol settings, e.g. the link holdout
  // Bootstrapped input node features, kept so later runs see the same basis.
  std::optional<Matrix> node_features;
};

void save_checkpoint(const fs::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const fs::path& path);

}  // namespace hnn

#endif  // HNN_IO_H_
