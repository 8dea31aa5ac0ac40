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


#ifndef HNN_CONVERT_H_
#define HNN_CONVERT_H_

#include <filesystem>
#include <string>

#include "hnn/io.h"

namespace hnn {

enum class InputFormat { kHyperGcn, kText };

InputFormat parse_input_format(const std::string& name);

// Reads the pickled HyperGCN layout: hypergraph.pickle (dict of member
// lists), optional features.pickle (scipy CSR or dense array),
// labels.pickle (class per node) and splits/<n>.pickle (train/test lists).
Dataset read_hypergcn(const std::filesystem::path& dir);

// Reads `input` in the given format and writes the canonical layout into
// `output`, which must not exist. Nothing is left behind on failure.
Manifest convert_dataset(InputFormat format, const std::filesystem::path& input,
                         const std::filesystem::path& output);

}  // namespace hnn

#endif  // HNN_CONVERT_H_
