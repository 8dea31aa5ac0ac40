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


#ifndef HNN_CONFIG_H_
#define HNN_CONFIG_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hnn/trainer.h"

namespace hnn {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// Flat "key = value" text. '#' starts a comment; blank lines are skipped.
// Throws ConfigError naming the source and line on malformed rows.
KeyValues parse_key_values(std::string_view text, const std::string& source = "config");
KeyValues read_key_values(const std::string& path);

// Applies one training option. Returns false for keys that are not training
// options; throws ConfigError for bad values of known keys.
bool set_train_option(TrainConfig& cfg, const std::string& key, const std::string& value);

// Every training option as "key", "value" pairs. Feeding them back through
// set_train_option reproduces cfg exactly.
KeyValues train_config_entries(const TrainConfig& cfg);

std::string format_double(double v);
double parse_double(const std::string& key, const std::string& value);
std::size_t parse_size(const std::string& key, const std::string& value);
std::uint64_t parse_u64(const std::string& key, const std::string& value);
bool parse_bool(const std::string& key, const std::string& value);

}  // namespace hnn

#endif  // HNN_CONFIG_H_
