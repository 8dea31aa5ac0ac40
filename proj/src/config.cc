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

#include "hnn/config.h"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hnn {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string canonical_key(std::string key) {
  for (char& c : key) {
    if (c == '-') c = '_';
  }
  return key;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

double parse_double(const std::string& key, const std::string& value) {
  double v = 0.0;
  const auto r = std::from_chars(value.data(), value.data() + value.size(), v);
  if (r.ec != std::errc() || r.ptr != value.data() + value.size()) {
    throw ConfigError("option " + key + ": '" + value + "' is not a number");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  const auto r = std::from_chars(value.data(), value.data() + value.size(), v);
  if (r.ec != std::errc() || r.ptr != value.data() + value.size()) {
    throw ConfigError("option " + key + ": '" + value + "' is not a non-negative integer");
  }
  return v;
}

std::size_t parse_size(const std::string& key, const std::string& value) {
  return static_cast<std::size_t>(parse_u64(key, value));
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ConfigError("option " + key + ": '" + value + "' is not a boolean");
}

KeyValues parse_key_values(std::string_view text, const std::string& source) {
  KeyValues out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(source + ":" + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = canonical_key(trim(std::string_view(body).substr(0, eq)));
    std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(source + ":" + std::to_string(line_no) + ": empty key");
    }
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

KeyValues read_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_key_values(ss.str(), path);
}

bool set_train_option(TrainConfig& cfg, const std::string& raw_key, const std::string& value) {
  const std::string key = canonical_key(raw_key);
  if (key == "variant") {
    cfg.variant.tag = parse_variant(value);
  } else if (key == "sigma") {
    cfg.variant.sigma_v = cfg.variant.sigma_e = Activation::Parse(value);
  } else if (key == "sigma_v") {
    cfg.variant.sigma_v = Activation::Parse(value);
  } else if (key == "sigma_e") {
    cfg.variant.sigma_e = Activation::Parse(value);
  } else if (key == "layers") {
    cfg.layers = parse_size(key, value);
  } else if (key == "hidden") {
    cfg.hidden = parse_size(key, value);
  } else if (key == "lr") {
    cfg.lr = parse_double(key, value);
  } else if (key == "epochs") {
    cfg.epochs = parse_size(key, value);
  } else if (key == "optimizer") {
    cfg.optimizer = parse_optimizer(value);
  } else if (key == "split_fraction" || key == "p") {
    cfg.split_fraction = parse_double(key, value);
  } else if (key == "alpha") {
    cfg.alpha = parse_double(key, value);
  } else if (key == "score") {
    cfg.scoring.function = parse_score_function(value);
  } else if (key == "cosine") {
    cfg.scoring.cosine = parse_bool(key, value);
  } else if (key == "score_embedding") {
    cfg.scoring.embedding = parse_score_embedding(value);
  } else if (key == "seed") {
    cfg.seed = parse_u64(key, value);
  } else if (key == "feature_rank") {
    cfg.feature_rank = parse_size(key, value);
  } else if (key == "use_given_features") {
    cfg.use_given_features = parse_bool(key, value);
  } else if (key == "edge_features") {
    if (value == "aggregate") {
      cfg.edge_features = HyperedgeFeatureMode::kAggregate;
    } else if (value == "svd") {
      cfg.edge_features = HyperedgeFeatureMode::kSvd;
    } else {
      throw ConfigError("option edge_features: expected aggregate or svd, got '" + value + "'");
    }
  } else if (key == "eval_every") {
    cfg.eval_every = parse_size(key, value);
  } else if (key == "resample_negatives") {
    cfg.resample_negatives = parse_bool(key, value);
  } else {
    return false;
  }
  return true;
}

KeyValues train_config_entries(const TrainConfig& cfg) {
  return {
      {"variant", variant_name(cfg.variant.tag)},
      {"sigma_v", cfg.variant.sigma_v.name()},
      {"sigma_e", cfg.variant.sigma_e.name()},
      {"layers", std::to_string(cfg.layers)},
      {"hidden", std::to_string(cfg.hidden)},
      {"lr", format_double(cfg.lr)},
      {"epochs", std::to_string(cfg.epochs)},
      {"optimizer", optimizer_name(cfg.optimizer)},
      {"split_fraction", format_double(cfg.split_fraction)},
      {"alpha", format_double(cfg.alpha)},
      {"score", score_function_name(cfg.scoring.function)},
      {"cosine", cfg.scoring.cosine ? "true" : "false"},
      {"score_embedding", score_embedding_name(cfg.scoring.embedding)},
      {"seed", std::to_string(cfg.seed)},
      {"feature_rank", std::to_string(cfg.feature_rank)},
      {"use_given_features", cfg.use_given_features ? "true" : "false"},
      {"edge_features",
       cfg.edge_features == HyperedgeFeatureMode::kSvd ? "svd" : "aggregate"},
      {"eval_every", std::to_string(cfg.eval_every)},
      {"resample_negatives", cfg.resample_negatives ? "true" : "false"},
  };
}

}  // namespace hnn
