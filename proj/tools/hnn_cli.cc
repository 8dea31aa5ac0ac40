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

// Command-line front end: convert, train, sweep, embed, recommend, eval.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hnn/convert.h"
#include "hnn/experiment.h"
#include "hnn/parallel.h"

namespace {

using hnn::fs::path;

enum ExitCode { kOk = 0, kConfig = 1, kData = 2, kNumeric = 3 };

struct Globals {
  std::optional<std::uint64_t> seed;
  std::string config;
  std::string out;
  std::optional<std::size_t> threads;
  std::vector<std::string> sets;
};

struct Common {
  std::string dataset;
  std::string checkpoint;
  std::string task;
  std::optional<std::size_t> trials;
};

void print_warnings(const hnn::Diagnostics& diag) {
  for (const auto& w : diag.warnings()) std::cerr << "warning: " << w << '\n';
}

hnn::ExperimentSpec build_spec(const Globals& g, const Common& c) {
  hnn::ExperimentSpec spec;
  spec.threads = hnn::default_thread_count();
  if (!g.config.empty()) spec.apply(hnn::read_key_values(g.config));
  for (const auto& s : g.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw hnn::ConfigError("--set expects key=value, got '" + s + "'");
    spec.set(s.substr(0, eq), s.substr(eq + 1));
  }
  if (!c.dataset.empty()) spec.set("dataset", c.dataset);
  if (!c.task.empty()) spec.set("task", c.task);
  if (c.trials) spec.trials = *c.trials;
  if (g.seed) spec.config.seed = *g.seed;
  if (g.threads) spec.threads = *g.threads;
  if (!g.out.empty()) spec.out = g.out;
  return spec;
}

path output_dir(const hnn::ExperimentSpec& spec, const char* fallback) {
  const path base = spec.out.empty() ? path(fallback) : spec.out;
  const path dir = hnn::unique_path(base);
  if (dir != base) std::cerr << base.string() << " exists; writing to " << dir.string() << '\n';
  return dir;
}

std::vector<hnn::Index> parse_nodes(const std::string& text) {
  std::vector<hnn::Index> nodes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    nodes.push_back(static_cast<hnn::Index>(hnn::parse_u64("nodes", item)));
  }
  return nodes;
}

int cmd_convert(const Globals& g, const std::string& format, const std::string& input) {
  if (g.out.empty()) throw hnn::ConfigError("convert needs --out");
  const path out = hnn::unique_path(g.out);
  if (out != path(g.out)) std::cerr << g.out << " exists; writing to " << out.string() << '\n';
  const hnn::Manifest m = hnn::convert_dataset(hnn::parse_input_format(format), input, out);
  std::cout << "wrote " << out.string() << ": N=" << m.num_nodes << " M=" << m.num_hyperedges
            << " classes=" << m.num_classes << " features=" << m.num_features
            << " splits=" << m.num_splits << '\n';
  return kOk;
}

int cmd_train(const Globals& g, const Common& c) {
  hnn::ExperimentSpec spec = build_spec(g, c);
  spec.validate();
  const hnn::Dataset data = hnn::load_dataset(spec.paths);
  const path dir = output_dir(spec, "runs/train");
  hnn::Diagnostics diag;
  const hnn::ExperimentResult r = hnn::run_experiment(spec, data, std::nullopt, &diag);
  print_warnings(diag);
  hnn::write_experiment(dir, spec, r);
  if (r.diverged()) {
    std::cerr << "training diverged (" << r.diagnostic() << "); logs kept in " << dir.string()
              << '\n';
    return kNumeric;
  }
  const auto& m = r.report.metrics.front();
  std::cout << hnn::task_name(spec.task) << " " << m.label() << " " << hnn::format_double(m.mean)
            << " +- " << hnn::format_double(m.std) << " over " << r.report.trials()
            << " trials; outputs in " << dir.string() << '\n';
  return kOk;
}

int cmd_sweep(const Globals& g, const Common& c, const std::vector<std::string>& grid) {
  hnn::ExperimentSpec spec = build_spec(g, c);
  for (const auto& item : grid) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw hnn::ConfigError("--grid expects key=v1,v2,...");
    spec.set("grid." + item.substr(0, eq), item.substr(eq + 1));
  }
  spec.validate();
  if (spec.grid.empty()) throw hnn::ConfigError("empty sweep grid");
  const hnn::Dataset data = hnn::load_dataset(spec.paths);
  const path dir = output_dir(spec, "runs/sweep");
  hnn::Diagnostics diag;
  const auto cells = hnn::run_sweep(spec, data, dir, &diag);
  print_warnings(diag);
  std::ofstream csv(dir / "sweep.csv");
  hnn::write_sweep_csv(csv, spec, cells);
  hnn::write_sweep_csv(std::cout, spec, cells);
  std::size_t failed = 0;
  for (const auto& cell : cells) failed += cell.ok ? 0 : 1;
  if (failed > 0) std::cerr << failed << " of " << cells.size() << " cells failed\n";
  return kOk;
}

int cmd_embed(const Globals& g, const Common& c, const std::string& nodes) {
  if (c.checkpoint.empty()) throw hnn::ConfigError("embed needs --checkpoint");
  hnn::ExperimentSpec spec = build_spec(g, c);
  if (spec.paths.hyperedges.empty()) throw hnn::ConfigError("embed needs --dataset");
  const hnn::Checkpoint ck = hnn::load_checkpoint(c.checkpoint);
  const hnn::Dataset data = hnn::load_dataset(spec.paths);
  hnn::Diagnostics diag;
  if (g.out.empty()) {
    hnn::write_embeddings(std::cout, data, ck, parse_nodes(nodes), &diag);
  } else {
    const path out = hnn::unique_path(g.out);
    if (out != path(g.out)) std::cerr << g.out << " exists; writing to " << out.string() << '\n';
    std::ofstream f(out);
    if (!f) throw hnn::DataError("cannot create " + out.string());
    try {
      hnn::write_embeddings(f, data, ck, parse_nodes(nodes), &diag);
    } catch (...) {
      f.close();
      std::filesystem::remove(out);
      throw;
    }
  }
  print_warnings(diag);
  return kOk;
}

int cmd_recommend(const Globals& g, const Common& c, const std::string& fragment_type,
                  const std::string& candidate_type, std::optional<double> holdout) {
  hnn::ExperimentSpec spec = build_spec(g, c);
  if (!fragment_type.empty()) spec.fragment_type = fragment_type;
  if (!candidate_type.empty()) spec.candidate_type = candidate_type;
  if (holdout) spec.holdout_fraction = *holdout;
  spec.validate();
  const hnn::Dataset data = hnn::load_dataset(spec.paths);
  std::optional<hnn::Checkpoint> given;
  if (!c.checkpoint.empty()) given = hnn::load_checkpoint(c.checkpoint);
  hnn::Diagnostics diag;
  const hnn::RecommendationResult r =
      hnn::run_recommendation(spec, data, given ? &*given : nullptr, &diag);
  print_warnings(diag);
  const path dir = output_dir(spec, "runs/recommend");
  std::filesystem::create_directories(dir);
  for (std::size_t t = 0; t < r.checkpoints.size() && !given; ++t) {
    char name[32];
    std::snprintf(name, sizeof(name), "trial_%02zu.ckpt", t);
    hnn::save_checkpoint(dir / name, r.checkpoints[t]);
  }
  nlohmann::ordered_json j;
  j["heldout_links"] = r.heldout_links;
  j["reports"] = nlohmann::ordered_json::array();
  for (const auto* rep : {&r.hnn, &r.random, &r.popularity}) {
    j["reports"].push_back(nlohmann::ordered_json::parse(rep->to_json()));
  }
  std::ofstream(dir / "report.json") << j.dump(2) << '\n';
  std::cout << "method";
  for (const auto k : hnn::kRankingCutoffs) std::cout << "\thr@" << k << "\tndcg@" << k;
  std::cout << '\n';
  for (const auto* rep : {&r.hnn, &r.random, &r.popularity}) {
    std::cout << rep->method;
    for (const auto& m : rep->metrics) std::cout << '\t' << hnn::format_double(m.mean);
    std::cout << '\n';
  }
  std::cout << "outputs in " << dir.string() << '\n';
  return kOk;
}

int cmd_eval(const Globals& g, const Common& c) {
  if (c.checkpoint.empty()) throw hnn::ConfigError("eval needs --checkpoint");
  hnn::ExperimentSpec spec = build_spec(g, c);
  if (spec.paths.hyperedges.empty()) throw hnn::ConfigError("eval needs --dataset");
  const hnn::Checkpoint ck = hnn::load_checkpoint(c.checkpoint);
  const hnn::Dataset data = hnn::load_dataset(spec.paths);
  hnn::Diagnostics diag;
  const hnn::EvalReport rep = hnn::evaluate_checkpoint(ck, data, &diag);
  print_warnings(diag);
  if (g.out.empty()) {
    std::cout << rep.to_json() << '\n';
  } else {
    const path out = hnn::unique_path(g.out);
    std::ofstream(out) << rep.to_json() << '\n';
    std::cout << "wrote " << out.string() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph neural network trainer"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Base random seed");
  app.add_option("--config", g.config, "Flat key = value config file");
  app.add_option("--out", g.out, "Output path (never overwritten)");
  app.add_option("--threads", g.threads, "Worker threads (default: HNN_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--set", g.sets, "Extra option key=value (repeatable)");

  Common c;
  const auto add_common = [&](CLI::App* sub, bool with_ckpt) {
    sub->add_option("--dataset", c.dataset, "Dataset directory");
    sub->add_option("--task", c.task, "hyperedge-pred or node-class");
    sub->add_option("--trials", c.trials, "Number of seeded trials");
    if (with_ckpt) sub->add_option("--checkpoint", c.checkpoint, "Checkpoint file");
  };

  std::string format = "hypergcn", input;
  auto* convert = app.add_subcommand("convert", "Convert a dataset into the text layout");
  convert->add_option("--format", format, "hypergcn or text");
  convert->add_option("input", input, "Input directory")->required();

  auto* train = app.add_subcommand("train", "Train over seeded trials");
  add_common(train, false);

  std::vector<std::string> grid;
  auto* sweep = app.add_subcommand("sweep", "Cartesian sweep of training options");
  add_common(sweep, false);
  sweep->add_option("--grid", grid, "key=v1,v2,... (repeatable)");

  std::string nodes;
  auto* embed = app.add_subcommand("embed", "Dump hyperedge-dependent embeddings");
  add_common(embed, true);
  embed->add_option("--nodes", nodes, "Comma-separated node indices (default all)");

  std::string fragment_type, candidate_type;
  std::optional<double> holdout;
  auto* rec = app.add_subcommand("recommend", "Held-out-link ranking evaluation");
  add_common(rec, true);
  rec->add_option("--fragment-type", fragment_type, "Node type of the queries");
  rec->add_option("--candidate-type", candidate_type, "Node type to rank");
  rec->add_option("--holdout", holdout, "Fraction of links to hide");

  auto* eval = app.add_subcommand("eval", "Evaluate a checkpoint");
  add_common(eval, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*convert) return cmd_convert(g, format, input);
    if (*train) return cmd_train(g, c);
    if (*sweep) return cmd_sweep(g, c, grid);
    if (*embed) return cmd_embed(g, c, nodes);
    if (*rec) return cmd_recommend(g, c, fragment_type, candidate_type, holdout);
    if (*eval) return cmd_eval(g, c);
  } catch (const hnn::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const hnn::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kData;
  } catch (const hnn::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
  return kOk;
}
