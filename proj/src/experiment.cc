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

#include "hnn/experiment.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hnn/metrics.h"
#include "hnn/parallel.h"
#include "hnn/recommend.h"
#include "hnn/split.h"

namespace hnn {
namespace {

constexpr std::uint64_t kNodeSplitStream = 0xd6e8feb86659fd93ull;
constexpr std::uint64_t kHoldoutStream = 0xa0761d6478bd642full;
constexpr std::uint64_t kBaselineStream = 0xe7037ed1a0b428dbull;

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

// Seeded fallback when the dataset carries no predefined node splits.
NodeSplit random_node_split(const std::vector<int>& labels, double train_fraction,
                            std::uint64_t seed) {
  std::vector<Index> labeled;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= 0) labeled.push_back(static_cast<Index>(i));
  }
  if (labeled.size() < 2) throw DataError("need at least two labeled nodes");
  std::mt19937_64 rng(seed ^ kNodeSplitStream);
  std::shuffle(labeled.begin(), labeled.end(), rng);
  std::size_t n_train = train_count(labeled.size(), train_fraction);
  n_train = std::clamp<std::size_t>(n_train, 1, labeled.size() - 1);
  NodeSplit s;
  s.train.assign(labeled.begin(), labeled.begin() + static_cast<std::ptrdiff_t>(n_train));
  s.test.assign(labeled.begin() + static_cast<std::ptrdiff_t>(n_train), labeled.end());
  std::sort(s.train.begin(), s.train.end());
  std::sort(s.test.begin(), s.test.end());
  return s;
}

NodeTask node_task_for(const Dataset& data, const TrainConfig& cfg, std::size_t trial,
                       std::size_t* split_index) {
  if (data.labels.empty()) throw DataError("node classification needs labels");
  NodeTask task;
  task.graph = data.graph;
  task.labels = data.labels;
  task.classes = data.num_classes;
  task.node_features = data.features;
  NodeSplit split;
  if (!data.splits.empty()) {
    *split_index = trial % data.splits.size();
    split = data.splits[*split_index];
  } else {
    split = random_node_split(data.labels, cfg.split_fraction, cfg.seed);
  }
  const auto labeled = [&](const std::vector<Index>& nodes) {
    std::vector<Index> out;
    for (const Index i : nodes) {
      if (task.labels[i] >= 0) out.push_back(i);
    }
    return out;
  };
  task.train_nodes = labeled(split.train);
  task.test_nodes = labeled(split.test);
  return task;
}

Matrix final_node_embeddings(const ModelContext& ctx, const ModelParams& params) {
  ForwardOptions fo;
  fo.mode = Mode::kEval;
  fo.keep_cache = false;
  fo.inputs = &ctx.inputs;
  std::mt19937_64 unused(0);
  return forward(ctx.ops, params, ctx.z0, ctx.y0, ctx.variant, unused, fo).z.back();
}

void check_fits(const ModelContext& ctx, const ModelParams& params, std::size_t classes_needed) {
  const auto shape_text = [](const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
  };
  bool ok = params.layers() > 0 && params.w[0].rows() == ctx.z0.cols() &&
            params.w_e[0].rows() == ctx.y0.cols();
  if (classes_needed > 0) ok = ok && params.head && params.head->cols() >= static_cast<Eigen::Index>(classes_needed);
  if (!ok) {
    std::string ck = "checkpoint shapes:";
    for (const auto& w : params.w) ck += " W " + shape_text(w);
    for (const auto& w : params.w_e) ck += " W_e " + shape_text(w);
    ck += " psi " + shape_text(params.psi);
    if (params.head) ck += " head " + shape_text(*params.head);
    throw DataError("checkpoint does not fit the dataset; " + ck +
                    "; dataset shapes: node features " + shape_text(ctx.z0) +
                    " hyperedge features " + shape_text(ctx.y0) +
                    (classes_needed ? " classes " + std::to_string(classes_needed) : ""));
  }
}

bool bootstrapped(const TrainConfig& cfg, const Dataset& data) {
  return !(cfg.use_given_features && data.features);
}

// Context for a checkpoint: its stored input features when present.
ModelContext checkpoint_context(const Hypergraph& g, const Checkpoint& ck, const Dataset& data,
                                Diagnostics* diag) {
  if (!ck.node_features) return prepare_context(g, ck.config, data.features, std::nullopt, diag);
  if (static_cast<std::size_t>(ck.node_features->rows()) != g.num_nodes()) {
    throw DataError("checkpoint holds features for " + std::to_string(ck.node_features->rows()) +
                    " nodes, dataset has " + std::to_string(g.num_nodes()));
  }
  TrainConfig cfg = ck.config;
  cfg.use_given_features = true;
  return prepare_context(g, cfg, ck.node_features, std::nullopt, diag);
}

std::string extra_value(const Checkpoint& ck, const std::string& key) {
  for (const auto& [k, v] : ck.extra) {
    if (k == key) return v;
  }
  return {};
}

}  // namespace

void ExperimentSpec::set(const std::string& raw_key, const std::string& value) {
  std::string key = raw_key;
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "dataset") {
    paths = DatasetPaths::FromDirectory(value);
  } else if (key == "hyperedges") {
    paths.hyperedges = value;
  } else if (key == "features") {
    paths.features = value;
  } else if (key == "labels") {
    paths.labels = value;
  } else if (key == "node_types") {
    paths.node_types = value;
  } else if (key == "splits") {
    paths.splits_dir = value;
  } else if (key == "task") {
    task = parse_task(value);
  } else if (key == "trials") {
    trials = parse_size(key, value);
  } else if (key == "out") {
    out = value;
  } else if (key == "threads") {
    threads = parse_size(key, value);
  } else if (key == "checkpoint_every") {
    checkpoint_every = parse_size(key, value);
  } else if (key == "fragment_type") {
    fragment_type = value;
  } else if (key == "candidate_type") {
    candidate_type = value;
  } else if (key == "holdout_fraction") {
    holdout_fraction = parse_double(key, value);
  } else if (key.rfind("grid.", 0) == 0) {
    const std::string target = key.substr(5);
    const auto values = split_list(value);
    if (values.empty()) throw ConfigError("grid." + target + " lists no values");
    // Validate every value up front so a typo fails before any compute.
    for (const auto& v : values) {
      TrainConfig probe = config;
      if (!set_train_option(probe, target, v)) {
        throw ConfigError("grid key '" + target + "' is not a training option");
      }
    }
    grid.emplace_back(target, values);
  } else if (!set_train_option(config, key, value)) {
    throw ConfigError("unknown option '" + raw_key + "'");
  }
}

void ExperimentSpec::apply(const KeyValues& kv) {
  for (const auto& [k, v] : kv) set(k, v);
}

void ExperimentSpec::validate() const {
  config.validate();
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (threads < 1) throw ConfigError("threads must be >= 1");
  if (!(holdout_fraction > 0.0 && holdout_fraction < 1.0)) {
    throw ConfigError("holdout fraction must lie in (0, 1)");
  }
  if (paths.hyperedges.empty()) throw ConfigError("no dataset given");
  for (const auto* p : {&paths.hyperedges, &paths.features, &paths.labels, &paths.node_types,
                        &paths.splits_dir}) {
    if (!p->empty() && !fs::exists(*p)) throw ConfigError(p->string() + " does not exist");
  }
}

bool ExperimentResult::diverged() const {
  return std::any_of(trials.begin(), trials.end(), [](const auto& t) { return t.diverged; });
}

std::string ExperimentResult::diagnostic() const {
  for (const auto& t : trials) {
    if (t.diverged) return "trial with seed " + std::to_string(t.seed) + ": " + t.diagnostic;
  }
  return {};
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const Dataset& data,
                                std::optional<std::size_t> threads, Diagnostics* diag) {
  spec.config.validate();
  if (spec.trials < 1) throw ConfigError("trials must be >= 1");
  ExperimentResult result;
  result.trials.resize(spec.trials);
  std::mutex diag_mu;

  parallel_for(spec.trials, threads.value_or(spec.threads), [&](std::size_t t) {
    TrainConfig cfg = spec.config;
    cfg.seed = spec.config.seed + t;
    Diagnostics local;
    TrialOutcome& out = result.trials[t];
    out.seed = cfg.seed;
    TrainState state;
    ModelContext ctx;
    out.checkpoint.task = spec.task;
    EpochCallback snapshot;
    if (spec.checkpoint_every > 0) {
      snapshot = [&](const TrainState& s) {
        if (s.epoch % spec.checkpoint_every == 0) out.snapshots.emplace_back(s.epoch, s.params);
      };
    }
    if (spec.task == Task::kHyperedgePrediction) {
      const HyperedgeTask task = make_hyperedge_task(data.graph, cfg, data.features);
      state = train_hyperedge_prediction(task, cfg, &ctx, snapshot, &local);
      out.checkpoint.num_nodes = task.graph.num_nodes();
      out.checkpoint.num_hyperedges = task.graph.num_hyperedges();
    } else {
      std::size_t split_index = 0;
      const NodeTask task = node_task_for(data, cfg, t, &split_index);
      state = train_node_classification(task, cfg, &ctx, snapshot, &local);
      out.checkpoint.num_nodes = task.graph.num_nodes();
      out.checkpoint.num_hyperedges = task.graph.num_hyperedges();
      if (!data.splits.empty()) out.checkpoint.extra.emplace_back("split_index", std::to_string(split_index));
    }
    out.log = state.log;
    out.diverged = state.diverged;
    out.diagnostic = state.diagnostic;
    out.metric = state.final_metric();
    out.checkpoint.config = cfg;
    out.checkpoint.params = std::move(state.params);
    if (bootstrapped(cfg, data)) out.checkpoint.node_features = std::move(ctx.z0);
    if (diag != nullptr) {
      std::lock_guard<std::mutex> lock(diag_mu);
      for (const auto& w : local.warnings()) diag->warn(w);
    }
  });

  result.report.task = task_name(spec.task);
  result.report.method = "hnn";
  std::vector<double> values;
  for (const auto& t : result.trials) {
    result.report.seeds.push_back(t.seed);
    values.push_back(t.metric);
  }
  if (!result.diverged()) result.report.add("auc", std::nullopt, std::move(values));
  return result;
}

void write_epoch_log(std::ostream& out, const std::vector<EpochRecord>& log) {
  out << "epoch,loss,metric,wall_ms\n";
  for (const auto& r : log) {
    out << r.epoch << ',' << format_double(r.loss) << ','
        << (std::isnan(r.metric) ? std::string() : format_double(r.metric)) << ','
        << format_double(r.wall_ms) << '\n';
  }
}

void write_experiment(const fs::path& dir, const ExperimentSpec& spec,
                      const ExperimentResult& result) {
  if (fs::exists(dir)) throw DataError("refusing to overwrite " + dir.string());
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "config.txt");
    cfg << "task = " << task_name(spec.task) << "\ntrials = " << spec.trials << '\n';
    for (const auto& [k, v] : train_config_entries(spec.config)) cfg << k << " = " << v << '\n';
  }
  for (std::size_t t = 0; t < result.trials.size(); ++t) {
    const auto& trial = result.trials[t];
    char stem[32];
    std::snprintf(stem, sizeof(stem), "trial_%02zu", t);
    std::ofstream log(dir / (std::string(stem) + ".csv"));
    write_epoch_log(log, trial.log);
    if (!log) throw DataError("cannot write the epoch log in " + dir.string());
    for (const auto& [epoch, params] : trial.snapshots) {
      Checkpoint ck = trial.checkpoint;
      ck.params = params;
      char name[64];
      std::snprintf(name, sizeof(name), "%s_epoch_%04zu.ckpt", stem, epoch);
      save_checkpoint(dir / name, ck);
    }
    if (!trial.diverged) save_checkpoint(dir / (std::string(stem) + ".ckpt"), trial.checkpoint);
  }
  if (!result.diverged()) {
    std::ofstream rep(dir / "report.json");
    rep << result.report.to_json() << '\n';
  }
}

std::vector<KeyValues> expand_grid(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& grid) {
  if (grid.empty()) throw ConfigError("empty sweep grid");
  std::vector<KeyValues> cells = {{}};
  for (const auto& [key, values] : grid) {
    if (values.empty()) throw ConfigError("grid key " + key + " lists no values");
    std::vector<KeyValues> next;
    for (const auto& cell : cells) {
      for (const auto& v : values) {
        KeyValues c = cell;
        c.emplace_back(key, v);
        next.push_back(std::move(c));
      }
    }
    cells = std::move(next);
  }
  return cells;
}

std::vector<SweepCell> run_sweep(const ExperimentSpec& spec, const Dataset& data,
                                 const std::optional<fs::path>& dir, Diagnostics* diag) {
  const std::vector<KeyValues> settings = expand_grid(spec.grid);
  std::vector<SweepCell> cells(settings.size());
  std::mutex diag_mu;
  if (dir) {
    if (fs::exists(*dir)) throw DataError("refusing to overwrite " + dir->string());
    fs::create_directories(*dir);
  }
  parallel_for(cells.size(), spec.threads, [&](std::size_t c) {
    SweepCell& cell = cells[c];
    cell.settings = settings[c];
    try {
      ExperimentSpec cell_spec = spec;
      cell_spec.grid.clear();
      for (const auto& [k, v] : cell.settings) set_train_option(cell_spec.config, k, v);
      Diagnostics local;
      ExperimentResult r = run_experiment(cell_spec, data, 1, &local);
      if (dir) {
        char name[32];
        std::snprintf(name, sizeof(name), "cell_%03zu", c);
        write_experiment(*dir / name, cell_spec, r);
      }
      if (r.diverged()) {
        cell.error = r.diagnostic();
      } else {
        cell.ok = true;
      }
      cell.result = std::move(r);
      if (diag != nullptr) {
        std::lock_guard<std::mutex> lock(diag_mu);
        for (const auto& w : local.warnings()) diag->warn(w);
      }
    } catch (const std::exception& e) {
      cell.ok = false;
      cell.error = e.what();
    }
  });
  return cells;
}

void write_sweep_csv(std::ostream& out, const ExperimentSpec& spec,
                     const std::vector<SweepCell>& cells) {
  const auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (const char c : s) {
      if (c == '"') q += "\"\"";
      else if (c == '\n') q += ' ';
      else q += c;
    }
    return q + "\"";
  };
  out << "cell";
  for (const auto& [k, values] : spec.grid) out << ',' << k;
  out << ",status,metric,mean,std,trials,final_loss,error\n";
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cell = cells[c];
    out << c;
    for (const auto& [k, v] : cell.settings) out << ',' << quote(v);
    if (cell.ok) {
      const MetricSummary& m = cell.result->report.metrics.front();
      double loss = 0.0;
      for (const auto& t : cell.result->trials) loss += t.log.empty() ? 0.0 : t.log.back().loss;
      loss /= static_cast<double>(cell.result->trials.size());
      out << ",ok," << m.label() << ',' << format_double(m.mean) << ',' << format_double(m.std)
          << ',' << cell.result->trials.size() << ',' << format_double(loss) << ",\n";
    } else {
      out << ",failed,,,,,," << quote(cell.error) << '\n';
    }
  }
}

RankingScores score_rankings(const std::vector<std::vector<Index>>& rankings,
                             const std::vector<HeldOutLink>& links) {
  if (rankings.size() != links.size() || links.empty()) {
    throw std::invalid_argument("one ranking per held-out link expected");
  }
  RankingScores s;
  s.hr.assign(kRankingCutoffs.size(), 0.0);
  s.ndcg.assign(kRankingCutoffs.size(), 0.0);
  for (std::size_t l = 0; l < links.size(); ++l) {
    for (std::size_t c = 0; c < kRankingCutoffs.size(); ++c) {
      s.hr[c] += hit_rate_at_k(rankings[l], links[l].candidate, kRankingCutoffs[c]);
      s.ndcg[c] += ndcg_at_k(rankings[l], links[l].candidate, kRankingCutoffs[c]);
    }
  }
  for (std::size_t c = 0; c < kRankingCutoffs.size(); ++c) {
    s.hr[c] /= static_cast<double>(links.size());
    s.ndcg[c] /= static_cast<double>(links.size());
  }
  return s;
}

RecommendationResult run_recommendation(const ExperimentSpec& spec, const Dataset& data,
                                        const Checkpoint* given, Diagnostics* diag) {
  if (!data.graph.has_node_types()) throw DataError("recommendation needs node types");
  if (spec.candidate_type.empty()) throw ConfigError("no candidate type given");
  std::string fragment_type = spec.fragment_type;
  std::string candidate_type = spec.candidate_type;
  double fraction = spec.holdout_fraction;
  std::size_t trials = spec.trials;
  TrainConfig base = spec.config;
  if (given != nullptr) {
    base = given->config;
    trials = 1;
    if (const auto v = extra_value(*given, "fragment_type"); !v.empty()) fragment_type = v;
    if (const auto v = extra_value(*given, "candidate_type"); !v.empty()) candidate_type = v;
    if (const auto v = extra_value(*given, "holdout_fraction"); !v.empty()) {
      fraction = parse_double("holdout_fraction", v);
    }
  }
  if (data.graph.nodes_of_type(candidate_type).empty()) {
    throw DataError("candidate type '" + candidate_type + "' does not occur in the dataset");
  }
  base.validate();

  struct Trial {
    std::uint64_t seed = 0;
    RankingScores hnn, random, popularity;
    Checkpoint checkpoint;
    std::size_t links = 0;
  };
  std::vector<Trial> out(trials);
  std::mutex diag_mu;
  parallel_for(trials, spec.threads, [&](std::size_t t) {
    TrainConfig cfg = base;
    cfg.seed = base.seed + t;
    Diagnostics local;
    std::mt19937_64 holdout_rng(cfg.seed ^ kHoldoutStream);
    const LinkHoldout hold =
        holdout_links(data.graph, fragment_type, candidate_type, fraction, holdout_rng);
    const HyperedgeTask task = make_full_task(hold.train, cfg, data.features);
    ModelContext ctx;
    Checkpoint ck;
    if (given != nullptr) {
      ctx = checkpoint_context(task.graph, *given, data, &local);
      check_fits(ctx, given->params, 0);
      ck = *given;
    } else {
      TrainState state = train_hyperedge_prediction(task, cfg, &ctx, {}, &local);
      if (state.diverged) throw NumericError(state.diagnostic);
      ck.task = Task::kHyperedgePrediction;
      ck.config = cfg;
      ck.params = std::move(state.params);
      if (bootstrapped(cfg, data)) ck.node_features = ctx.z0;
      ck.num_nodes = hold.train.num_nodes();
      ck.num_hyperedges = hold.train.num_hyperedges();
      ck.extra = {{"protocol", "link-holdout"},
                  {"fragment_type", fragment_type},
                  {"candidate_type", candidate_type},
                  {"holdout_fraction", format_double(fraction)}};
    }
    const Matrix z = final_node_embeddings(ctx, ck.params);
    const std::size_t all = hold.train.nodes_of_type(candidate_type).size();
    std::vector<std::vector<Index>> hnn_rank, random_rank, pop_rank;
    std::mt19937_64 baseline_rng(cfg.seed ^ kBaselineStream);
    const std::vector<Index> popular = popularity_ranking(hold.train, candidate_type);
    for (const auto& link : hold.links) {
      std::vector<Index> order;
      for (const auto& sc : recommend(hold.train, z, link.fragment, candidate_type, all, &local)) {
        order.push_back(sc.node);
      }
      hnn_rank.push_back(std::move(order));
      random_rank.push_back(random_ranking(hold.train, candidate_type, baseline_rng));
      pop_rank.push_back(popular);
    }
    Trial& tr = out[t];
    tr.seed = cfg.seed;
    tr.hnn = score_rankings(hnn_rank, hold.links);
    tr.random = score_rankings(random_rank, hold.links);
    tr.popularity = score_rankings(pop_rank, hold.links);
    tr.checkpoint = std::move(ck);
    tr.links = hold.links.size();
    if (diag != nullptr) {
      std::lock_guard<std::mutex> lock(diag_mu);
      for (const auto& w : local.warnings()) diag->warn(w);
    }
  });

  RecommendationResult result;
  const auto fill = [&](EvalReport& rep, const std::string& method,
                        RankingScores Trial::*member) {
    rep.task = "recommend";
    rep.method = method;
    for (const auto& tr : out) rep.seeds.push_back(tr.seed);
    for (std::size_t c = 0; c < kRankingCutoffs.size(); ++c) {
      std::vector<double> hr, ndcg;
      for (const auto& tr : out) {
        hr.push_back((tr.*member).hr[c]);
        ndcg.push_back((tr.*member).ndcg[c]);
      }
      rep.add("hr", kRankingCutoffs[c], std::move(hr));
      rep.add("ndcg", kRankingCutoffs[c], std::move(ndcg));
    }
  };
  fill(result.hnn, "hnn", &Trial::hnn);
  fill(result.random, "random", &Trial::random);
  fill(result.popularity, "popularity", &Trial::popularity);
  for (auto& tr : out) result.checkpoints.push_back(std::move(tr.checkpoint));
  result.heldout_links = out.front().links;
  return result;
}

void write_embeddings(std::ostream& out, const Dataset& data, const Checkpoint& ckpt,
                      const std::vector<Index>& nodes, Diagnostics* diag) {
  const ModelContext ctx = checkpoint_context(data.graph, ckpt, data, diag);
  check_fits(ctx, ckpt.params, 0);
  ForwardOptions fo;
  fo.mode = Mode::kEval;
  fo.keep_cache = false;
  fo.inputs = &ctx.inputs;
  std::mt19937_64 unused(0);
  const EmbeddingState state =
      forward(ctx.ops, ckpt.params, ctx.z0, ctx.y0, ctx.variant, unused, fo);
  std::vector<Index> which = nodes;
  if (which.empty()) {
    which.resize(data.graph.num_nodes());
    std::iota(which.begin(), which.end(), Index{0});
  }
  out << "node\thyperedge";
  for (Eigen::Index c = 0; c < ckpt.params.psi.cols(); ++c) out << "\td" << c;
  out << '\n';
  std::string line;
  for (const Index i : which) {
    if (i >= data.graph.num_nodes()) {
      throw DataError("node " + std::to_string(i) + " out of range for " +
                      std::to_string(data.graph.num_nodes()) + " nodes");
    }
    const Matrix emb =
        export_embedding_set(data.graph, state, ckpt.params, ckpt.config.variant.sigma_v, i);
    const auto edges = data.graph.node_edges(i);
    for (std::size_t r = 0; r < edges.size(); ++r) {
      line = std::to_string(i) + '\t' + std::to_string(edges[r]);
      for (Eigen::Index c = 0; c < emb.cols(); ++c) line += '\t' + format_double(emb(r, c));
      line += '\n';
      out << line;
    }
  }
}

EvalReport evaluate_checkpoint(const Checkpoint& ckpt, const Dataset& data, Diagnostics* diag) {
  const TrainConfig& cfg = ckpt.config;
  EvalReport rep;
  rep.task = task_name(ckpt.task);
  rep.method = "hnn";
  rep.seeds = {cfg.seed};
  double metric = 0.0;
  if (ckpt.task == Task::kHyperedgePrediction) {
    const HyperedgeTask task = make_hyperedge_task(data.graph, cfg, data.features);
    const ModelContext ctx = checkpoint_context(task.graph, ckpt, data, diag);
    check_fits(ctx, ckpt.params, 0);
    std::mt19937_64 rng(cfg.seed);
    metric = evaluate_hyperedge_auc(ctx, ckpt.params, task, cfg, rng);
  } else {
    std::size_t split_index = 0;
    if (const auto v = extra_value(ckpt, "split_index"); !v.empty()) {
      split_index = parse_size("split_index", v);
    }
    const NodeTask task = node_task_for(data, cfg, split_index, &split_index);
    const ModelContext ctx = checkpoint_context(task.graph, ckpt, data, diag);
    check_fits(ctx, ckpt.params, task.classes);
    metric = evaluate_node_auc(ctx, ckpt.params, task, task.test_nodes, diag);
  }
  rep.add("auc", std::nullopt, {metric});
  return rep;
}

}  // namespace hnn
