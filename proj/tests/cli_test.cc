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

#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hnn/eval_report.h"
#include "hnn/io.h"
#include "test_util.h"

namespace hnn {
namespace {

namespace fs = std::filesystem;
using testing::ReadFile;
using testing::ScopedDir;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string Quote(const std::string& s) {
  std::string q = "'";
  for (const char c : s) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q += c;
    }
  }
  return q + "'";
}

RunResult RunCli(const ScopedDir& dir, const std::vector<std::string>& args) {
  std::string cmd = "cd " + Quote(dir.path().string()) + " && " + Quote(HNN_CLI_PATH);
  for (const auto& a : args) cmd += " " + Quote(a);
  const fs::path err = dir / "stderr.txt";
  cmd += " 2>" + Quote(err.string());
  RunResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = ReadFile(err);
  return r;
}

// Style toy plus one isolated fragment node.
fs::path WriteToy(const ScopedDir& dir) {
  Dataset d = testing::StyleClusters(4, 4);
  std::vector<std::string> types = d.graph.node_types();
  types.push_back("fragment");
  d.graph = Hypergraph::Build(d.graph.hyperedges(), types.size()).with_node_types(types);
  d.labels.push_back(-1);
  write_dataset(dir / "toy", d, "toy");
  return dir / "toy";
}

TEST(CliTest, TrainWritesOutputsAndNeverOverwrites) {
  ScopedDir dir;
  const fs::path toy = WriteToy(dir);
  const std::vector<std::string> args = {"--seed", "5", "--out", "run", "--set", "epochs=10",
                                         "train", "--dataset", toy.string(), "--trials", "2"};
  const RunResult a = RunCli(dir, args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("hyperedge-pred auc"), std::string::npos);
  for (const char* f : {"report.json", "config.txt", "trial_00.csv", "trial_01.ckpt"}) {
    EXPECT_TRUE(fs::exists(dir / "run" / f)) << f;
  }
  const RunResult b = RunCli(dir, args);
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.err.find("run-1"), std::string::npos);
  EXPECT_EQ(ReadFile(dir / "run" / "report.json"), ReadFile(dir / "run-1" / "report.json"));
  const EvalReport rep = EvalReport::FromJson(ReadFile(dir / "run" / "report.json"));
  EXPECT_EQ(rep.seeds, (std::vector<std::uint64_t>{5, 6}));
  EXPECT_EQ(rep.find("auc")->values.size(), 2u);
}

TEST(CliTest, ConfigFileAndExitCodes) {
  ScopedDir dir;
  const fs::path toy = WriteToy(dir);
  testing::WriteFile(dir / "bad.cfg", "variant = hnn-x\n");
  const RunResult bad_variant =
      RunCli(dir, {"--config", "bad.cfg", "--out", "r1", "train", "--dataset", toy.string()});
  EXPECT_EQ(bad_variant.code, 1);
  EXPECT_FALSE(fs::exists(dir / "r1"));

  EXPECT_EQ(RunCli(dir, {"--out", "r2", "train", "--dataset", "absent"}).code, 2);
  EXPECT_EQ(RunCli(dir, {"--threads", "0", "train", "--dataset", toy.string()}).code, 1);
  EXPECT_EQ(RunCli(dir, {"frobnicate"}).code, 1);
  EXPECT_EQ(RunCli(dir, {"--set", "novalue", "train", "--dataset", toy.string()}).code, 1);
  EXPECT_EQ(RunCli(dir, {"--help"}).code, 0);

  const RunResult diverged =
      RunCli(dir, {"--out", "r3", "--set", "variant=h2", "--set", "sigma=identity", "--set",
                "optimizer=sgd", "--set", "lr=1e300", "--set", "cosine=false", "--set",
                "score_embedding=node", "--set", "epochs=20", "train", "--dataset",
                toy.string()});
  EXPECT_EQ(diverged.code, 3) << diverged.err;
  EXPECT_NE(diverged.err.find("diverged"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "r3" / "trial_00.csv"));
}

TEST(CliTest, ConvertHyperGcnAndEmptyInput) {
  ScopedDir dir;
  const RunResult ok = RunCli(dir, {"--out", "conv", "convert", "--format", "hypergcn",
                                 (fs::path(HNN_TEST_DATA_DIR) / "hypergcn_p4").string()});
  ASSERT_EQ(ok.code, 0) << ok.err;
  EXPECT_NE(ok.out.find("N=6 M=5 classes=3 features=4 splits=2"), std::string::npos);
  const Manifest m = read_manifest(dir / "conv" / "manifest.json");
  EXPECT_EQ(m.num_hyperedges, 5u);

  testing::WriteFile(dir / "empty" / "hyperedges.txt", "");
  EXPECT_EQ(RunCli(dir, {"--out", "conv2", "convert", "--format", "text", "empty"}).code, 2);
  EXPECT_FALSE(fs::exists(dir / "conv2"));
  EXPECT_EQ(RunCli(dir, {"convert", "--format", "text", "empty"}).code, 1);
}

TEST(CliTest, SweepOverActivations) {
  ScopedDir dir;
  const fs::path toy = WriteToy(dir);
  const RunResult r =
      RunCli(dir, {"--out", "sw", "--set", "epochs=3", "sweep", "--dataset", toy.string(), "--grid",
                "sigma=tanh,leaky-relu,gelu,selu,rrelu"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = ReadFile(dir / "sw" / "sweep.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
  EXPECT_NE(csv.find("4,rrelu,ok"), std::string::npos);
  EXPECT_EQ(RunCli(dir, {"sweep", "--dataset", toy.string()}).code, 1);
}

TEST(CliTest, EmbedEvalAndRecommend) {
  ScopedDir dir;
  const fs::path toy = WriteToy(dir);
  ASSERT_EQ(RunCli(dir, {"--out", "run", "--set", "epochs=5", "train", "--dataset", toy.string()})
                .code,
            0);
  const std::string ckpt = (dir / "run" / "trial_00.ckpt").string();

  const RunResult all = RunCli(dir, {"embed", "--checkpoint", ckpt, "--dataset", toy.string()});
  ASSERT_EQ(all.code, 0) << all.err;
  const Dataset d = load_dataset(DatasetPaths::FromDirectory(toy));
  EXPECT_EQ(static_cast<std::size_t>(std::count(all.out.begin(), all.out.end(), '\n')),
            d.graph.num_incidences() + 1);
  const RunResult isolated =
      RunCli(dir, {"embed", "--checkpoint", ckpt, "--dataset", toy.string(), "--nodes", "20"});
  ASSERT_EQ(isolated.code, 0) << isolated.err;
  EXPECT_EQ(std::count(isolated.out.begin(), isolated.out.end(), '\n'), 1);
  const RunResult three =
      RunCli(dir, {"--out", "emb.tsv", "embed", "--checkpoint", ckpt, "--dataset", toy.string(),
                "--nodes", "0"});
  ASSERT_EQ(three.code, 0);
  const std::string rows = ReadFile(dir / "emb.tsv");
  EXPECT_EQ(std::count(rows.begin(), rows.end(), '\n'), 4);

  write_dataset(dir / "other", testing::StyleClusters(3, 4), "other");
  const RunResult mismatch =
      RunCli(dir, {"embed", "--checkpoint", ckpt, "--dataset", (dir / "other").string()});
  EXPECT_EQ(mismatch.code, 2);
  EXPECT_NE(mismatch.err.find("21"), std::string::npos);
  EXPECT_NE(mismatch.err.find("15"), std::string::npos);

  const RunResult ev = RunCli(dir, {"eval", "--checkpoint", ckpt, "--dataset", toy.string()});
  ASSERT_EQ(ev.code, 0) << ev.err;
  EXPECT_NE(EvalReport::FromJson(ev.out).find("auc"), nullptr);

  const RunResult rec = RunCli(dir, {"--out", "rec", "--set", "epochs=20", "recommend", "--dataset",
                                  toy.string(), "--candidate-type", "style", "--trials", "2"});
  ASSERT_EQ(rec.code, 0) << rec.err;
  EXPECT_NE(rec.out.find("popularity"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "rec" / "report.json"));
  EXPECT_EQ(RunCli(dir, {"recommend", "--dataset", toy.string(), "--candidate-type", "font"}).code,
            2);
}

}  // namespace
}  // namespace hnn
