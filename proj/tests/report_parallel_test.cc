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

#include <atomic>
#include <cstdlib>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "hnn/common.h"
#include "hnn/eval_report.h"
#include "hnn/parallel.h"

namespace hnn {
namespace {

TEST(SummarizeTest, SampleStandardDeviation) {
  const MeanStd s = summarize({1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_NEAR(s.std, std::sqrt(5.0 / 3.0), 1e-15);
  EXPECT_EQ(summarize({0.7}).std, 0.0);
  EXPECT_EQ(summarize({0.7}).mean, 0.7);
}

EvalReport Sample() {
  EvalReport r;
  r.task = "recommend";
  r.method = "hnn";
  r.seeds = {7, 8, 9};
  r.add("auc", std::nullopt, {0.9, 0.8, 0.85});
  r.add("hr", 10, {1.0, 0.5, 0.0});
  return r;
}

TEST(EvalReportTest, AddFindAndLabels) {
  const EvalReport r = Sample();
  EXPECT_EQ(r.trials(), 3u);
  ASSERT_NE(r.find("hr@10"), nullptr);
  EXPECT_DOUBLE_EQ(r.find("hr@10")->mean, 0.5);
  EXPECT_DOUBLE_EQ(r.find("hr@10")->std, 0.5);
  EXPECT_EQ(r.find("auc")->label(), "auc");
  EXPECT_EQ(r.find("ndcg@10"), nullptr);
  EvalReport bad = Sample();
  EXPECT_THROW(bad.add("auc", std::nullopt, {0.5}), std::invalid_argument);
}

TEST(EvalReportTest, JsonRoundTrip) {
  const EvalReport r = Sample();
  const EvalReport back = EvalReport::FromJson(r.to_json());
  EXPECT_EQ(back.task, r.task);
  EXPECT_EQ(back.method, r.method);
  EXPECT_EQ(back.seeds, r.seeds);
  ASSERT_EQ(back.metrics.size(), 2u);
  EXPECT_EQ(back.metrics[1].k, std::optional<std::size_t>(10));
  EXPECT_EQ(back.metrics[0].values, r.metrics[0].values);
  EXPECT_EQ(back.metrics[0].std, r.metrics[0].std);
  EXPECT_EQ(back.to_json(), r.to_json());
}

TEST(EvalReportTest, ValidateRange) {
  EXPECT_NO_THROW(Sample().validate());
  EvalReport r = Sample();
  r.add("ndcg", 1, {0.5, 1.5, 0.0});
  EXPECT_THROW(r.validate(), NumericError);
  EvalReport nan = Sample();
  nan.add("ndcg", 1, {0.5, std::nan(""), 0.0});
  EXPECT_THROW(nan.validate(), NumericError);
  EXPECT_THROW(EvalReport{}.validate(), NumericError);
}

TEST(ParallelForTest, RunsEveryIndexOnce) {
  for (const std::size_t threads : {1u, 2u, 5u}) {
    std::vector<std::atomic<int>> hits(37);
    parallel_for(hits.size(), threads, [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
  parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(ParallelForTest, RethrowsLowestFailingIndex) {
  std::atomic<int> ran{0};
  try {
    parallel_for(10, 3, [&](std::size_t i) {
      ++ran;
      if (i == 7 || i == 4) throw std::runtime_error("index " + std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "index 4");
  }
  EXPECT_EQ(ran.load(), 10);
}

TEST(ParallelForTest, ThreadCountFromEnvironment) {
  ::setenv("HNN_THREADS", "3", 1);
  EXPECT_EQ(default_thread_count(), 3u);
  ::setenv("HNN_THREADS", "zero", 1);
  EXPECT_EQ(default_thread_count(), 1u);
  ::unsetenv("HNN_THREADS");
  EXPECT_EQ(default_thread_count(), 1u);
}

}  // namespace
}  // namespace hnn
