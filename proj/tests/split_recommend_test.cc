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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "hnn/recommend.h"
#include "hnn/split.h"
#include "test_util.h"

namespace hnn {
namespace {

Hypergraph TenEdges() {
  std::vector<NodeSet> edges;
  for (Index j = 0; j < 10; ++j) edges.push_back({j, static_cast<Index>(j + 1)});
  return Hypergraph::Build(edges, 12);
}

TEST(SplitTest, EightOfTenForTraining) {
  std::mt19937_64 rng(1);
  const HyperedgeSplit s = split_hyperedges(TenEdges(), 0.8, rng);
  EXPECT_EQ(s.train_ids.size(), 8u);
  EXPECT_EQ(s.heldout_ids.size(), 2u);
  EXPECT_EQ(s.train.num_hyperedges(), 8u);
  EXPECT_EQ(s.train.num_nodes(), 12u);
  EXPECT_EQ(train_count(10, 0.8), 8u);
}

TEST(SplitTest, PartitionLaws) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 5 + rng() % 20;
    const Hypergraph g =
        Hypergraph::Build(testing::RandomEdges(rng, n, 2 + rng() % 30, 4, false), n);
    const HyperedgeSplit s = split_hyperedges(g, 0.5, rng);
    std::vector<Index> all = s.train_ids;
    all.insert(all.end(), s.heldout_ids.begin(), s.heldout_ids.end());
    std::sort(all.begin(), all.end());
    ASSERT_EQ(all.size(), g.num_hyperedges());
    for (std::size_t j = 0; j < all.size(); ++j) EXPECT_EQ(all[j], static_cast<Index>(j));
    for (std::size_t r = 0; r < s.train_ids.size(); ++r) {
      EXPECT_EQ(s.train.hyperedges()[r], g.hyperedges()[s.train_ids[r]]);
    }
    for (std::size_t r = 0; r < s.heldout_ids.size(); ++r) {
      EXPECT_EQ(s.heldout[r], g.hyperedges()[s.heldout_ids[r]]);
    }
  }
}

TEST(SplitTest, SeededAndUniform) {
  const Hypergraph g = TenEdges();
  std::mt19937_64 a(5), b(5);
  EXPECT_EQ(split_hyperedges(g, 0.8, a).heldout_ids, split_hyperedges(g, 0.8, b).heldout_ids);
  // Each hyperedge is held out with probability 0.2.
  std::vector<int> held(10, 0);
  const int runs = 2000;
  std::mt19937_64 rng(6);
  for (int r = 0; r < runs; ++r) {
    for (const Index j : split_hyperedges(g, 0.8, rng).heldout_ids) ++held[j];
  }
  const double sd = std::sqrt(runs * 0.2 * 0.8);
  for (const int h : held) EXPECT_NEAR(h, runs * 0.2, 4 * sd);
}

TEST(SplitTest, IsolatedNodesRemain) {
  const Hypergraph g = Hypergraph::Build({{0, 1}, {2, 3}}, 4);
  std::mt19937_64 rng(7);
  const HyperedgeSplit s = split_hyperedges(g, 0.5, rng);
  EXPECT_EQ(s.train.num_nodes(), 4u);
  const NodeSet& gone = s.heldout[0];
  for (const Index v : gone) EXPECT_TRUE(s.train.node_edges(v).empty());
}

TEST(SplitTest, DegenerateSplitsRejected) {
  std::mt19937_64 rng(8);
  EXPECT_THROW(split_hyperedges(TenEdges(), 0.0, rng), ConfigError);
  EXPECT_THROW(split_hyperedges(TenEdges(), 1.0, rng), ConfigError);
  EXPECT_THROW(split_hyperedges(TenEdges(), 0.99, rng), DataError);
  EXPECT_THROW(split_hyperedges(Hypergraph::Build({{0}}, 1), 0.5, rng), DataError);
}

Hypergraph Styled() {
  // Fragments 0-2, styles 3-5.
  return Hypergraph::Build({{0, 3, 4}, {1, 3}, {2, 3, 5}, {0, 1}, {1, 5}}, 6)
      .with_node_types({"fragment", "fragment", "fragment", "style", "style", "style"});
}

TEST(RecommendTest, OrdersByCosine) {
  Matrix z(4, 2);
  const double c1 = 0.9, c2 = 0.1, c3 = 0.5;
  z << 1, 0,  //
      c1, std::sqrt(1 - c1 * c1),  //
      c2, std::sqrt(1 - c2 * c2),  //
      c3, std::sqrt(1 - c3 * c3);
  const Hypergraph g = Hypergraph::Build({{0, 1, 2, 3}}, 4)
                           .with_node_types({"fragment", "style", "style", "style"});
  const auto top = recommend(g, z, 0, "style", 10);
  ASSERT_EQ(top.size(), 3u);
  EXPECT_EQ(top[0].node, 1u);
  EXPECT_EQ(top[1].node, 3u);
  EXPECT_EQ(top[2].node, 2u);
  EXPECT_NEAR(top[0].score, 0.9, 1e-15);
  EXPECT_EQ(recommend(g, z, 0, "style", 1).size(), 1u);

  Matrix scaled = z;
  scaled.row(2) *= 40.0;
  scaled.row(0) *= 0.01;
  const auto again = recommend(g, scaled, 0, "style", 10);
  for (std::size_t r = 0; r < 3; ++r) EXPECT_EQ(again[r].node, top[r].node);
}

TEST(RecommendTest, SelfSimilarityAndTies) {
  Matrix z(4, 2);
  z << 2, 1,  //
      0, 0,  //
      4, 2,  //
      -1, 2;
  const Hypergraph g = Hypergraph::Build({{0, 1, 2, 3}}, 4)
                           .with_node_types({"fragment", "style", "style", "style"});
  const auto top = recommend(g, z, 0, "style", 3);
  EXPECT_EQ(top[0].node, 2u);
  EXPECT_NEAR(top[0].score, 1.0, 1e-15);
  // The zero vector and the orthogonal vector both score 0; index breaks the tie.
  EXPECT_EQ(top[1].node, 1u);
  EXPECT_EQ(top[2].node, 3u);
  Diagnostics diag;
  EXPECT_TRUE(recommend(g, z, 0, "font", 3, &diag).empty());
  EXPECT_FALSE(diag.empty());
  EXPECT_THROW(recommend(g, z, 4, "style", 3), DataError);
}

TEST(BaselineRankingTest, PopularityByDegreeWithIndexTies) {
  std::vector<NodeSet> edges;
  for (int r = 0; r < 5; ++r) edges.push_back({0, 3});
  edges.push_back({1, 4});
  for (int r = 0; r < 3; ++r) edges.push_back({2, 5});
  Hypergraph g = Hypergraph::Build(edges, 6)
                     .with_node_types({"style", "style", "style", "f", "f", "f"});
  EXPECT_EQ(popularity_ranking(g, "style"), (std::vector<Index>{0, 2, 1}));
  const Hypergraph tied = Hypergraph::Build({{0, 1, 2}}, 3).with_node_types({"s", "s", "s"});
  EXPECT_EQ(popularity_ranking(tied, "s"), (std::vector<Index>{0, 1, 2}));
}

TEST(BaselineRankingTest, RandomIsSeededPermutation) {
  const Hypergraph g = Styled();
  std::mt19937_64 a(3), b(3);
  const auto x = random_ranking(g, "style", a);
  EXPECT_EQ(x, random_ranking(g, "style", b));
  std::vector<Index> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<Index>{3, 4, 5}));
}

TEST(HoldoutLinksTest, RemovesHeldOutCandidates) {
  const Hypergraph g = Styled();
  std::mt19937_64 rng(4);
  const LinkHoldout h = holdout_links(g, "fragment", "style", 0.4, rng);
  // Links: (0,3) (0,4) (1,3) (1,5) (2,3) (2,5).
  EXPECT_EQ(h.total_links, 6u);
  ASSERT_EQ(h.links.size(), 2u);
  EXPECT_EQ(h.train.num_nodes(), g.num_nodes());
  EXPECT_EQ(h.train.node_types(), g.node_types());
  std::set<std::pair<Index, Index>> kept;
  for (const auto& e : h.train.hyperedges()) {
    for (const Index f : e) {
      for (const Index k : e) {
        if (f <= 2 && k >= 3) kept.emplace(f, k);
      }
    }
  }
  EXPECT_EQ(kept.size(), 4u);
  for (const auto& link : h.links) {
    EXPECT_LE(link.fragment, 2u);
    EXPECT_GE(link.candidate, 3u);
    EXPECT_EQ(kept.count({link.fragment, link.candidate}), 0u);
  }
}

TEST(HoldoutLinksTest, Validation) {
  std::mt19937_64 rng(5);
  EXPECT_THROW(holdout_links(Hypergraph::Build({{0, 1}}, 2), "a", "b", 0.2, rng), DataError);
  EXPECT_THROW(holdout_links(Styled(), "fragment", "style", 1.0, rng), ConfigError);
  EXPECT_THROW(holdout_links(Styled(), "fragment", "font", 0.2, rng), DataError);
}

}  // namespace
}  // namespace hnn
