// Copyright 2026 The orbitkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orbitkit/partition.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "orbitkit/generators.hpp"
#include "test_support.hpp"

namespace orbitkit {
namespace {

using Cells = std::set<std::vector<Vertex>>;

Cells cell_set(const OrderedPartition& p) {
  auto cells = p.cells();
  return Cells(cells.begin(), cells.end());
}

// Classic colour refinement: recolour by (colour, sorted neighbour colours)
// until the number of colours stops growing.
Cells colour_refinement(const Graph& g, std::vector<int> colour) {
  const int n = g.num_vertices();
  int classes = static_cast<int>(std::set<int>(colour.begin(), colour.end()).size());
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<int> next(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> sig;
      for (Vertex w : g.neighbors(v)) sig.push_back(colour[w]);
      std::sort(sig.begin(), sig.end());
      auto key = std::make_pair(colour[v], sig);
      auto it = ids.emplace(key, static_cast<int>(ids.size())).first;
      next[v] = it->second;
    }
    colour = next;
    if (static_cast<int>(ids.size()) == classes) break;
    classes = static_cast<int>(ids.size());
  }
  std::map<int, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < n; ++v) groups[colour[v]].push_back(v);
  Cells out;
  for (auto& [c, members] : groups) out.insert(members);
  return out;
}

bool is_equitable(const Graph& g, const OrderedPartition& p) {
  const auto cells = p.cells();
  for (const auto& a : cells) {
    for (const auto& b : cells) {
      std::set<int> counts;
      for (Vertex v : a) {
        int c = 0;
        for (Vertex w : b) c += g.has_edge(v, w);
        counts.insert(c);
      }
      if (counts.size() > 1) return false;
    }
  }
  return true;
}

TEST(OrderedPartitionTest, UnitAndConstruction) {
  auto unit = OrderedPartition::unit(4);
  EXPECT_EQ(unit.num_cells(), 1);
  EXPECT_FALSE(unit.is_discrete());
  OrderedPartition p(4, {{2, 0}, {1}, {3}});
  EXPECT_EQ(p.num_cells(), 3);
  EXPECT_TRUE(p.same_cell(0, 2));
  EXPECT_FALSE(p.same_cell(0, 1));
  EXPECT_EQ(p.to_string(), "0 2 | 1 | 3");
  EXPECT_TRUE(p.is_finer_or_equal(unit));
  EXPECT_FALSE(unit.is_finer_or_equal(p));
  EXPECT_EQ(p.first_nonsingleton_cell(), 0);
}

TEST(OrderedPartitionTest, RejectsInvalidCells) {
  EXPECT_THROW(OrderedPartition(3, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(OrderedPartition(3, {{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(OrderedPartition(3, {{0, 1, 2}, {}}), std::invalid_argument);
  EXPECT_THROW(OrderedPartition(3, {{0, 1, 3}}), std::invalid_argument);
}

TEST(OrderedPartitionTest, IndividualizePutsVertexFirst) {
  auto p = OrderedPartition::unit(4).individualize(2);
  EXPECT_EQ(p.num_cells(), 2);
  EXPECT_EQ(p.elements()[0], 2);
  EXPECT_EQ(p.cells().front(), (std::vector<Vertex>{2}));
  EXPECT_TRUE(p.is_finer_or_equal(OrderedPartition::unit(4)));
}

TEST(EquitableRefineTest, PathOnFiveVertices) {
  auto p = equitable_refine(make_path(5), OrderedPartition::unit(5));
  EXPECT_EQ(cell_set(p), (Cells{{0, 4}, {1, 3}, {2}}));
}

TEST(EquitableRefineTest, RegularGraphStaysUnit) {
  EXPECT_EQ(equitable_refine(make_cycle(6), OrderedPartition::unit(6)).num_cells(), 1);
  EXPECT_EQ(equitable_refine(make_petersen(), OrderedPartition::unit(10)).num_cells(), 1);
}

TEST(EquitableRefineTest, DiscretePartitionIsFixed) {
  OrderedPartition discrete(4, {{2}, {0}, {3}, {1}});
  auto refined = equitable_refine(make_complete(4), discrete);
  EXPECT_EQ(refined, discrete);
  EXPECT_TRUE(refined.is_discrete());
}

TEST(EquitableRefineTest, MatchesColourRefinementOnRandomGraphs) {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 14;
    Graph g = testing::random_graph(rng, n, 0.35);
    auto p = equitable_refine(g, OrderedPartition::unit(n));
    EXPECT_TRUE(is_equitable(g, p));
    EXPECT_EQ(cell_set(p), colour_refinement(g, std::vector<int>(n, 0)));
    // Idempotent.
    EXPECT_EQ(equitable_refine(g, p), p);
  }
}

TEST(EquitableRefineTest, IndividualizedRefinementIsFinerAndEquitable) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 12;
    Graph g = testing::random_graph(rng, n, 0.4);
    auto base = equitable_refine(g, OrderedPartition::unit(n));
    const Vertex v = trial % n;
    auto refined = equitable_refine(g, base.individualize(v));
    EXPECT_TRUE(refined.is_finer_or_equal(base));
    EXPECT_TRUE(is_equitable(g, refined));
    std::vector<int> colour(n, 0);
    colour[v] = 1;
    EXPECT_EQ(cell_set(refined), colour_refinement(g, colour));
  }
}

TEST(EquitableRefineTest, RejectsSizeMismatch) {
  EXPECT_THROW(equitable_refine(make_path(3), OrderedPartition::unit(4)),
               std::invalid_argument);
}

}  // namespace
}  // namespace orbitkit
