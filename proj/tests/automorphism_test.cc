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

#include "orbitkit/automorphism.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "orbitkit/errors.hpp"
#include "orbitkit/generators.hpp"
#include "orbitkit/partition.hpp"
#include "orbitkit/products.hpp"
#include "test_support.hpp"

namespace orbitkit {
namespace {

// Closes a generating set under composition.
std::set<std::vector<Vertex>> group_closure(const AutGenerators& gens) {
  const int n = gens.num_vertices();
  std::vector<Vertex> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::set<std::vector<Vertex>> seen = {id};
  std::vector<Permutation> frontier = {Permutation::identity(n)};
  while (!frontier.empty()) {
    Permutation p = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      Permutation q = g * p;
      std::vector<Vertex> img(q.image().begin(), q.image().end());
      if (seen.insert(img).second) frontier.push_back(q);
    }
  }
  return seen;
}

std::set<std::vector<Vertex>> as_set(const std::vector<Permutation>& group) {
  std::set<std::vector<Vertex>> out;
  for (const auto& p : group) out.emplace(p.image().begin(), p.image().end());
  return out;
}

TEST(PermutationTest, Basics) {
  Permutation p({1, 2, 0, 3});
  EXPECT_EQ(p(0), 1);
  EXPECT_FALSE(p.is_identity());
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ((p * p)(0), 2);
  EXPECT_EQ(p.to_string(), "(0 1 2)");
  EXPECT_EQ(Permutation::identity(3).to_string(), "()");
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 3}), std::invalid_argument);
}

TEST(IsAutomorphismTest, PathOnThreeVertices) {
  Graph p3 = make_path(3);
  EXPECT_TRUE(is_automorphism(p3, Permutation({2, 1, 0})));
  EXPECT_TRUE(is_automorphism(p3, Permutation::identity(3)));
  EXPECT_FALSE(is_automorphism(p3, Permutation({1, 0, 2})));
  EXPECT_THROW(is_automorphism(p3, Permutation::identity(2)),
               std::invalid_argument);
}

TEST(BruteForceTest, GroupOrders) {
  EXPECT_EQ(all_automorphisms(make_complete(2)).size(), 2u);
  EXPECT_EQ(all_automorphisms(make_path(3)).size(), 2u);
  EXPECT_EQ(all_automorphisms(make_cycle(4)).size(), 8u);
  EXPECT_EQ(all_automorphisms(make_petersen()).size(), 120u);
  EXPECT_EQ(all_automorphisms(make_star(4)).size(), 24u);
  EXPECT_EQ(all_automorphisms(Graph()).size(), 1u);
}

TEST(BruteForceTest, GeneratorFormOmitsIdentity) {
  EXPECT_EQ(brute_force_automorphisms(make_complete(2)).size(), 1u);
  EXPECT_EQ(brute_force_automorphisms(make_cycle(4)).size(), 7u);
  EXPECT_TRUE(brute_force_automorphisms(make_path(1)).empty());
}

TEST(BruteForceTest, RejectsLargeGraphs) {
  EXPECT_THROW(all_automorphisms(make_path(kBruteForceMaxVertices + 1)),
               std::invalid_argument);
}

TEST(SearchTest, GeneratorsAreAutomorphisms) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testing::random_graph(rng, 1 + trial % 30, 0.2);
    auto gens = automorphism_generators(g);
    for (const auto& p : gens) {
      EXPECT_TRUE(is_automorphism(g, p));
      EXPECT_FALSE(p.is_identity());
    }
  }
}

TEST(SearchTest, PathOnFourVerticesHasOnlyTheReversal) {
  auto gens = automorphism_generators(make_path(4));
  ASSERT_EQ(gens.size(), 1u);
  EXPECT_EQ(gens[0], Permutation({3, 2, 1, 0}));
}

TEST(SearchTest, OrbitsRefineCoarsestEquitablePartition) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 16;
    Graph g = testing::random_graph(rng, n, 0.3);
    auto equitable = equitable_refine(g, OrderedPartition::unit(n));
    auto gens = automorphism_generators(g);
    for (const auto& p : gens) {
      for (Vertex v = 0; v < n; ++v) EXPECT_TRUE(equitable.same_cell(v, p(v)));
    }
  }
}

TEST(SearchTest, GeneratesFullGroupOnSmallGraphs) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = testing::random_graph(rng, 1 + trial % 8, 0.45);
    EXPECT_EQ(group_closure(automorphism_generators(g)),
              as_set(all_automorphisms(g)));
  }
  for (const Graph& g : {make_petersen(), make_cycle(8), make_complete(7),
                         make_hypercube(3), make_star(6)}) {
    EXPECT_EQ(group_closure(automorphism_generators(g)),
              as_set(all_automorphisms(g)));
  }
}

TEST(SearchTest, GroupOrderOfLargerGraphs) {
  // |Aut(C_12)| = 24 and |Aut(Q_4)| = 2^4 4! = 384.
  EXPECT_EQ(group_closure(automorphism_generators(make_cycle(12))).size(), 24u);
  EXPECT_EQ(group_closure(automorphism_generators(make_hypercube(4))).size(), 384u);
}

TEST(SearchTest, HandlesLargeSymmetricGraphs) {
  SearchStats stats;
  auto gens = automorphism_generators(make_hypercube(10), {}, &stats);
  EXPECT_FALSE(gens.empty());
  EXPECT_GT(stats.nodes, 0);
  for (const auto& p : gens) EXPECT_TRUE(is_automorphism(make_hypercube(10), p));
  EXPECT_FALSE(automorphism_generators(make_complete(60)).empty());
  EXPECT_TRUE(automorphism_generators(make_empty(0)).empty());
}

TEST(SearchTest, NodeBudgetIsEnforced) {
  SearchOptions tight;
  tight.node_budget = 3;
  EXPECT_THROW(automorphism_generators(make_petersen(), tight),
               ResourceLimitError);
}

TEST(SearchTest, Deterministic) {
  Graph g = cartesian_product(make_path(4), make_cycle(5)).graph;
  auto a = automorphism_generators(g);
  auto b = automorphism_generators(g);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

}  // namespace
}  // namespace orbitkit
