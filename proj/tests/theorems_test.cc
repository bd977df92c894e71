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

#include "orbitkit/theorems.hpp"

#include <gtest/gtest.h>

#include <map>
#include <stdexcept>
#include <vector>

#include "orbitkit/errors.hpp"
#include "orbitkit/generators.hpp"
#include "orbitkit/io.hpp"
#include "test_support.hpp"

namespace orbitkit {
namespace {

TEST(TheoremIdTest, Names) {
  for (auto id : {TheoremId::kPathProduct, TheoremId::kPathSquare,
                  TheoremId::kProductGeneral, TheoremId::kProductIsomorphic}) {
    EXPECT_EQ(parse_theorem_id(to_string(id)), id);
  }
  EXPECT_FALSE(parse_theorem_id("nosuch").has_value());
}

TEST(PathTheoremsTest, PathProduct) {
  auto instance = check_path_product(3, 5);
  EXPECT_EQ(instance.factors, "P_3 x P_5");
  EXPECT_EQ(instance.predicted, 6);
  EXPECT_EQ(instance.computed, 6);
  EXPECT_TRUE(instance.pass);
  EXPECT_TRUE(instance.within_bound);
  EXPECT_FALSE(instance.oracle.has_value());  // 15 vertices
  EXPECT_THROW(check_path_product(4, 4), std::invalid_argument);
  EXPECT_THROW(check_path_product(0, 4), std::invalid_argument);

  auto small = check_path_product(2, 4);
  ASSERT_TRUE(small.oracle.has_value());
  EXPECT_EQ(*small.oracle, small.computed);
}

TEST(PathTheoremsTest, SmallPathProducts) {
  auto grid = check_path_product(2, 3);
  EXPECT_EQ(grid.predicted, 2);
  EXPECT_EQ(grid.computed, 2);
  ASSERT_TRUE(grid.oracle.has_value());
  EXPECT_EQ(*grid.oracle, 2);
  for (int n = 2; n <= 9; ++n) {
    auto trivial = check_path_product(1, n);
    EXPECT_EQ(trivial.predicted, (n + 1) / 2);
    EXPECT_TRUE(trivial.pass);
  }
}

TEST(PathTheoremsTest, ThreeByThreeGridHasThreeOrbits) {
  auto instance = check_path_square(3);
  EXPECT_EQ(instance.predicted, 3);
  EXPECT_EQ(instance.computed, 3);
  EXPECT_TRUE(instance.pass);
}

TEST(PathTheoremsTest, OtherSquares) {
  auto c4 = check_path_square(2);
  EXPECT_EQ(c4.predicted, 1);
  EXPECT_EQ(c4.computed, 1);
  auto four = check_path_square(4);
  EXPECT_EQ(four.predicted, 3);
  EXPECT_EQ(four.computed, 3);
}

TEST(PathTheoremsTest, Reports) {
  auto product = verify_path_product(5);
  EXPECT_EQ(product.instances.size(), 10u);
  EXPECT_EQ(product.pass_count(), 10);
  auto square = verify_path_square(5);
  EXPECT_EQ(square.instances.size(), 5u);
  EXPECT_TRUE(square.counterexamples().empty());
}

TEST(ProductTheoremTest, LadderFactorIsACounterexample) {
  NamedGraph p3{"P_3", make_path(3)};
  NamedGraph ladder{"P_3 x K_2",
                    cartesian_product(make_path(3), make_complete(2)).graph};
  auto instance = check_product_theorem(p3, ladder, ProductKind::kCartesian);
  EXPECT_EQ(instance.predicted, 4);
  EXPECT_EQ(instance.computed, 3);
  EXPECT_FALSE(instance.pass);
  EXPECT_TRUE(instance.within_bound);
  EXPECT_NE(instance.note.find("factors non-isomorphic"), std::string::npos);

  TheoremReport report;
  report.id = TheoremId::kProductGeneral;
  report.instances.push_back(instance);
  auto json = to_json(report);
  EXPECT_EQ(json["summary"]["fail"], 1);
  EXPECT_EQ(json["summary"]["bound_violations"], 0);
  EXPECT_EQ(json["counterexamples"][0],
            "P_3 x P_3 x K_2 (cartesian): predicted 4, computed 3");
}

TEST(ProductTheoremTest, PassingInstances) {
  NamedGraph k2{"K_2", make_complete(2)};
  NamedGraph k3{"K_3", make_complete(3)};
  NamedGraph p3{"P_3", make_path(3)};
  auto grid = check_product_theorem(k2, p3, ProductKind::kCartesian);
  EXPECT_EQ(grid.predicted, 2);
  EXPECT_EQ(grid.computed, 2);
  ASSERT_TRUE(grid.oracle.has_value());
  EXPECT_EQ(*grid.oracle, 2);
  auto complete = check_product_theorem(k2, k3, ProductKind::kStrong);
  EXPECT_EQ(complete.predicted, 1);
  EXPECT_EQ(complete.computed, 1);
  EXPECT_TRUE(complete.pass);
}

TEST(ProductTheoremTest, RejectsBadInput) {
  NamedGraph p3{"P_3", make_path(3)};
  NamedGraph split{"2K_1", make_empty(2)};
  EXPECT_THROW(check_product_theorem(p3, split, ProductKind::kCartesian),
               DisconnectedGraphError);
  EXPECT_THROW(check_product_theorem(p3, p3, ProductKind::kCorona),
               std::invalid_argument);
}

TEST(ProductTheoremTest, IsomorphicCorollary) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& instance :
         check_isomorphic_corollary({"P_" + std::to_string(n), make_path(n)})) {
      EXPECT_TRUE(instance.pass) << instance.factors;
    }
  }
  auto k3 = check_isomorphic_corollary({"K_3", make_complete(3)});
  EXPECT_EQ(k3[0].predicted, 1);
  EXPECT_TRUE(k3[0].pass);
  auto p4 = check_isomorphic_corollary({"P_4", make_path(4)});
  EXPECT_EQ(p4[1].kind, ProductKind::kStrong);
  EXPECT_EQ(p4[1].predicted, 3);
  EXPECT_EQ(p4[1].computed, 3);
  auto petersen = check_isomorphic_corollary({"Petersen", make_petersen()});
  ASSERT_EQ(petersen.size(), 2u);
  EXPECT_EQ(petersen[0].kind, ProductKind::kCartesian);
  EXPECT_EQ(petersen[1].kind, ProductKind::kStrong);
  EXPECT_EQ(petersen[0].computed, 1);
  EXPECT_EQ(petersen[1].computed, 1);
}

TEST(CounterexampleSearchTest, SmallCorpusStaysWithinBound) {
  const auto& corpus = testing::corpus(4);
  for (auto kind : {ProductKind::kCartesian, ProductKind::kStrong}) {
    auto report = counterexample_search(corpus, 4, kind);
    // 10 graphs give 45 unordered pairs, none isomorphic.
    EXPECT_EQ(report.instances.size() + report.skipped.size(), 45u);
    for (const auto& instance : report.instances) {
      EXPECT_TRUE(instance.within_bound) << instance.factors;
      if (instance.oracle) {
        EXPECT_EQ(*instance.oracle, instance.computed);
      }
    }
  }
}

TEST(CounterexampleSearchTest, SingleVertexBoundHasNoPairs) {
  auto report = counterexample_search(testing::corpus(4), 1, ProductKind::kCartesian);
  EXPECT_TRUE(report.instances.empty());
  EXPECT_TRUE(report.counterexamples().empty());
}

TEST(CounterexampleSearchTest, RejectsOutOfRangeBound) {
  EXPECT_THROW(counterexample_search(testing::corpus(4), 9, ProductKind::kCartesian),
               std::invalid_argument);
  EXPECT_THROW(counterexample_search(testing::corpus(4), 0, ProductKind::kCartesian),
               std::invalid_argument);
}

TEST(CounterexampleSearchTest, SixVertexFactorsStayWithinBound) {
  auto report = counterexample_search(testing::corpus(6), 6, ProductKind::kStrong);
  EXPECT_TRUE(report.skipped.empty());
  for (const auto& instance : report.instances) {
    EXPECT_TRUE(instance.within_bound) << instance.factors;
  }
  const auto counterexamples = report.counterexamples();
  ASSERT_EQ(counterexamples.size(), 1u);
  // P_3 against the strong ladder P_3 x K_2.
  EXPECT_EQ(counterexamples[0].factors.substr(0, 2), "BW");
  EXPECT_EQ(counterexamples[0].computed, 3);
}

TEST(CorpusTest, CountsOfConnectedGraphs) {
  std::map<int, int> per_size;
  for (const auto& [name, g] : testing::corpus(8)) {
    EXPECT_TRUE(is_connected(g)) << name;
    ++per_size[g.num_vertices()];
  }
  EXPECT_EQ(per_size, (std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {4, 6},
                                          {5, 21}, {6, 112}, {7, 853},
                                          {8, 11117}}));
}

TEST(CorpusTest, MissingDirectory) {
  EXPECT_THROW(load_corpus("/nonexistent/orbitkit", 3), CorpusError);
}

TEST(ReportTest, TableLayout) {
  auto text = to_table(verify_path_square(2));
  EXPECT_EQ(text.rfind("theorem path-square\nfactors", 0), 0u);
  EXPECT_NE(text.find("instances 2, pass 2, fail 0, bound violations 0\n"),
            std::string::npos);
}

}  // namespace
}  // namespace orbitkit
