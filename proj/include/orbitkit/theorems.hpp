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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "orbitkit/automorphism.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/graph.hpp"
#include "orbitkit/products.hpp"

// Empirical checks of transitivity-number formulas for graph products.
//
// Path sizes are vertex counts, so r(P_n) = ceil(n / 2). A mismatch between a
// predicted and a computed transitivity number is reported as data (a FAIL
// instance) and never raised as an error.
namespace orbitkit {

enum class TheoremId {
  kPathProduct,       // r(P_m x P_n) = r(P_m) r(P_n) for m != n
  kPathSquare,        // r(P_n x P_n) = r (r + 1) / 2 with r = r(P_n)
  kProductGeneral,    // r(G * H) = r(G) r(H) for non-isomorphic G, H
  kProductIsomorphic  // r(G * G) = r (r + 1) / 2 with r = r(G)
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);

struct TheoremInstance {
  std::string factors;  // e.g. "P_3 x P_5" or "C~ x Bw"
  ProductKind kind = ProductKind::kCartesian;
  std::int64_t predicted = 0;
  std::int64_t computed = 0;
  // Transitivity number from the exhaustive automorphism enumeration, when
  // the product is small enough.
  std::optional<std::int64_t> oracle;
  bool pass = false;          // computed == predicted
  bool within_bound = false;  // computed <= predicted
  std::string note;
};

struct TheoremReport {
  TheoremId id = TheoremId::kPathProduct;
  std::vector<TheoremInstance> instances;
  std::vector<std::string> skipped;  // instances that could not be decided

  // Instances whose computed value differs from the prediction.
  std::vector<TheoremInstance> counterexamples() const;
  int pass_count() const;
};

struct HarnessOptions {
  SearchOptions search;
  // Products up to this many vertices are cross-checked against the
  // factorial oracle.
  int oracle_max_vertices = 8;
};

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Requires m != n, both >= 1 (std::invalid_argument otherwise).
TheoremInstance check_path_product(int m, int n,
                                   const HarnessOptions& options = {});
// Requires n >= 1.
TheoremInstance check_path_square(int n, const HarnessOptions& options = {});
// Requires connected factors and kind in {cartesian, strong}. Predicts
// r(G) r(H); the note records whether the factors are isomorphic.
TheoremInstance check_product_theorem(const NamedGraph& g, const NamedGraph& h,
                                      ProductKind kind,
                                      const HarnessOptions& options = {});
// One instance per product kind (cartesian, then strong).
std::vector<TheoremInstance> check_isomorphic_corollary(
    const NamedGraph& g, const HarnessOptions& options = {});

// Largest factor size accepted by counterexample_search; products stay at
// most 64 vertices.
inline constexpr int kMaxSearchFactorVertices = 8;

// Every pair of distinct corpus graphs with at most `max_factor_vertices`
// vertices (1..kMaxSearchFactorVertices, std::invalid_argument otherwise),
// in corpus order. Pairs found to be isomorphic, or that cannot
// be decided, are listed as skipped.
TheoremReport counterexample_search(std::span<const NamedGraph> corpus,
                                    int max_factor_vertices, ProductKind kind,
                                    const HarnessOptions& options = {});

// Report builders used by the command-line `verify` subcommand.
TheoremReport verify_path_product(int max_n, const HarnessOptions& options = {});
TheoremReport verify_path_square(int max_n, const HarnessOptions& options = {});
TheoremReport verify_product_isomorphic(std::span<const NamedGraph> corpus,
                                        int max_factor_vertices,
                                        const HarnessOptions& options = {});

class CorpusError : public Error {
 public:
  using Error::Error;
};

// Reads connected_<n>.g6 for n = 1..max_n from `dir`; one graph6 record per
// line, named by the record. Throws CorpusError for a missing file and
// ParseError for a bad record.
std::vector<NamedGraph> load_corpus(const std::filesystem::path& dir,
                                    int max_n);

nlohmann::ordered_json to_json(const TheoremReport& report);
std::string to_table(const TheoremReport& report);

}  // namespace orbitkit
