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
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "orbitkit/graph.hpp"

namespace orbitkit {

enum class ProductKind { kCartesian, kStrong, kCorona, kJoin };

std::string_view to_string(ProductKind kind);
std::optional<ProductKind> parse_product_kind(std::string_view name);

// Sentinel coordinate for vertices that only belong to one factor.
inline constexpr Vertex kNoVertex = -1;

// Vertex layout of a product graph.
//
//   cartesian, strong: (x, y) <-> x * n_h + y
//   corona:            base vertex x          <-> x
//                      vertex y of copy x     <-> n_g + x * n_h + y
//                      decode gives (x, kNoVertex) for base vertices
//   join:              G vertex x <-> x, decoded as (x, kNoVertex)
//                      H vertex y <-> n_g + y, decoded as (kNoVertex, y)
class ProductVertexMap {
 public:
  ProductVertexMap(ProductKind kind, int n_g, int n_h)
      : kind_(kind), n_g_(n_g), n_h_(n_h) {}

  ProductKind kind() const { return kind_; }
  int n_g() const { return n_g_; }
  int n_h() const { return n_h_; }
  int num_vertices() const;

  // Throws std::out_of_range for coordinates that do not name a vertex.
  Vertex encode(Vertex x, Vertex y) const;
  std::pair<Vertex, Vertex> decode(Vertex v) const;

  // "(x,y)", "g:x", "h:y" or "x/y" (copy x of H, vertex y) for the legend.
  std::string label(Vertex v) const;

 private:
  ProductKind kind_;
  int n_g_;
  int n_h_;
};

struct ProductOptions {
  std::int64_t max_vertices = 50'000;
};

struct ProductGraph {
  Graph graph;
  ProductVertexMap map;
};

// Vertex-count preconditions follow each product's definition: both factors
// nonempty, except corona which only needs g nonempty. A product larger than
// options.max_vertices throws SizeLimitError.
ProductGraph cartesian_product(const Graph& g, const Graph& h,
                               const ProductOptions& options = {});
ProductGraph strong_product(const Graph& g, const Graph& h,
                            const ProductOptions& options = {});
ProductGraph corona_product(const Graph& g, const Graph& h,
                            const ProductOptions& options = {});
ProductGraph join(const Graph& g, const Graph& h,
                  const ProductOptions& options = {});

ProductGraph make_product(ProductKind kind, const Graph& g, const Graph& h,
                          const ProductOptions& options = {});

}  // namespace orbitkit
