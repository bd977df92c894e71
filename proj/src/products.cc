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

#include "orbitkit/products.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "orbitkit/errors.hpp"

namespace orbitkit {
namespace {

void require_nonempty(const Graph& g, const char* which) {
  if (g.num_vertices() == 0) {
    throw std::invalid_argument(std::string("product factor ") + which +
                                " must have at least one vertex");
  }
}

void check_size(std::int64_t n, const ProductOptions& options) {
  const std::int64_t limit = std::min(options.max_vertices, kMaxVertices);
  if (n > limit) throw SizeLimitError(n, limit);
}

// Cartesian edges, plus the diagonal ones when `diagonal` is set.
ProductGraph grid_product(const Graph& g, const Graph& h, bool diagonal,
                          const ProductOptions& options) {
  require_nonempty(g, "G");
  require_nonempty(h, "H");
  const std::int64_t ng = g.num_vertices();
  const std::int64_t nh = h.num_vertices();
  check_size(ng * nh, options);
  ProductVertexMap map(diagonal ? ProductKind::kStrong : ProductKind::kCartesian,
                       g.num_vertices(), h.num_vertices());
  const auto g_edges = g.edges();
  const auto h_edges = h.edges();

  std::vector<Edge> edges;
  for (Vertex x = 0; x < ng; ++x) {
    for (const auto& [y1, y2] : h_edges) {
      edges.emplace_back(map.encode(x, y1), map.encode(x, y2));
    }
  }
  for (const auto& [x1, x2] : g_edges) {
    for (Vertex y = 0; y < nh; ++y) {
      edges.emplace_back(map.encode(x1, y), map.encode(x2, y));
    }
  }
  if (diagonal) {
    for (const auto& [x1, x2] : g_edges) {
      for (const auto& [y1, y2] : h_edges) {
        edges.emplace_back(map.encode(x1, y1), map.encode(x2, y2));
        edges.emplace_back(map.encode(x1, y2), map.encode(x2, y1));
      }
    }
  }
  return {Graph::from_edges(map.num_vertices(), edges), map};
}

}  // namespace

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::kCartesian:
      return "cartesian";
    case ProductKind::kStrong:
      return "strong";
    case ProductKind::kCorona:
      return "corona";
    case ProductKind::kJoin:
      return "join";
  }
  return "?";
}

std::optional<ProductKind> parse_product_kind(std::string_view name) {
  for (auto kind : {ProductKind::kCartesian, ProductKind::kStrong,
                    ProductKind::kCorona, ProductKind::kJoin}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

int ProductVertexMap::num_vertices() const {
  switch (kind_) {
    case ProductKind::kCartesian:
    case ProductKind::kStrong:
      return n_g_ * n_h_;
    case ProductKind::kCorona:
      return n_g_ * (1 + n_h_);
    case ProductKind::kJoin:
      return n_g_ + n_h_;
  }
  return 0;
}

Vertex ProductVertexMap::encode(Vertex x, Vertex y) const {
  auto bad = [&]() {
    return std::out_of_range("no product vertex at (" + std::to_string(x) +
                             "," + std::to_string(y) + ")");
  };
  switch (kind_) {
    case ProductKind::kCartesian:
    case ProductKind::kStrong:
      if (x < 0 || x >= n_g_ || y < 0 || y >= n_h_) throw bad();
      return x * n_h_ + y;
    case ProductKind::kCorona:
      if (x < 0 || x >= n_g_ || y < kNoVertex || y >= n_h_) throw bad();
      return y == kNoVertex ? x : n_g_ + x * n_h_ + y;
    case ProductKind::kJoin:
      if (x != kNoVertex && y == kNoVertex && x >= 0 && x < n_g_) return x;
      if (x == kNoVertex && y >= 0 && y < n_h_) return n_g_ + y;
      throw bad();
  }
  throw bad();
}

std::pair<Vertex, Vertex> ProductVertexMap::decode(Vertex v) const {
  if (v < 0 || v >= num_vertices()) {
    throw std::out_of_range("product vertex " + std::to_string(v) +
                            " out of range");
  }
  switch (kind_) {
    case ProductKind::kCartesian:
    case ProductKind::kStrong:
      return {v / n_h_, v % n_h_};
    case ProductKind::kCorona:
      if (v < n_g_) return {v, kNoVertex};
      return {(v - n_g_) / n_h_, (v - n_g_) % n_h_};
    case ProductKind::kJoin:
      if (v < n_g_) return {v, kNoVertex};
      return {kNoVertex, v - n_g_};
  }
  return {kNoVertex, kNoVertex};
}

std::string ProductVertexMap::label(Vertex v) const {
  const auto [x, y] = decode(v);
  switch (kind_) {
    case ProductKind::kCartesian:
    case ProductKind::kStrong:
      return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    case ProductKind::kCorona:
      if (y == kNoVertex) return "g:" + std::to_string(x);
      return std::to_string(x) + "/" + std::to_string(y);
    case ProductKind::kJoin:
      if (y == kNoVertex) return "g:" + std::to_string(x);
      return "h:" + std::to_string(y);
  }
  return "?";
}

ProductGraph cartesian_product(const Graph& g, const Graph& h,
                               const ProductOptions& options) {
  return grid_product(g, h, /*diagonal=*/false, options);
}

ProductGraph strong_product(const Graph& g, const Graph& h,
                            const ProductOptions& options) {
  return grid_product(g, h, /*diagonal=*/true, options);
}

ProductGraph corona_product(const Graph& g, const Graph& h,
                            const ProductOptions& options) {
  require_nonempty(g, "G");
  const std::int64_t ng = g.num_vertices();
  const std::int64_t nh = h.num_vertices();
  check_size(ng * (1 + nh), options);
  ProductVertexMap map(ProductKind::kCorona, g.num_vertices(), h.num_vertices());

  auto edges = g.edges();
  const auto h_edges = h.edges();
  for (Vertex x = 0; x < ng; ++x) {
    for (const auto& [y1, y2] : h_edges) {
      edges.emplace_back(map.encode(x, y1), map.encode(x, y2));
    }
    for (Vertex y = 0; y < nh; ++y) edges.emplace_back(x, map.encode(x, y));
  }
  return {Graph::from_edges(map.num_vertices(), edges), map};
}

ProductGraph join(const Graph& g, const Graph& h,
                  const ProductOptions& options) {
  require_nonempty(g, "G");
  require_nonempty(h, "H");
  const std::int64_t ng = g.num_vertices();
  const std::int64_t nh = h.num_vertices();
  check_size(ng + nh, options);
  ProductVertexMap map(ProductKind::kJoin, g.num_vertices(), h.num_vertices());

  auto edges = g.edges();
  for (const auto& [y1, y2] : h.edges()) {
    edges.emplace_back(map.encode(kNoVertex, y1), map.encode(kNoVertex, y2));
  }
  for (Vertex x = 0; x < ng; ++x) {
    for (Vertex y = 0; y < nh; ++y) {
      edges.emplace_back(x, map.encode(kNoVertex, y));
    }
  }
  return {Graph::from_edges(map.num_vertices(), edges), map};
}

ProductGraph make_product(ProductKind kind, const Graph& g, const Graph& h,
                          const ProductOptions& options) {
  switch (kind) {
    case ProductKind::kCartesian:
      return cartesian_product(g, h, options);
    case ProductKind::kStrong:
      return strong_product(g, h, options);
    case ProductKind::kCorona:
      return corona_product(g, h, options);
    case ProductKind::kJoin:
      return join(g, h, options);
  }
  throw std::invalid_argument("unknown product kind");
}

}  // namespace orbitkit
