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

#include "orbitkit/generators.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace orbitkit {
namespace {

void require(bool ok, const char* what, int value) {
  if (!ok) {
    throw std::invalid_argument(std::string(what) + ": invalid size " +
                                std::to_string(value));
  }
}

}  // namespace

Graph make_path(int n) {
  require(n >= 1 && n <= kMaxVertices, "make_path", n);
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph make_cycle(int n) {
  require(n >= 3 && n <= kMaxVertices, "make_cycle", n);
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph make_complete(int n) {
  require(n >= 1 && n <= 1 << 14, "make_complete", n);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph make_empty(int n) {
  require(n >= 0 && n <= kMaxVertices, "make_empty", n);
  return Graph::from_edges(n, {});
}

Graph make_hypercube(int k) {
  require(k >= 1 && k <= 20, "make_hypercube", k);
  const int n = 1 << k;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < k; ++bit) {
      int w = v ^ (1 << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph make_complete_multipartite(std::span<const int> parts) {
  require(!parts.empty(), "make_complete_multipartite", 0);
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p] >= 1, "make_complete_multipartite", parts[p]);
    part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
    require(part_of.size() <= (1u << 14), "make_complete_multipartite",
            static_cast<int>(part_of.size()));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph make_star(int leaves) {
  require(leaves >= 1, "make_star", leaves);
  const int parts[] = {1, leaves};
  return make_complete_multipartite(parts);
}

Graph make_petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, edges);
}

}  // namespace orbitkit
