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

#include "orbitkit/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orbitkit {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count out of range: " +
                                std::to_string(n));
  }
  std::vector<std::int64_t> degree(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::int64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + g.offsets_[v];
    auto last = g.targets_.begin() + g.offsets_[v + 1];
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw std::invalid_argument("duplicate edge " + std::to_string(v) + " " +
                                  std::to_string(*dup));
    }
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) out[v] = g.degree(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.num_vertices());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_valid(const Graph& g) {
  const int n = g.num_vertices();
  std::int64_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    total += static_cast<std::int64_t>(nbrs.size());
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      Vertex w = nbrs[i];
      if (w < 0 || w >= n || w == v) return false;
      if (i > 0 && nbrs[i - 1] >= w) return false;
      auto back = g.neighbors(w);
      if (!std::binary_search(back.begin(), back.end(), v)) return false;
    }
  }
  return total == 2 * g.num_edges();
}

}  // namespace orbitkit
