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
#include <span>
#include <utility>
#include <vector>

namespace orbitkit {

// Vertices are dense ids 0..n-1. External formats are translated to this at
// the boundary.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Graphs larger than this are rejected by every constructor.
inline constexpr std::int64_t kMaxVertices = std::int64_t{1} << 20;

// Immutable simple undirected graph in compressed adjacency form. Neighbour
// lists are sorted ascending. Connectivity is not required; operations that
// need it check it themselves.
class Graph {
 public:
  // The empty graph on zero vertices.
  Graph() : offsets_(1, 0) {}

  // Builds the graph on `n` vertices with the given undirected edges. Each
  // pair may appear in either orientation. Throws std::invalid_argument on a
  // self-loop, a repeated edge or an endpoint outside [0, n).
  static Graph from_edges(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(offsets_.size()) - 1; }
  std::int64_t num_edges() const {
    return static_cast<std::int64_t>(targets_.size()) / 2;
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  int degree(Vertex v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(Vertex u, Vertex v) const;

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::int64_t> offsets_;
  std::vector<Vertex> targets_;
};

bool is_connected(const Graph& g);

// Sorted degree sequence (ascending).
std::vector<int> degree_sequence(const Graph& g);

// Breadth-first distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Re-checks the representation invariants: symmetric adjacency, no loops, no
// repeated neighbours, sorted lists. Used by tests on constructed graphs.
bool is_valid(const Graph& g);

}  // namespace orbitkit
