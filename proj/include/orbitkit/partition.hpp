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
#include <span>
#include <string>
#include <vector>

#include "orbitkit/graph.hpp"

namespace orbitkit {

class Refiner;

// Ordered sequence of disjoint nonempty cells covering 0..n-1.
//
// Cells are stored contiguously in one array of vertices; a cell is
// identified by the position of its first element, so splitting a cell never
// renumbers the others. Vertex order inside a cell carries no meaning.
class OrderedPartition {
 public:
  OrderedPartition() = default;

  // Single cell holding every vertex.
  static OrderedPartition unit(int n);

  // Validates that `cells` are nonempty, disjoint and cover 0..n-1; throws
  // std::invalid_argument otherwise.
  OrderedPartition(int n, const std::vector<std::vector<Vertex>>& cells);

  int num_vertices() const { return static_cast<int>(elements_.size()); }
  int num_cells() const { return num_cells_; }
  bool is_discrete() const { return num_cells_ == num_vertices(); }

  // Cells in order, each sorted ascending.
  std::vector<std::vector<Vertex>> cells() const;

  // Position-based access. `start` must be the first position of a cell.
  int cell_start(Vertex v) const { return cell_start_[v]; }
  int cell_end(int start) const { return cell_end_[start]; }
  std::span<const Vertex> cell_at(int start) const {
    return {elements_.data() + start,
            static_cast<std::size_t>(cell_end_[start] - start)};
  }
  bool same_cell(Vertex u, Vertex v) const {
    return cell_start_[u] == cell_start_[v];
  }

  // Start of the first cell with more than one vertex, if any.
  std::optional<int> first_nonsingleton_cell() const;

  // Copy with `v` split off its cell as a singleton placed in front of the
  // remainder.
  OrderedPartition individualize(Vertex v) const;

  // The vertex sequence; for a discrete partition this is the labelling.
  std::span<const Vertex> elements() const { return elements_; }

  // Every cell of *this lies inside a cell of `other`.
  bool is_finer_or_equal(const OrderedPartition& other) const;

  // Same cells in the same order.
  friend bool operator==(const OrderedPartition& a, const OrderedPartition& b) {
    return a.cells() == b.cells();
  }

  // "0 4 | 1 3 | 2"
  std::string to_string() const;

 private:
  friend class Refiner;

  std::vector<Vertex> elements_;
  std::vector<int> position_;    // vertex -> index into elements_
  std::vector<int> cell_start_;  // vertex -> start of its cell
  std::vector<int> cell_end_;    // cell start -> one past its last position
  int num_cells_ = 0;
};

// Coarsest equitable partition finer than `p`: afterwards every vertex of a
// cell has the same number of neighbours in each cell. Idempotent.
OrderedPartition equitable_refine(const Graph& g, const OrderedPartition& p);

// Refinement engine shared with the automorphism search.
//
// Splitter cells are taken smallest first (ties by position). A touched cell
// is split by neighbour count into the splitter, fragments in ascending count
// order. Everything that decides cell order depends on positions and counts
// only, never on vertex ids, so refinement commutes with relabelling: for any
// automorphism s, refining s(p) yields s(refine(p)) with the same trace.
class Refiner {
 public:
  explicit Refiner(const Graph& g);

  // Refines `p` in place with the given cells (by start position) as initial
  // splitters and returns a hash of the split sequence. Requires that `p` is
  // already equitable with respect to every cell not listed.
  std::uint64_t refine(OrderedPartition& p, std::span<const int> seed_starts);

  // Refines with every cell as a splitter.
  std::uint64_t refine_all(OrderedPartition& p);

 private:
  const Graph& graph_;
  std::vector<int> count_;
  std::vector<Vertex> touched_;
  std::vector<int> touched_cells_;
  std::vector<char> cell_touched_;
  std::vector<char> in_worklist_;
};

}  // namespace orbitkit
