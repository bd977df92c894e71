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
#include <string>
#include <vector>

#include "orbitkit/graph.hpp"

namespace orbitkit {

// A bijection on 0..n-1, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless `image` is a bijection on
  // 0..image.size()-1.
  explicit Permutation(std::vector<Vertex> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  std::span<const Vertex> image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;
  // (a * b)(v) = a(b(v)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  // Cycle notation without fixed points, e.g. "(0 3)(1 2)"; "()" for the
  // identity.
  std::string to_string() const;

 private:
  std::vector<Vertex> image_;
};

// A set of automorphisms generating (a subgroup of) Aut(G). The identity is
// never stored.
class AutGenerators {
 public:
  explicit AutGenerators(int n = 0) : n_(n) {}

  // Ignores the identity; throws std::invalid_argument on a size mismatch.
  void add(Permutation p);

  int num_vertices() const { return n_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const Permutation& operator[](std::size_t i) const { return gens_[i]; }
  auto begin() const { return gens_.begin(); }
  auto end() const { return gens_.end(); }

 private:
  int n_;
  std::vector<Permutation> gens_;
};

struct SearchOptions {
  // Maximum number of search-tree nodes (refined partitions) visited before
  // the search gives up with ResourceLimitError.
  std::int64_t node_budget = 1'000'000;
};

struct SearchStats {
  std::int64_t nodes = 0;
  std::int64_t leaves = 0;
};

// {u,v} in E iff {s(u), s(v)} in E. Throws std::invalid_argument when the
// sizes differ.
bool is_automorphism(const Graph& g, const Permutation& s);

// Generators for Aut(G) by individualization-refinement.
//
// The search follows the leftmost path of the tree (individualize the
// smallest vertex of the first non-singleton cell, refine) to a first leaf.
// Then, from the deepest level upwards, each other child of a first-path node
// is searched for a leaf that induces an automorphism, unless the child is
// already in the orbit of a handled sibling under the automorphisms found so
// far that fix the path prefix. Subtrees whose refinement trace differs from
// the first path are pruned. The automorphisms found generate all of Aut(G);
// no attempt is made to keep the set minimal. Deterministic for a fixed
// graph.
//
// Throws ResourceLimitError when more than options.node_budget nodes are
// visited.
AutGenerators automorphism_generators(const Graph& g,
                                      const SearchOptions& options = {},
                                      SearchStats* stats = nullptr);

inline constexpr int kBruteForceMaxVertices = 10;

// Every automorphism of g, identity included, in lexicographic order of the
// image arrays. Exhaustive over all n! vertex permutations, abandoning a
// partial map as soon as it breaks adjacency. Throws std::invalid_argument
// for n > kBruteForceMaxVertices.
std::vector<Permutation> all_automorphisms(const Graph& g);

// all_automorphisms() without the identity, packed as generators.
AutGenerators brute_force_automorphisms(const Graph& g);

}  // namespace orbitkit
