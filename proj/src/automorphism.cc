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

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>

#include "orbitkit/disjoint_set.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/partition.hpp"

namespace orbitkit {

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (Vertex v : image_) {
    if (v < 0 || v >= size() || seen[v]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v) {
    if (image_[v] != v) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(image_.size());
  for (int v = 0; v < size(); ++v) inv[image_[v]] = v;
  Permutation out;
  out.image_ = std::move(inv);
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("composing permutations of different sizes");
  }
  Permutation out;
  out.image_.resize(a.image_.size());
  for (int v = 0; v < a.size(); ++v) out.image_[v] = a.image_[b.image_[v]];
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<char> done(image_.size(), 0);
  for (int v = 0; v < size(); ++v) {
    if (done[v] || image_[v] == v) continue;
    out += '(';
    for (int w = v; !done[w]; w = image_[w]) {
      if (w != v) out += ' ';
      out += std::to_string(w);
      done[w] = 1;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

void AutGenerators::add(Permutation p) {
  if (p.size() != n_) {
    throw std::invalid_argument("generator size does not match graph");
  }
  if (!p.is_identity()) gens_.push_back(std::move(p));
}

bool is_automorphism(const Graph& g, const Permutation& s) {
  if (s.size() != g.num_vertices()) {
    throw std::invalid_argument("permutation size " + std::to_string(s.size()) +
                                " does not match graph size " +
                                std::to_string(g.num_vertices()));
  }
  // s is injective and |E| is finite, so mapping every edge onto an edge is
  // enough for s(E) = E.
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (g.degree(s(u)) != g.degree(u)) return false;
    for (Vertex w : g.neighbors(u)) {
      if (u < w && !g.has_edge(s(u), s(w))) return false;
    }
  }
  return true;
}

namespace {

// One node of the first path, before its target cell is individualized.
struct PathLevel {
  OrderedPartition partition;
  int target = 0;
  std::vector<Vertex> candidates;  // target cell, ascending
  std::uint64_t child_trace = 0;   // trace of the first-path child
};

class Search {
 public:
  Search(const Graph& g, const SearchOptions& options, SearchStats& stats)
      : graph_(g), options_(options), stats_(stats), refiner_(g) {}

  AutGenerators run() {
    const int n = graph_.num_vertices();
    AutGenerators gens(n);
    if (n <= 1) return gens;

    OrderedPartition node = OrderedPartition::unit(n);
    count_node();
    refiner_.refine_all(node);
    while (auto target = node.first_nonsingleton_cell()) {
      PathLevel level;
      level.partition = node;
      level.target = *target;
      auto cell = node.cell_at(*target);
      level.candidates.assign(cell.begin(), cell.end());
      std::sort(level.candidates.begin(), level.candidates.end());
      node = child(level.partition, level.candidates.front(), level.child_trace);
      path_.push_back(std::move(level));
    }
    ++stats_.leaves;
    first_leaf_.assign(node.elements().begin(), node.elements().end());

    for (int depth = static_cast<int>(path_.size()) - 1; depth >= 0; --depth) {
      const PathLevel& level = path_[depth];

      // Orbits of the found automorphisms that fix the path prefix.
      DisjointSet orbits(n);
      auto fixes_prefix = [&](const Permutation& p) {
        for (int d = 0; d < depth; ++d) {
          Vertex v = path_[d].candidates.front();
          if (p(v) != v) return false;
        }
        return true;
      };
      auto absorb = [&](const Permutation& p) {
        for (Vertex v = 0; v < n; ++v) orbits.unite(v, p(v));
      };
      for (const Permutation& p : gens) {
        if (fixes_prefix(p)) absorb(p);
      }

      std::vector<Vertex> handled = {level.candidates.front()};
      for (std::size_t i = 1; i < level.candidates.size(); ++i) {
        const Vertex w = level.candidates[i];
        bool known = std::any_of(handled.begin(), handled.end(),
                                 [&](Vertex h) { return orbits.same(h, w); });
        if (known) continue;
        handled.push_back(w);

        std::uint64_t trace = 0;
        OrderedPartition start = child(level.partition, w, trace);
        if (trace != level.child_trace) continue;
        if (auto found = search_subtree(start, depth + 1)) {
          absorb(*found);
          gens.add(std::move(*found));
        }
      }
    }
    return gens;
  }

 private:
  void count_node() {
    if (++stats_.nodes > options_.node_budget) {
      throw ResourceLimitError(options_.node_budget);
    }
  }

  OrderedPartition child(const OrderedPartition& p, Vertex v,
                         std::uint64_t& trace) {
    count_node();
    OrderedPartition q = p.individualize(v);
    const int seed[] = {q.cell_start(v)};
    trace = refiner_.refine(q, seed);
    return q;
  }

  // `node` sits at `depth` and matched the first path's trace there. Returns
  // the automorphism from the first leaf to the first equivalent leaf below.
  std::optional<Permutation> search_subtree(const OrderedPartition& node,
                                            int depth) {
    const int levels = static_cast<int>(path_.size());
    if (node.is_discrete()) {
      if (depth != levels) return std::nullopt;
      ++stats_.leaves;
      std::vector<Vertex> image(first_leaf_.size());
      auto leaf = node.elements();
      for (std::size_t i = 0; i < first_leaf_.size(); ++i) {
        image[first_leaf_[i]] = leaf[i];
      }
      Permutation gamma(std::move(image));
      if (is_automorphism(graph_, gamma)) return gamma;
      return std::nullopt;
    }
    if (depth >= levels) return std::nullopt;
    const PathLevel& level = path_[depth];
    auto target = node.first_nonsingleton_cell();
    if (*target != level.target ||
        node.cell_end(*target) != level.partition.cell_end(level.target)) {
      return std::nullopt;
    }
    auto cell = node.cell_at(*target);
    std::vector<Vertex> candidates(cell.begin(), cell.end());
    std::sort(candidates.begin(), candidates.end());
    for (Vertex w : candidates) {
      std::uint64_t trace = 0;
      OrderedPartition next = child(node, w, trace);
      if (trace != level.child_trace) continue;
      if (auto found = search_subtree(next, depth + 1)) return found;
    }
    return std::nullopt;
  }

  const Graph& graph_;
  const SearchOptions& options_;
  SearchStats& stats_;
  Refiner refiner_;
  std::vector<PathLevel> path_;
  std::vector<Vertex> first_leaf_;
};

}  // namespace

AutGenerators automorphism_generators(const Graph& g,
                                      const SearchOptions& options,
                                      SearchStats* stats) {
  if (options.node_budget <= 0) {
    throw std::invalid_argument("node budget must be positive");
  }
  SearchStats local;
  SearchStats& out = stats ? *stats : local;
  out = SearchStats{};
  return Search(g, options, out).run();
}

std::vector<Permutation> all_automorphisms(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kBruteForceMaxVertices) {
    throw std::invalid_argument("brute-force automorphism enumeration is "
                                "limited to " +
                                std::to_string(kBruteForceMaxVertices) +
                                " vertices, got " + std::to_string(n));
  }
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;

  std::vector<Permutation> out;
  std::vector<Vertex> image(n, -1);
  std::vector<char> used(n, 0);
  // Assign images to vertices 0, 1, ... in turn; a partial map survives only
  // while it preserves adjacency and non-adjacency among assigned vertices.
  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.emplace_back(image);
      return;
    }
    for (Vertex t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = adj[v][u] == adj[t][image[u]];
      if (!ok) continue;
      used[t] = 1;
      image[v] = t;
      self(self, v + 1);
      used[t] = 0;
    }
  };
  extend(extend, 0);
  return out;
}

AutGenerators brute_force_automorphisms(const Graph& g) {
  AutGenerators gens(g.num_vertices());
  for (auto& p : all_automorphisms(g)) gens.add(std::move(p));
  return gens;
}

}  // namespace orbitkit
