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

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbitkit/automorphism.hpp"
#include "orbitkit/graph.hpp"

namespace orbitkit {

// The quotient V / Aut(G). Orbits are listed by ascending representative,
// the representative of an orbit being its smallest vertex; vertices inside
// an orbit are ascending. Computing this is the expensive step, so callers
// that need several orbit queries on one graph build it once and pass it
// around.
struct OrbitPartition {
  int n = 0;
  std::vector<int> orbit_of;                // vertex -> orbit index
  std::vector<std::vector<Vertex>> orbits;  // disjoint, nonempty, cover V
  std::vector<Vertex> representatives;      // representatives[i] = orbits[i][0]

  int r() const { return static_cast<int>(orbits.size()); }
  bool same_orbit(Vertex u, Vertex v) const {
    return orbit_of[u] == orbit_of[v];
  }

  friend bool operator==(const OrbitPartition&,
                         const OrbitPartition&) = default;
};

// Orbits of the group generated by `gens`: connected components of the
// union of the generators' functional graphs.
OrbitPartition orbit_partition(const AutGenerators& gens);

// Orbits of an explicitly enumerated group (for example the output of
// all_automorphisms()), read off directly as {s(v) : s in group}. The list
// must be closed under composition; no closure is taken.
OrbitPartition orbit_partition(int n, std::span<const Permutation> group);

// Searches Aut(g) and returns its orbit partition. Propagates
// ResourceLimitError.
OrbitPartition compute_orbits(const Graph& g, const SearchOptions& options = {});

// Number of orbits; 1 iff g is vertex-transitive (or has at most one vertex).
int transitivity_number(const Graph& g, const SearchOptions& options = {});

// True iff some automorphism maps u to v. Throws std::out_of_range for
// invalid vertices.
bool interchangeable(const Graph& g, Vertex u, Vertex v,
                     const SearchOptions& options = {});
bool interchangeable(const OrbitPartition& orbits, Vertex u, Vertex v);

// Smallest vertex of each orbit, ascending.
std::vector<Vertex> representatives(const Graph& g,
                                    const SearchOptions& options = {});

// The orbit containing v, ascending. Throws std::out_of_range for an invalid
// vertex.
std::vector<Vertex> orbit_of_vertex(const Graph& g, Vertex v,
                                    const SearchOptions& options = {});
const std::vector<Vertex>& orbit_of_vertex(const OrbitPartition& orbits,
                                           Vertex v);

// {"n", "r", "orbits", "representatives"} in that key order.
nlohmann::ordered_json to_json(const OrbitPartition& orbits);
// Human-readable listing, one orbit per line.
std::string to_table(const OrbitPartition& orbits);

}  // namespace orbitkit
