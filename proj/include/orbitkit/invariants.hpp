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
#include <string_view>
#include <vector>

#include "json.hpp"
#include "orbitkit/graph.hpp"
#include "orbitkit/orbits.hpp"
#include "orbitkit/rational.hpp"

namespace orbitkit {

// Vertex properties preserved by every automorphism. The distance-based ones
// throw DisconnectedGraphError on a disconnected graph.
int degree(const Graph& g, Vertex v);
int eccentricity(const Graph& g, Vertex v);
std::int64_t total_distance(const Graph& g, Vertex v);

// Sum over unordered pairs {s, t} not containing v of the fraction of
// shortest s-t paths passing through v. Exact; computed from one BFS out of
// v and one out of every other vertex, so O(n m) per vertex.
Rational betweenness(const Graph& g, Vertex v);

using PropertyFn = Rational (*)(const Graph&, Vertex);

struct PropertyDef {
  std::string_view name;
  bool requires_connectivity;
  PropertyFn evaluate;
};

// degree, eccentricity, total_distance, betweenness.
std::span<const PropertyDef> property_catalog();
// Throws UnknownPropertyError.
const PropertyDef& find_property(std::string_view name);

struct OrbitValue {
  Vertex representative;
  Rational value;

  friend bool operator==(const OrbitValue&, const OrbitValue&) = default;
};

struct PropertyTable {
  std::string property_name;
  std::vector<OrbitValue> per_orbit;  // one entry per orbit, orbit order
  std::vector<Rational> expanded;     // per-vertex values
  int evaluations = 0;                // calls to the property function
};

// Evaluates the property at every vertex.
PropertyTable evaluate_property_naive(const Graph& g,
                                      const OrbitPartition& orbits,
                                      std::string_view property);

// Evaluates the property once per orbit, at its representative, and copies
// the value to the rest of the orbit.
PropertyTable evaluate_property_fast(const Graph& g,
                                     const OrbitPartition& orbits,
                                     std::string_view property);

// Number of distinct values over all vertices.
int distinct_value_count(const PropertyTable& table);

// {"property", "r", "per_orbit": [{"rep", "value"}], "distinct_values"}.
// Integer values are JSON numbers, fractions are "p/q" strings.
nlohmann::ordered_json property_report(const PropertyTable& table, int r);

struct VertexSetResult {
  std::string name;
  std::vector<Vertex> members;  // ascending
  bool orbit_closed = false;
};

// Minimum eccentricity, minimum total distance and maximum betweenness
// vertices. All vertices are evaluated; orbit_closed is then checked against
// `orbits`, not assumed.
VertexSetResult center(const Graph& g, const OrbitPartition& orbits);
VertexSetResult median(const Graph& g, const OrbitPartition& orbits);
VertexSetResult betweenness_center(const Graph& g, const OrbitPartition& orbits);

// True iff `s` is a union of whole orbits. Throws std::out_of_range for a
// vertex outside the graph.
bool verify_orbit_closure(const OrbitPartition& orbits,
                          std::span<const Vertex> s);
bool verify_orbit_closure(const Graph& g, std::span<const Vertex> s,
                          const SearchOptions& options = {});

}  // namespace orbitkit
