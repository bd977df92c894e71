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

#include "orbitkit/orbits.hpp"

#include <algorithm>
#include <stdexcept>

#include "orbitkit/disjoint_set.hpp"

namespace orbitkit {
namespace {

// Builds the partition from any vertex -> class-key labelling.
OrbitPartition from_labels(int n, const std::vector<int>& label) {
  OrbitPartition out;
  out.n = n;
  out.orbit_of.assign(n, -1);
  std::vector<int> index_of_label(n, -1);
  // Scanning vertices in ascending order numbers the orbits by their
  // smallest member.
  for (Vertex v = 0; v < n; ++v) {
    int& index = index_of_label[label[v]];
    if (index < 0) {
      index = static_cast<int>(out.orbits.size());
      out.orbits.emplace_back();
      out.representatives.push_back(v);
    }
    out.orbit_of[v] = index;
    out.orbits[index].push_back(v);
  }
  return out;
}

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

OrbitPartition orbit_partition(const AutGenerators& gens) {
  const int n = gens.num_vertices();
  DisjointSet sets(n);
  for (const Permutation& p : gens) {
    for (Vertex v = 0; v < n; ++v) sets.unite(v, p(v));
  }
  std::vector<int> label(n);
  for (Vertex v = 0; v < n; ++v) label[v] = sets.find(v);
  return from_labels(n, label);
}

OrbitPartition orbit_partition(int n, std::span<const Permutation> group) {
  std::vector<int> label(n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex smallest = v;
    for (const Permutation& p : group) {
      if (p.size() != n) {
        throw std::invalid_argument("permutation size does not match");
      }
      smallest = std::min(smallest, p(v));
    }
    label[v] = smallest;
  }
  return from_labels(n, label);
}

OrbitPartition compute_orbits(const Graph& g, const SearchOptions& options) {
  return orbit_partition(automorphism_generators(g, options));
}

int transitivity_number(const Graph& g, const SearchOptions& options) {
  return compute_orbits(g, options).r();
}

bool interchangeable(const OrbitPartition& orbits, Vertex u, Vertex v) {
  check_vertex(orbits.n, u);
  check_vertex(orbits.n, v);
  return orbits.same_orbit(u, v);
}

bool interchangeable(const Graph& g, Vertex u, Vertex v,
                     const SearchOptions& options) {
  check_vertex(g.num_vertices(), u);
  check_vertex(g.num_vertices(), v);
  if (u == v) return true;
  return interchangeable(compute_orbits(g, options), u, v);
}

std::vector<Vertex> representatives(const Graph& g,
                                    const SearchOptions& options) {
  return compute_orbits(g, options).representatives;
}

const std::vector<Vertex>& orbit_of_vertex(const OrbitPartition& orbits,
                                           Vertex v) {
  check_vertex(orbits.n, v);
  return orbits.orbits[orbits.orbit_of[v]];
}

std::vector<Vertex> orbit_of_vertex(const Graph& g, Vertex v,
                                    const SearchOptions& options) {
  check_vertex(g.num_vertices(), v);
  return orbit_of_vertex(compute_orbits(g, options), v);
}

nlohmann::ordered_json to_json(const OrbitPartition& orbits) {
  nlohmann::ordered_json out;
  out["n"] = orbits.n;
  out["r"] = orbits.r();
  out["orbits"] = orbits.orbits;
  out["representatives"] = orbits.representatives;
  return out;
}

std::string to_table(const OrbitPartition& orbits) {
  std::string out = "n " + std::to_string(orbits.n) + "\nr " +
                    std::to_string(orbits.r()) + "\n";
  for (int i = 0; i < orbits.r(); ++i) {
    out += "orbit " + std::to_string(i) + " rep " +
           std::to_string(orbits.representatives[i]) + " size " +
           std::to_string(orbits.orbits[i].size()) + ":";
    for (Vertex v : orbits.orbits[i]) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

}  // namespace orbitkit
