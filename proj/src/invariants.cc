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

#include "orbitkit/invariants.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "orbitkit/errors.hpp"

namespace orbitkit {
namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.num_vertices()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
}

std::vector<int> connected_distances(const Graph& g, Vertex v,
                                     const char* what) {
  check_vertex(g, v);
  auto dist = bfs_distances(g, v);
  if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; })) {
    throw DisconnectedGraphError(what);
  }
  return dist;
}

// Distances and shortest-path counts from one source.
struct PathCounts {
  std::vector<int> dist;
  std::vector<std::int64_t> sigma;
};

PathCounts count_paths(const Graph& g, Vertex source) {
  PathCounts out{std::vector<int>(g.num_vertices(), -1),
                 std::vector<std::int64_t>(g.num_vertices(), 0)};
  std::vector<Vertex> queue;
  queue.reserve(g.num_vertices());
  out.dist[source] = 0;
  out.sigma[source] = 1;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (out.dist[w] < 0) {
        out.dist[w] = out.dist[u] + 1;
        queue.push_back(w);
      }
      if (out.dist[w] == out.dist[u] + 1 &&
          __builtin_add_overflow(out.sigma[w], out.sigma[u], &out.sigma[w])) {
        throw std::overflow_error("shortest-path count overflow");
      }
    }
  }
  return out;
}

Rational degree_value(const Graph& g, Vertex v) { return degree(g, v); }
Rational eccentricity_value(const Graph& g, Vertex v) {
  return eccentricity(g, v);
}
Rational total_distance_value(const Graph& g, Vertex v) {
  return total_distance(g, v);
}

constexpr std::array<PropertyDef, 4> kCatalog = {{
    {"degree", false, &degree_value},
    {"eccentricity", true, &eccentricity_value},
    {"total_distance", true, &total_distance_value},
    {"betweenness", true, &betweenness},
}};

PropertyTable evaluate(const Graph& g, const OrbitPartition& orbits,
                       std::string_view property, bool fast) {
  const PropertyDef& def = find_property(property);
  if (orbits.n != g.num_vertices()) {
    throw std::invalid_argument("orbit partition does not match graph");
  }
  if (def.requires_connectivity && !is_connected(g)) {
    throw DisconnectedGraphError(std::string(def.name));
  }
  PropertyTable table;
  table.property_name = std::string(def.name);
  table.expanded.resize(g.num_vertices());
  if (fast) {
    for (int i = 0; i < orbits.r(); ++i) {
      Rational value = def.evaluate(g, orbits.representatives[i]);
      ++table.evaluations;
      for (Vertex v : orbits.orbits[i]) table.expanded[v] = value;
    }
  } else {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      table.expanded[v] = def.evaluate(g, v);
      ++table.evaluations;
    }
  }
  for (Vertex rep : orbits.representatives) {
    table.per_orbit.push_back({rep, table.expanded[rep]});
  }
  return table;
}

template <typename Better>
VertexSetResult extremal_set(const Graph& g, const OrbitPartition& orbits,
                             std::string name, PropertyFn fn, Better better) {
  if (!is_connected(g)) throw DisconnectedGraphError(name);
  VertexSetResult out{std::move(name), {}, false};
  Rational best;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Rational value = fn(g, v);
    if (out.members.empty() || better(value, best)) {
      best = value;
      out.members = {v};
    } else if (value == best) {
      out.members.push_back(v);
    }
  }
  out.orbit_closed = verify_orbit_closure(orbits, out.members);
  return out;
}

}  // namespace

int degree(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.degree(v);
}

int eccentricity(const Graph& g, Vertex v) {
  auto dist = connected_distances(g, v, "eccentricity");
  return dist.empty() ? 0 : *std::max_element(dist.begin(), dist.end());
}

std::int64_t total_distance(const Graph& g, Vertex v) {
  auto dist = connected_distances(g, v, "total_distance");
  std::int64_t sum = 0;
  for (int d : dist) sum += d;
  return sum;
}

Rational betweenness(const Graph& g, Vertex v) {
  check_vertex(g, v);
  if (!is_connected(g)) throw DisconnectedGraphError("betweenness");
  const PathCounts from_v = count_paths(g, v);
  Rational ordered_sum;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (s == v) continue;
    const PathCounts from_s = count_paths(g, s);
    Rational dependency;
    for (Vertex t = 0; t < g.num_vertices(); ++t) {
      if (t == s || t == v) continue;
      if (from_s.dist[v] + from_v.dist[t] != from_s.dist[t]) continue;
      // sigma_st(v) = sigma_sv * sigma_vt.
      dependency += Rational(from_s.sigma[v], 1) *
                    Rational(from_v.sigma[t], from_s.sigma[t]);
    }
    ordered_sum += dependency;
  }
  // Each unordered pair was counted from both ends.
  return ordered_sum / 2;
}

std::span<const PropertyDef> property_catalog() { return kCatalog; }

const PropertyDef& find_property(std::string_view name) {
  for (const PropertyDef& def : kCatalog) {
    if (def.name == name) return def;
  }
  throw UnknownPropertyError(std::string(name));
}

PropertyTable evaluate_property_naive(const Graph& g,
                                      const OrbitPartition& orbits,
                                      std::string_view property) {
  return evaluate(g, orbits, property, /*fast=*/false);
}

PropertyTable evaluate_property_fast(const Graph& g,
                                     const OrbitPartition& orbits,
                                     std::string_view property) {
  return evaluate(g, orbits, property, /*fast=*/true);
}

int distinct_value_count(const PropertyTable& table) {
  std::set<Rational> values(table.expanded.begin(), table.expanded.end());
  return static_cast<int>(values.size());
}

nlohmann::ordered_json property_report(const PropertyTable& table, int r) {
  nlohmann::ordered_json out;
  out["property"] = table.property_name;
  out["r"] = r;
  auto& per_orbit = out["per_orbit"] = nlohmann::ordered_json::array();
  for (const auto& [rep, value] : table.per_orbit) {
    nlohmann::ordered_json entry;
    entry["rep"] = rep;
    if (value.is_integer()) {
      entry["value"] = value.num();
    } else {
      entry["value"] = value.to_string();
    }
    per_orbit.push_back(std::move(entry));
  }
  out["distinct_values"] = distinct_value_count(table);
  return out;
}

VertexSetResult center(const Graph& g, const OrbitPartition& orbits) {
  return extremal_set(g, orbits, "center", find_property("eccentricity").evaluate,
                      std::less<Rational>());
}

VertexSetResult median(const Graph& g, const OrbitPartition& orbits) {
  return extremal_set(g, orbits, "median",
                      find_property("total_distance").evaluate,
                      std::less<Rational>());
}

VertexSetResult betweenness_center(const Graph& g,
                                   const OrbitPartition& orbits) {
  return extremal_set(g, orbits, "betweenness_center", &betweenness,
                      std::greater<Rational>());
}

bool verify_orbit_closure(const OrbitPartition& orbits,
                          std::span<const Vertex> s) {
  std::vector<char> in_set(orbits.n, 0);
  for (Vertex v : s) {
    if (v < 0 || v >= orbits.n) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    in_set[v] = 1;
  }
  for (Vertex v : s) {
    for (Vertex w : orbits.orbits[orbits.orbit_of[v]]) {
      if (!in_set[w]) return false;
    }
  }
  return true;
}

bool verify_orbit_closure(const Graph& g, std::span<const Vertex> s,
                          const SearchOptions& options) {
  for (Vertex v : s) check_vertex(g, v);
  return verify_orbit_closure(compute_orbits(g, options), s);
}

}  // namespace orbitkit
