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

#include <random>
#include <string>
#include <vector>

#include "orbitkit/graph.hpp"
#include "orbitkit/orbits.hpp"
#include "orbitkit/rational.hpp"
#include "orbitkit/theorems.hpp"

// Independent oracles and fixtures for the test suites. Nothing here goes
// through the refinement search, BFS or the betweenness code under test.
namespace orbitkit::testing {

// Connected graphs on 1..max_n vertices from the shipped corpus. Cached.
const std::vector<NamedGraph>& corpus(int max_n);

// Orbits read off the complete automorphism group (factorial enumeration).
OrbitPartition oracle_orbits(const Graph& g);

// All-pairs distances by Floyd-Warshall; -1 for unreachable.
std::vector<std::vector<int>> floyd_warshall(const Graph& g);

// Betweenness by listing every shortest path of every pair explicitly.
Rational betweenness_by_enumeration(const Graph& g, Vertex v);

// G(n, p) graphs; the connected variant adds a random spanning tree first.
Graph random_graph(std::mt19937& rng, int n, double p);
Graph random_connected_graph(std::mt19937& rng, int n, double p);

// Graph from an explicit edge list.
Graph graph_of(int n, std::initializer_list<Edge> edges);

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the orbitkit binary with `args` (a shell-quoted string), feeding
// `stdin_text` on standard input. Standard error is discarded.
CliResult run_cli(const std::string& args, const std::string& stdin_text = "");

// Writes `text` to a fresh file under the temp directory and returns its path.
std::string write_temp(const std::string& text);

}  // namespace orbitkit::testing
