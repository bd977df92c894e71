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

#include "test_support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include "orbitkit/automorphism.hpp"

namespace orbitkit::testing {

const std::vector<NamedGraph>& corpus(int max_n) {
  static std::map<int, std::vector<NamedGraph>> cache;
  auto it = cache.find(max_n);
  if (it == cache.end()) {
    it = cache.emplace(max_n, load_corpus(ORBITKIT_CORPUS_DIR, max_n)).first;
  }
  return it->second;
}

OrbitPartition oracle_orbits(const Graph& g) {
  return orbit_partition(g.num_vertices(), all_automorphisms(g));
}

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.num_vertices();
  constexpr int kInf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x >= kInf) x = -1;
    }
  }
  return d;
}

Rational betweenness_by_enumeration(const Graph& g, Vertex v) {
  const int n = g.num_vertices();
  const auto d = floyd_warshall(g);
  Rational total;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (s == v || t == v || d[s][t] < 0) continue;
      // Walk every shortest s-t path: each step moves one closer to t.
      std::int64_t paths = 0;
      std::int64_t through = 0;
      auto walk = [&](auto&& self, Vertex u, bool seen_v) -> void {
        if (u == t) {
          ++paths;
          if (seen_v) ++through;
          return;
        }
        for (Vertex w : g.neighbors(u)) {
          if (d[w][t] == d[u][t] - 1) self(self, w, seen_v || w == v);
        }
      };
      walk(walk, s, false);
      total += Rational(through, paths);
    }
  }
  return total;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_connected_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
    adj[v][parent] = adj[parent][v] = 1;
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[u][v] || coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph graph_of(int n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Graph::from_edges(n, list);
}

std::string write_temp(const std::string& text) {
  static std::atomic<int> counter{0};
  auto path = std::filesystem::temp_directory_path() /
              ("orbitkit_test_" + std::to_string(::getpid()) + "_" +
               std::to_string(counter++));
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

CliResult run_cli(const std::string& args, const std::string& stdin_text) {
  const std::string input = write_temp(stdin_text);
  const std::string command = std::string(ORBITKIT_CLI_PATH) + " " + args +
                              " < " + input + " 2>/dev/null";
  CliResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  char buffer[4096];
  std::size_t got = 0;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::filesystem::remove(input);
  return result;
}

}  // namespace orbitkit::testing
