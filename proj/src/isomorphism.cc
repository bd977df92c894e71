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

#include "orbitkit/isomorphism.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "orbitkit/orbits.hpp"

namespace orbitkit {

std::vector<double> adjacency_spectrum(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return {};
  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    adjacency(u, v) = 1.0;
    adjacency(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("adjacency eigenvalue computation failed");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

GraphFingerprint fingerprint(const Graph& g, const SearchOptions& options) {
  GraphFingerprint out;
  out.n = g.num_vertices();
  out.m = g.num_edges();
  out.degrees = degree_sequence(g);
  for (const auto& orbit : compute_orbits(g, options).orbits) {
    out.orbit_sizes.push_back(static_cast<int>(orbit.size()));
  }
  std::sort(out.orbit_sizes.begin(), out.orbit_sizes.end());
  out.spectrum = adjacency_spectrum(g);
  return out;
}

bool fingerprints_match(const GraphFingerprint& a, const GraphFingerprint& b,
                        double tolerance) {
  if (a.n != b.n || a.m != b.m || a.degrees != b.degrees ||
      a.orbit_sizes != b.orbit_sizes ||
      a.spectrum.size() != b.spectrum.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.spectrum.size(); ++i) {
    if (std::abs(a.spectrum[i] - b.spectrum[i]) > tolerance) return false;
  }
  return true;
}

std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h) {
  const int n = g.num_vertices();
  if (n > kBruteForceMaxVertices || h.num_vertices() > kBruteForceMaxVertices) {
    throw std::invalid_argument("brute-force isomorphism is limited to " +
                                std::to_string(kBruteForceMaxVertices) +
                                " vertices");
  }
  if (h.num_vertices() != n || h.num_edges() != g.num_edges()) {
    return std::nullopt;
  }
  std::vector<Vertex> image(n, -1);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) {
        ok = g.has_edge(v, u) == h.has_edge(t, image[u]);
      }
      if (!ok) continue;
      used[t] = 1;
      image[v] = t;
      if (self(self, v + 1)) return true;
      used[t] = 0;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return Permutation(std::move(image));
}

std::optional<bool> are_isomorphic(const Graph& g, const Graph& h,
                                   const SearchOptions& options) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges() ||
      degree_sequence(g) != degree_sequence(h)) {
    return false;
  }
  if (!fingerprints_match(fingerprint(g, options), fingerprint(h, options))) {
    return false;
  }
  if (g.num_vertices() > kBruteForceMaxVertices) return std::nullopt;
  return find_isomorphism(g, h).has_value();
}

}  // namespace orbitkit
