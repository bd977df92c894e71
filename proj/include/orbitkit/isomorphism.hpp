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
#include <vector>

#include "orbitkit/automorphism.hpp"
#include "orbitkit/graph.hpp"

// Isomorphism invariants and a brute-force isomorphism test for small
// graphs. There is no canonical labelling here: graphs with different
// fingerprints are certainly non-isomorphic, and equal fingerprints are only
// settled by the exhaustive test.
namespace orbitkit {

// Eigenvalues of the adjacency matrix, ascending.
std::vector<double> adjacency_spectrum(const Graph& g);

struct GraphFingerprint {
  int n = 0;
  std::int64_t m = 0;
  std::vector<int> degrees;      // ascending
  std::vector<int> orbit_sizes;  // ascending
  std::vector<double> spectrum;  // ascending
};

GraphFingerprint fingerprint(const Graph& g, const SearchOptions& options = {});

// Exact on the integer parts, `tolerance` per eigenvalue.
bool fingerprints_match(const GraphFingerprint& a, const GraphFingerprint& b,
                        double tolerance = 1e-8);

// An isomorphism g -> h found by exhaustive search, if one exists. Throws
// std::invalid_argument when either graph exceeds kBruteForceMaxVertices.
std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h);

// true / false when decided; nullopt when the fingerprints agree but the
// graphs are too large for the exhaustive test.
std::optional<bool> are_isomorphic(const Graph& g, const Graph& h,
                                   const SearchOptions& options = {});

}  // namespace orbitkit
