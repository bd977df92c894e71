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

#include "orbitkit/graph.hpp"

// Standard graph families. Sizes are vertex counts throughout: make_path(n)
// is the path on n vertices (n - 1 edges). Invalid sizes throw
// std::invalid_argument.
namespace orbitkit {

// Path 0 - 1 - ... - (n-1). Requires n >= 1.
Graph make_path(int n);
// Cycle 0 - 1 - ... - (n-1) - 0. Requires n >= 3.
Graph make_cycle(int n);
// Requires n >= 1.
Graph make_complete(int n);
// n isolated vertices; n >= 0.
Graph make_empty(int n);
// k-dimensional cube Q_k; vertices are bit strings, adjacent when they differ
// in one bit. Requires 1 <= k <= 20.
Graph make_hypercube(int k);
// K_{parts[0], parts[1], ...}; parts are laid out consecutively. Requires a
// nonempty list of positive part sizes.
Graph make_complete_multipartite(std::span<const int> parts);
// K_{1,leaves} with the centre at vertex 0. Requires leaves >= 1.
Graph make_star(int leaves);
// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i - (i+5).
Graph make_petersen();

}  // namespace orbitkit
