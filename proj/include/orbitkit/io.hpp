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

#include <string>
#include <string_view>

#include "orbitkit/graph.hpp"

namespace orbitkit {

// graph6: the vertex count followed by the upper triangle of the adjacency
// matrix, column by column ((0,1), (0,2), (1,2), (0,3), ...), packed six bits
// per printable character (value + 63), zero padded. An optional
// ">>graph6<<" header and trailing line breaks are accepted. Vertex counts
// must use the shortest size encoding, so every accepted record round-trips.
//
// Throws ParseError whose kind() distinguishes a malformed size header, a
// character outside 63..126, a bit string that is too short, extra data and
// nonzero padding bits.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Edge-list text: a first line "n m", then m lines "u v" with 0 <= u, v < n.
// Blank lines after the last edge are ignored. Errors carry the 1-based line
// number of the offending line.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace orbitkit
