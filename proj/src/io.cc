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

#include "orbitkit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>
#include <vector>

#include "orbitkit/errors.hpp"

namespace orbitkit {
namespace {

using Kind = ParseError::Kind;

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

int sextet(char c) {
  int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63) {
    throw ParseError(Kind::kInvalidCharacter, 0,
                     "graph6: character code " +
                         std::to_string(static_cast<unsigned char>(c)) +
                         " outside 63..126");
  }
  return value;
}

// Reads the size header and returns (n, header length).
std::pair<std::int64_t, std::size_t> read_size(std::string_view text) {
  if (text.empty()) {
    throw ParseError(Kind::kMalformedHeader, 0, "graph6: empty record");
  }
  auto big = [&](std::size_t offset, std::size_t count) {
    if (text.size() < offset + count) {
      throw ParseError(Kind::kMalformedHeader, 0,
                       "graph6: truncated size header");
    }
    std::int64_t value = 0;
    for (std::size_t i = 0; i < count; ++i) {
      value = (value << 6) | sextet(text[offset + i]);
    }
    return value;
  };
  if (text[0] != '~') return {sextet(text[0]), 1};
  if (text.size() > 1 && text[1] == '~') {
    std::int64_t n = big(2, 6);
    if (n <= 258047) {
      throw ParseError(Kind::kMalformedHeader, 0,
                       "graph6: non-minimal 8-byte size header");
    }
    if (n > kMaxVertices) {
      throw ParseError(Kind::kMalformedHeader, 0,
                       "graph6: vertex count " + std::to_string(n) +
                           " exceeds supported maximum");
    }
    return {n, 8};
  }
  std::int64_t n = big(1, 3);
  if (n <= 62) {
    throw ParseError(Kind::kMalformedHeader, 0,
                     "graph6: non-minimal 4-byte size header");
  }
  return {n, 4};
}

void write_size(std::string& out, std::int64_t n) {
  auto push = [&](int shift_count) {
    for (int i = shift_count - 1; i >= 0; --i) {
      out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + kBias));
    }
  };
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    push(3);
  } else {
    out += "~~";
    push(6);
  }
}

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_int(std::string_view token, std::int64_t& value) {
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim_line_end(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());

  auto [n, header] = read_size(text);
  std::string_view body = text.substr(header);
  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (body.size() < need) {
    throw ParseError(Kind::kTruncated, 0,
                     "graph6: expected " + std::to_string(need) +
                         " data characters, got " +
                         std::to_string(body.size()));
  }
  if (body.size() > need) {
    throw ParseError(Kind::kTrailingData, 0,
                     "graph6: " + std::to_string(body.size() - need) +
                         " unexpected trailing characters");
  }

  std::vector<int> values(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) values[i] = sextet(body[i]);

  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((values[k / 6] >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (need > 0) {
    const int pad = static_cast<int>(6 * need - bits);
    if (values.back() & ((1 << pad) - 1)) {
      throw ParseError(Kind::kNonzeroPadding, 0,
                       "graph6: nonzero padding bits");
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  const std::int64_t n = g.num_vertices();
  std::string out;
  write_size(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start <= text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && split_ws(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) {
    throw ParseError(Kind::kBadLine, 1, "expected header \"n m\"");
  }

  auto header = split_ws(lines[0]);
  std::int64_t n = 0;
  std::int64_t m = 0;
  if (header.size() != 2 || !parse_int(header[0], n) ||
      !parse_int(header[1], m) || n < 0 || m < 0) {
    throw ParseError(Kind::kBadLine, 1, "expected header \"n m\"");
  }
  if (n > kMaxVertices) {
    throw ParseError(Kind::kBadLine, 1,
                     "vertex count " + std::to_string(n) + " too large");
  }
  const std::int64_t found = static_cast<std::int64_t>(lines.size()) - 1;
  if (found != m) {
    // Points at the first missing line, or the first surplus one.
    const int line = static_cast<int>(found < m ? found + 2 : m + 2);
    throw ParseError(Kind::kBadLine, line,
                     "header announces " + std::to_string(m) +
                         " edges, found " + std::to_string(found));
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    auto tokens = split_ws(lines[i]);
    std::int64_t u = 0;
    std::int64_t v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) ||
        !parse_int(tokens[1], v)) {
      throw ParseError(Kind::kBadLine, line, "expected \"u v\"");
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(Kind::kVertexOutOfRange, line,
                       "vertex out of range [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      throw ParseError(Kind::kSelfLoop, line,
                       "self-loop at vertex " + std::to_string(u));
    }
    Edge e{static_cast<Vertex>(std::min(u, v)),
           static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) {
      throw ParseError(Kind::kDuplicateEdge, line,
                       "duplicate edge " + std::to_string(e.first) + " " +
                           std::to_string(e.second));
    }
    edges.push_back(e);
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace orbitkit
