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

#include "orbitkit/partition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace orbitkit {
namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return (h ^ x) * 0x100000001b3ULL + (h >> 17);
}

}  // namespace

OrderedPartition OrderedPartition::unit(int n) {
  OrderedPartition p;
  p.elements_.resize(n);
  p.position_.resize(n);
  p.cell_start_.assign(n, 0);
  p.cell_end_.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    p.elements_[v] = v;
    p.position_[v] = v;
  }
  if (n > 0) p.cell_end_[0] = n;
  p.num_cells_ = n > 0 ? 1 : 0;
  return p;
}

OrderedPartition::OrderedPartition(
    int n, const std::vector<std::vector<Vertex>>& cells) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  position_.assign(n, -1);
  cell_start_.assign(n, 0);
  cell_end_.assign(n, 0);
  elements_.reserve(n);
  for (const auto& cell : cells) {
    if (cell.empty()) throw std::invalid_argument("empty cell");
    const int start = static_cast<int>(elements_.size());
    for (Vertex v : cell) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range");
      }
      if (position_[v] >= 0) {
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " appears in two cells");
      }
      position_[v] = static_cast<int>(elements_.size());
      cell_start_[v] = start;
      elements_.push_back(v);
    }
    cell_end_[start] = static_cast<int>(elements_.size());
    ++num_cells_;
  }
  if (static_cast<int>(elements_.size()) != n) {
    throw std::invalid_argument("cells do not cover every vertex");
  }
}

std::vector<std::vector<Vertex>> OrderedPartition::cells() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(num_cells_);
  for (int s = 0; s < num_vertices(); s = cell_end_[s]) {
    auto cell = cell_at(s);
    out.emplace_back(cell.begin(), cell.end());
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::optional<int> OrderedPartition::first_nonsingleton_cell() const {
  for (int s = 0; s < num_vertices(); s = cell_end_[s]) {
    if (cell_end_[s] - s > 1) return s;
  }
  return std::nullopt;
}

OrderedPartition OrderedPartition::individualize(Vertex v) const {
  OrderedPartition p = *this;
  const int start = p.cell_start_[v];
  const int end = p.cell_end_[start];
  if (end - start == 1) return p;
  Vertex front = p.elements_[start];
  int pos = p.position_[v];
  std::swap(p.elements_[start], p.elements_[pos]);
  p.position_[front] = pos;
  p.position_[v] = start;
  p.cell_end_[start] = start + 1;
  p.cell_end_[start + 1] = end;
  for (int i = start + 1; i < end; ++i) p.cell_start_[p.elements_[i]] = start + 1;
  ++p.num_cells_;
  return p;
}

bool OrderedPartition::is_finer_or_equal(const OrderedPartition& other) const {
  if (other.num_vertices() != num_vertices()) return false;
  for (int s = 0; s < num_vertices(); s = cell_end_[s]) {
    auto cell = cell_at(s);
    for (Vertex v : cell) {
      if (!other.same_cell(v, cell.front())) return false;
    }
  }
  return true;
}

std::string OrderedPartition::to_string() const {
  std::string out;
  for (const auto& cell : cells()) {
    if (!out.empty()) out += " | ";
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cell[i]);
    }
  }
  return out;
}

OrderedPartition equitable_refine(const Graph& g, const OrderedPartition& p) {
  if (g.num_vertices() != p.num_vertices()) {
    throw std::invalid_argument("partition size does not match graph");
  }
  OrderedPartition out = p;
  Refiner(g).refine_all(out);
  return out;
}

Refiner::Refiner(const Graph& g)
    : graph_(g),
      count_(g.num_vertices(), 0),
      cell_touched_(g.num_vertices(), 0),
      in_worklist_(g.num_vertices(), 0) {}

std::uint64_t Refiner::refine_all(OrderedPartition& p) {
  std::vector<int> starts;
  for (int s = 0; s < p.num_vertices(); s = p.cell_end_[s]) starts.push_back(s);
  return refine(p, starts);
}

std::uint64_t Refiner::refine(OrderedPartition& p,
                              std::span<const int> seed_starts) {
  // (size, start): smallest splitter first, ties by position.
  std::set<std::pair<int, int>> worklist;
  for (int s : seed_starts) {
    if (!in_worklist_[s]) {
      in_worklist_[s] = 1;
      worklist.emplace(p.cell_end_[s] - s, s);
    }
  }

  std::uint64_t trace = mix(0, static_cast<std::uint64_t>(p.num_cells_));
  std::vector<Vertex> splitter;
  while (!worklist.empty()) {
    const auto [size, s] = *worklist.begin();
    worklist.erase(worklist.begin());
    in_worklist_[s] = 0;
    trace = mix(trace, (static_cast<std::uint64_t>(s) << 32) | size);

    splitter.assign(p.elements_.begin() + s, p.elements_.begin() + s + size);
    for (Vertex v : splitter) {
      for (Vertex w : graph_.neighbors(v)) {
        if (count_[w]++ == 0) {
          touched_.push_back(w);
          int c = p.cell_start_[w];
          if (!cell_touched_[c]) {
            cell_touched_[c] = 1;
            touched_cells_.push_back(c);
          }
        }
      }
    }
    std::sort(touched_cells_.begin(), touched_cells_.end());

    for (int c : touched_cells_) {
      cell_touched_[c] = 0;
      const int end = p.cell_end_[c];
      auto first = p.elements_.begin() + c;
      auto last = p.elements_.begin() + end;
      std::sort(first, last, [&](Vertex a, Vertex b) {
        return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
      });
      if (count_[*first] == count_[*(last - 1)]) {
        trace = mix(trace, (static_cast<std::uint64_t>(c) << 32) |
                               static_cast<std::uint32_t>(count_[*first]));
        continue;
      }

      // Split into runs of equal count.
      std::vector<std::pair<int, int>> fragments;  // (start, end)
      int run = c;
      for (int i = c + 1; i <= end; ++i) {
        if (i == end || count_[p.elements_[i]] != count_[p.elements_[run]]) {
          fragments.emplace_back(run, i);
          run = i;
        }
      }
      for (const auto& [a, b] : fragments) {
        p.cell_end_[a] = b;
        for (int i = a; i < b; ++i) {
          Vertex v = p.elements_[i];
          p.position_[v] = i;
          p.cell_start_[v] = a;
        }
        trace = mix(trace, (static_cast<std::uint64_t>(a) << 40) |
                               (static_cast<std::uint64_t>(b - a) << 20) |
                               static_cast<std::uint32_t>(count_[p.elements_[a]]));
      }
      p.num_cells_ += static_cast<int>(fragments.size()) - 1;

      std::size_t skip = fragments.size();
      if (in_worklist_[c]) {
        worklist.erase({end - c, c});
        in_worklist_[c] = 0;
      } else {
        // The partition is stable with respect to the whole cell, so the
        // largest fragment's counts follow from the others.
        skip = 0;
        for (std::size_t i = 1; i < fragments.size(); ++i) {
          auto len = [&](std::size_t k) {
            return fragments[k].second - fragments[k].first;
          };
          if (len(i) > len(skip)) skip = i;
        }
      }
      for (std::size_t i = 0; i < fragments.size(); ++i) {
        if (i == skip) continue;
        const auto [a, b] = fragments[i];
        in_worklist_[a] = 1;
        worklist.emplace(b - a, a);
      }
    }
    touched_cells_.clear();
    for (Vertex w : touched_) count_[w] = 0;
    touched_.clear();
  }
  return mix(trace, static_cast<std::uint64_t>(p.num_cells_));
}

}  // namespace orbitkit
