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
#include <stdexcept>
#include <string>

namespace orbitkit {

// Base class for every operational error raised by the library. Invalid
// arguments (wrong sizes, n = 0 for a path, ...) use std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  enum class Kind {
    kMalformedHeader,
    kInvalidCharacter,
    kTruncated,
    kTrailingData,
    kNonzeroPadding,
    kBadLine,
    kSelfLoop,
    kDuplicateEdge,
    kVertexOutOfRange,
  };

  // `line` is 1-based; 0 when the input has no line structure (graph6).
  ParseError(Kind kind, int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

// The automorphism search exceeded its node budget. Never a silent wrong
// answer: callers either raise the budget or give up.
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(std::int64_t budget)
      : Error("automorphism search exceeded node budget of " +
              std::to_string(budget)),
        budget_(budget) {}
  std::int64_t budget() const { return budget_; }

 private:
  std::int64_t budget_;
};

class SizeLimitError : public Error {
 public:
  SizeLimitError(std::int64_t requested, std::int64_t limit)
      : Error("product would have " + std::to_string(requested) +
              " vertices, limit is " + std::to_string(limit)) {}
};

class DisconnectedGraphError : public Error {
 public:
  explicit DisconnectedGraphError(const std::string& what)
      : Error(what + " requires a connected graph") {}
};

class UnknownPropertyError : public Error {
 public:
  explicit UnknownPropertyError(const std::string& name)
      : Error("unknown property '" + name + "'") {}
};

}  // namespace orbitkit
