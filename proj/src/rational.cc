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

#include "orbitkit/rational.hpp"

#include <limits>
#include <stdexcept>

namespace orbitkit {
namespace {

using Wide = __int128;

Wide gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(Wide x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < -std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(x);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Wide n = num;
  Wide d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = gcd(n, d);
  num_ = narrow(n / g);
  den_ = narrow(d / g);
}

Rational& Rational::operator+=(const Rational& other) {
  Wide g = gcd(den_, other.den_);
  Wide d = Wide{den_} / g * other.den_;
  Wide n = Wide{num_} * (other.den_ / g) + Wide{other.num_} * (den_ / g);
  Wide r = gcd(n, d);
  num_ = narrow(n / r);
  den_ = narrow(d / r);
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  return *this += Rational(-other.num_, other.den_);
}

Rational& Rational::operator*=(const Rational& other) {
  Wide n = Wide{num_} * other.num_;
  Wide d = Wide{den_} * other.den_;
  Wide r = gcd(n, d);
  num_ = narrow(n / r);
  den_ = narrow(d / r);
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw std::domain_error("division by zero");
  return *this *= Rational(other.den_, other.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace orbitkit
