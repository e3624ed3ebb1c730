// Copyright 2026 The zstar Authors
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

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace zstar {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);
std::optional<Rational> rational_sqrt(const Rational& q);

// An element p + q*i + r*sqrt(2) + s*i*sqrt(2) of Q(i, sqrt 2).
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(int v) : p_(v) {}
  ExactScalar(long v) : p_(v) {}
  ExactScalar(const Rational& v) : p_(v) {}
  ExactScalar(Rational p, Rational q, Rational r, Rational s);

  static ExactScalar i() { return {0, 1, 0, 0}; }
  static ExactScalar sqrt2() { return {0, 0, 1, 0}; }
  static ExactScalar fraction(long num, long den);

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Rational& r() const { return r_; }
  const Rational& s() const { return s_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  ExactScalar inv() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const;

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.s_ == b.s_;
  }

  std::string to_string() const;
  static ExactScalar parse(std::string_view text);

  std::size_t hash() const;

 private:
  Rational p_, q_, r_, s_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

ExactScalar pow(ExactScalar x, int k);

// Returns y with y*y == x when such y lies in Q(i, sqrt 2).
std::optional<ExactScalar> sqrt_if_exact(const ExactScalar& x);

inline bool field_is_zero(const ExactScalar& x) { return x.is_zero(); }
inline ExactScalar field_inverse(const ExactScalar& x) { return x.inv(); }
bool field_is_zero(const Rational& x);
Rational field_inverse(const Rational& x);

}  // namespace zstar

template <>
struct std::hash<zstar::ExactScalar> {
  std::size_t operator()(const zstar::ExactScalar& x) const { return x.hash(); }
};
