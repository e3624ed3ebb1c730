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

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

#include "zstar/errors.hpp"
#include "zstar/scalar.hpp"

namespace zstar {

template <class F>
concept Field = requires(F a, F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { field_is_zero(a) } -> std::convertible_to<bool>;
  { field_inverse(a) } -> std::convertible_to<F>;
  F(0);
  F(1);
};

// The prime field GF(P).
template <std::uint32_t P>
class Zp {
  static_assert(P >= 2);

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Zp() = default;
  constexpr Zp(long v) : v_(reduce(v)) {}

  constexpr std::uint32_t value() const { return v_; }

  friend constexpr Zp operator+(Zp a, Zp b) { return Zp(static_cast<long>(a.v_) + b.v_); }
  friend constexpr Zp operator-(Zp a, Zp b) {
    return Zp(static_cast<long>(a.v_) - static_cast<long>(b.v_));
  }
  friend constexpr Zp operator*(Zp a, Zp b) {
    return Zp(static_cast<long>(a.v_) * static_cast<long>(b.v_));
  }
  constexpr Zp operator-() const { return Zp(-static_cast<long>(v_)); }
  friend constexpr bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(Zp a, Zp b) { return a.v_ <=> b.v_; }

  constexpr Zp inv() const {
    if (v_ == 0) throw DivisionByZero();
    Zp result(1), base = *this;
    std::uint32_t e = P - 2;
    while (e > 0) {
      if (e & 1u) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  std::string to_string() const { return std::to_string(v_); }

 private:
  static constexpr std::uint32_t reduce(long v) {
    long r = v % static_cast<long>(P);
    return static_cast<std::uint32_t>(r < 0 ? r + P : r);
  }

  std::uint32_t v_ = 0;
};

template <std::uint32_t P>
constexpr bool field_is_zero(Zp<P> x) {
  return x.value() == 0;
}

template <std::uint32_t P>
constexpr Zp<P> field_inverse(Zp<P> x) {
  return x.inv();
}

template <std::uint32_t P>
std::ostream& operator<<(std::ostream& os, Zp<P> x) {
  return os << x.value();
}

inline std::string field_to_string(const Rational& q) { return rational_to_string(q); }
inline std::string field_to_string(const ExactScalar& x) { return x.to_string(); }
template <std::uint32_t P>
std::string field_to_string(Zp<P> x) {
  return x.to_string();
}

}  // namespace zstar
