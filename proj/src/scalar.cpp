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

#include "zstar/scalar.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "zstar/errors.hpp"

namespace zstar {

namespace {

struct Gaussian {
  Rational re, im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Gaussian scaled(const Rational& k) const { return {re * k, im * k}; }
  Gaussian inv() const {
    Rational n = re * re + im * im;
    return {re / n, -im / n};
  }
};

std::optional<Gaussian> gaussian_sqrt(const Gaussian& z) {
  if (z.is_zero()) return Gaussian{};
  auto n = rational_sqrt(z.re * z.re + z.im * z.im);
  if (!n) return std::nullopt;
  auto s = rational_sqrt((z.re + *n) / 2);
  auto t = rational_sqrt((*n - z.re) / 2);
  if (!s || !t) return std::nullopt;
  Gaussian w{*s, *t};
  if (sgn(z.im) < 0) w.im = -w.im;
  Gaussian sq = w * w;
  if (sq.re != z.re || sq.im != z.im) return std::nullopt;
  return w;
}

Gaussian part_a(const ExactScalar& x) { return {x.p(), x.q()}; }
Gaussian part_b(const ExactScalar& x) { return {x.r(), x.s()}; }

ExactScalar from_parts(const Gaussian& a, const Gaussian& b) {
  return {a.re, a.im, b.re, b.im};
}

bool is_integer_square(const mpz_class& z, mpz_class& root) {
  if (sgn(z) < 0) return false;
  if (!mpz_perfect_square_p(z.get_mpz_t())) return false;
  root = sqrt(z);
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string t(text);
  if (t.empty()) throw ParseError(0, "empty rational");
  std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digits = false;
  for (std::size_t k = start; k < t.size(); ++k) {
    if (t[k] == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else if (std::isdigit(static_cast<unsigned char>(t[k]))) {
      digits = true;
    } else {
      throw ParseError(0, "malformed rational '" + t + "'");
    }
  }
  if (!digits) throw ParseError(0, "malformed rational '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  Rational q;
  if (q.set_str(t, 10) != 0) throw ParseError(0, "malformed rational '" + t + "'");
  if (sgn(q.get_den()) == 0) throw ParseError(0, "zero denominator in '" + t + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  mpz_class a, b;
  if (!is_integer_square(q.get_num(), a) || !is_integer_square(q.get_den(), b)) {
    return std::nullopt;
  }
  Rational r(a, b);
  r.canonicalize();
  return r;
}

bool field_is_zero(const Rational& x) { return sgn(x) == 0; }

Rational field_inverse(const Rational& x) {
  if (sgn(x) == 0) throw DivisionByZero();
  return 1 / x;
}

ExactScalar::ExactScalar(Rational p, Rational q, Rational r, Rational s)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s)) {
  p_.canonicalize();
  q_.canonicalize();
  r_.canonicalize();
  s_.canonicalize();
}

ExactScalar ExactScalar::fraction(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return ExactScalar(q);
}

bool ExactScalar::is_zero() const {
  return sgn(p_) == 0 && sgn(q_) == 0 && sgn(r_) == 0 && sgn(s_) == 0;
}

bool ExactScalar::is_one() const {
  return p_ == 1 && sgn(q_) == 0 && sgn(r_) == 0 && sgn(s_) == 0;
}

bool ExactScalar::is_rational() const {
  return sgn(q_) == 0 && sgn(r_) == 0 && sgn(s_) == 0;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  p_ += o.p_;
  q_ += o.q_;
  r_ += o.r_;
  s_ += o.s_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  p_ -= o.p_;
  q_ -= o.q_;
  r_ -= o.r_;
  s_ -= o.s_;
  return *this;
}

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.is_rational()) {
    return {x.p_ * y.p_, x.p_ * y.q_, x.p_ * y.r_, x.p_ * y.s_};
  }
  if (y.is_rational()) {
    return {y.p_ * x.p_, y.p_ * x.q_, y.p_ * x.r_, y.p_ * x.s_};
  }
  Gaussian a1 = part_a(x), b1 = part_b(x), a2 = part_a(y), b2 = part_b(y);
  Gaussian a = a1 * a2 + (b1 * b2).scaled(2);
  Gaussian b = a1 * b2 + b1 * a2;
  return from_parts(a, b);
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  *this = *this * o;
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  *this = *this * o.inv();
  return *this;
}

ExactScalar ExactScalar::operator-() const { return {-p_, -q_, -r_, -s_}; }

ExactScalar ExactScalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return ExactScalar(Rational(1 / p_));
  Gaussian a = part_a(*this), b = part_b(*this);
  Gaussian norm = a * a - (b * b).scaled(2);
  Gaussian ninv = norm.inv();
  return from_parts(a * ninv, (Gaussian{} - b) * ninv);
}

ExactScalar pow(ExactScalar x, int k) {
  if (k < 0) return pow(x.inv(), -k);
  ExactScalar r(1);
  for (int j = 0; j < k; ++j) r *= x;
  return r;
}

std::string ExactScalar::to_string() const {
  if (is_zero()) return "0";
  static const char* monomials[] = {"", "i", "r2", "i*r2"};
  const Rational* coeffs[] = {&p_, &q_, &r_, &s_};
  std::string out;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    const Rational& c = *coeffs[k];
    if (sgn(c) == 0) continue;
    bool negative = sgn(c) < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += monomials[k];
    } else {
      out += rational_to_string(mag) + "*" + monomials[k];
    }
  }
  return out;
}

ExactScalar ExactScalar::parse(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.empty()) throw ParseError(0, "empty scalar");
  std::vector<std::pair<bool, std::string>> terms;
  std::size_t k = 0;
  while (k < t.size()) {
    bool negative = false;
    if (t[k] == '+' || t[k] == '-') {
      negative = t[k] == '-';
      ++k;
    } else if (!terms.empty()) {
      throw ParseError(0, "malformed scalar '" + std::string(text) + "'");
    }
    std::size_t end = t.find_first_of("+-", k);
    if (end == std::string::npos) end = t.size();
    terms.emplace_back(negative, t.substr(k, end - k));
    k = end;
  }
  ExactScalar total;
  for (const auto& [negative, body] : terms) {
    if (body.empty()) throw ParseError(0, "malformed scalar '" + std::string(text) + "'");
    ExactScalar term(1);
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t star = body.find('*', start);
      if (star == std::string::npos) star = body.size();
      std::string factor = body.substr(start, star - start);
      if (factor == "i") {
        term *= ExactScalar::i();
      } else if (factor == "r2") {
        term *= ExactScalar::sqrt2();
      } else {
        term *= ExactScalar(parse_rational(factor));
      }
      start = star + 1;
    }
    total += negative ? -term : term;
  }
  return total;
}

std::size_t ExactScalar::hash() const {
  std::hash<std::string> h;
  return h(to_string());
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
  return os << x.to_string();
}

std::optional<ExactScalar> sqrt_if_exact(const ExactScalar& x) {
  if (x.is_zero()) return ExactScalar{};
  Gaussian big_x = part_a(x), big_y = part_b(x);
  std::vector<ExactScalar> candidates;
  if (big_y.is_zero()) {
    if (auto a = gaussian_sqrt(big_x)) candidates.push_back(from_parts(*a, {}));
    if (auto b = gaussian_sqrt(big_x.scaled(Rational(1, 2)))) {
      candidates.push_back(from_parts({}, *b));
    }
  } else {
    Gaussian disc = big_x * big_x - (big_y * big_y).scaled(2);
    if (auto root = gaussian_sqrt(disc)) {
      for (const Gaussian& a2 : {(big_x + *root).scaled(Rational(1, 2)),
                                 (big_x - *root).scaled(Rational(1, 2))}) {
        if (a2.is_zero()) continue;
        if (auto a = gaussian_sqrt(a2)) {
          Gaussian b = big_y * a->scaled(2).inv();
          candidates.push_back(from_parts(*a, b));
        }
      }
    }
  }
  for (const ExactScalar& y : candidates) {
    if (y * y == x) return y;
  }
  return std::nullopt;
}

}  // namespace zstar
