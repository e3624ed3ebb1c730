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

#include "zstar/catalog.hpp"

#include <algorithm>

#include "zstar/errors.hpp"

namespace zstar {

namespace {

using S = ExactScalar;

Morphism m2(std::size_t n, std::size_t m, std::vector<S> entries) {
  return Morphism(2, n, m, std::move(entries));
}

Morphism op(S a, S b, S c, S d) { return m2(1, 1, {a, b, c, d}); }
Morphism row4(S a, S b, S c, S d) { return m2(2, 0, {a, b, c, d}); }
Morphism col4(S a, S b, S c, S d) { return m2(0, 2, {a, b, c, d}); }
Morphism col2(S a, S b) { return m2(0, 1, {a, b}); }
Morphism row2(S a, S b) { return m2(1, 0, {a, b}); }
Morphism prod(std::vector<S> e) { return m2(2, 1, std::move(e)); }
Morphism coprod(std::vector<S> e) { return m2(1, 2, std::move(e)); }

S frac(long n, long d = 1) { return S::fraction(n, d); }

void require_nonzero(const S& x, const char* what) {
  if (x.is_zero()) throw DomainError(std::string(what) + " must be nonzero");
}

}  // namespace

std::string_view base_name(Base b) {
  switch (b) {
    case Base::Z: return "Z";
    case Base::X: return "X";
    case Base::H: return "H";
    case Base::W: return "W";
  }
  return "?";
}

std::optional<Base> parse_base(std::string_view name) {
  for (Base b : {Base::Z, Base::X, Base::H, Base::W}) {
    if (base_name(b) == name) return b;
  }
  return std::nullopt;
}

Frobenius base_algebra(Base which) {
  switch (which) {
    case Base::Z:
      return {Monoid(prod({1, 0, 0, 0, 0, 0, 0, 1}), col2(1, 1)),
              Comonoid(coprod({1, 0, 0, 0, 0, 0, 0, 1}), row2(1, 1))};
    case Base::X:
      return {Monoid(prod({1, 0, 0, 1, 0, 1, 1, 0}), col2(1, 0)),
              Comonoid(frac(1, 2) * coprod({1, 0, 0, 1, 0, 1, 1, 0}), row2(2, 0))};
    case Base::H:
      return {Monoid(prod({1, 1, 1, 0, 0, 0, 0, 1}), col2(0, 1)),
              Comonoid(coprod({1, 2, 0, -1, 0, -1, 0, 1}), row2(1, 2))};
    case Base::W:
      return {Monoid(prod({1, 0, 0, 0, 0, 1, 1, 0}), col2(1, 0)),
              Comonoid(coprod({0, 0, 1, 0, 1, 0, 0, 1}), row2(0, 1))};
  }
  throw DomainError("unknown base algebra");
}

Morphism phase_of(Base which, const S& a, const S& b) {
  require_nonzero(a, "first phase parameter");
  if (which != Base::W) require_nonzero(b, "second phase parameter");
  switch (which) {
    case Base::Z: return a * op(1, 0, 0, b);
    case Base::X: return (a * frac(1, 2)) * op(1 + b, 1 - b, 1 - b, 1 + b);
    case Base::H: return a * op(1, 1 - b, 0, b);
    case Base::W: return a * op(1, 0, b, 1);
  }
  throw DomainError("unknown base algebra");
}

std::optional<std::pair<S, S>> phase_parameters(Base which, const Morphism& m) {
  if (m.dim() != 2 || m.inputs() != 1 || m.outputs() != 1) return std::nullopt;
  S x, y;
  switch (which) {
    case Base::Z:
    case Base::H:
      if (m.at(0, 0).is_zero()) return std::nullopt;
      x = m.at(0, 0);
      y = m.at(1, 1) / x;
      break;
    case Base::X:
      x = m.at(0, 0) + m.at(0, 1);
      if (x.is_zero()) return std::nullopt;
      y = (m.at(0, 0) - m.at(0, 1)) / x;
      break;
    case Base::W:
      if (m.at(0, 0).is_zero()) return std::nullopt;
      x = m.at(0, 0);
      y = m.at(1, 0) / x;
      break;
  }
  try {
    if (phase_of(which, x, y) == m) return std::make_pair(x, y);
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::ZZpp, "ZZ++"}, {Family::ZZmp, "ZZ-+"}, {Family::ZZpm, "ZZ+-"},
    {Family::ZZmm, "ZZ--"}, {Family::ZX1, "ZX1"},   {Family::ZX2, "ZX2"},
    {Family::ZX3, "ZX3"},   {Family::ZX4, "ZX4"},   {Family::ZX5, "ZX5"},
    {Family::ZX6, "ZX6"},   {Family::ZH, "ZH"},     {Family::ZW, "ZW"},
    {Family::WZ, "WZ"},
};

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& info : kFamilies) {
    if (info.family == f) return info.name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& info : kFamilies) {
    if (info.name == name) return info.family;
  }
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> v;
    for (const auto& info : kFamilies) v.push_back(info.family);
    return v;
  }();
  return families;
}

std::pair<S, S> main_to_appendix(Family f, const S& a, const S& b) {
  require_nonzero(a, "a");
  require_nonzero(b, "b");
  switch (f) {
    case Family::ZZpp:
    case Family::ZZmp:
    case Family::ZZpm:
    case Family::ZZmm:
    case Family::ZH:
    case Family::ZW:
    case Family::WZ:
      return {a, b / a};
    case Family::ZX5:
      return {a / b, frac(2) / a};
    case Family::ZX6:
      return {a, frac(2) * b / a};
    default:
      return {a, b};
  }
}

namespace {

FamilyShape appendix_shape(Family f, const S& a, const S& b) {
  S ab2 = a * a * b * b;
  switch (f) {
    case Family::ZZpp: return {Base::Z, Base::Z, {a, b}, {a.inv(), b.inv()}};
    case Family::ZZmp: return {Base::Z, Base::Z, {a, b}, {-a.inv(), b.inv()}};
    case Family::ZZpm: return {Base::Z, Base::Z, {a, b}, {a.inv(), -b.inv()}};
    case Family::ZZmm: return {Base::Z, Base::Z, {a, b}, {-a.inv(), -b.inv()}};
    case Family::ZX1: return {Base::Z, Base::X, {a, 1}, {frac(2) / a, 1}};
    case Family::ZX2: return {Base::Z, Base::X, {a, 1}, {frac(-2) / a, 1}};
    case Family::ZX3: return {Base::Z, Base::X, {a, -1}, {frac(2) / a, 1}};
    case Family::ZX4: return {Base::Z, Base::X, {a, -1}, {frac(-2) / a, 1}};
    case Family::ZX5: return {Base::Z, Base::X, {a, frac(4) / ab2}, {b, -1}};
    case Family::ZX6: return {Base::Z, Base::X, {a, -1}, {b, frac(4) / ab2}};
    case Family::ZH:
      if (ab2.is_one()) throw DomainError("ZH requires a^2 b^2 != 1");
      return {Base::Z, Base::H, {a, (ab2 - 1).inv()}, {b, (1 - ab2) / ab2}};
    case Family::ZW: return {Base::Z, Base::W, {a, ab2.inv()}, {b, 0}};
    case Family::WZ: return {Base::W, Base::Z, {a, 0}, {b, ab2.inv()}};
  }
  throw DomainError("unknown family");
}

}  // namespace

FamilyShape family_shape(const FamilyId& id, Convention conv) {
  require_nonzero(id.a, "a");
  require_nonzero(id.b, "b");
  if (conv == Convention::MainText) {
    if (id.family == Family::ZH && (id.b * id.b).is_one()) {
      throw DomainError("ZH requires b^2 != 1");
    }
    auto [a, b] = main_to_appendix(id.family, id.a, id.b);
    return appendix_shape(id.family, a, b);
  }
  return appendix_shape(id.family, id.a, id.b);
}

ZStarAlgebra shifted_algebra(Base white, const Morphism& alpha, Base black, const Morphism& beta) {
  Frobenius w = base_algebra(white);
  Frobenius b = base_algebra(black);
  return ZStarAlgebra(Frobenius{phase_shift(w.monoid, alpha), w.comonoid},
                      Frobenius{b.monoid, phase_shift(b.comonoid, beta)});
}

ZStarAlgebra family_instance(const FamilyId& id, Convention conv) {
  FamilyShape s = family_shape(id, conv);
  return shifted_algebra(s.white, phase_of(s.white, s.alpha.first, s.alpha.second), s.black,
                         phase_of(s.black, s.beta.first, s.beta.second));
}

CalculusInstance constructed_calculus(std::string name, Base white, const Morphism& alpha,
                                      Base black, const Morphism& beta) {
  ZStarAlgebra z = shifted_algebra(white, alpha, black, beta);
  auto table = modified_generators(z);
  Morphism d = z.dualizer();
  PhaseConstructor wp = [white](const S& x, const S& y) { return phase_of(white, x, y); };
  PhaseConstructor bp = [black, d](const S& x, const S& y) {
    return compose(d, phase_of(black, x, y));
  };
  return CalculusInstance{std::move(name), std::nullopt, std::move(z), white, black,
                          std::move(table), std::move(wp), std::move(bp)};
}

CalculusInstance family_calculus(const FamilyId& id, Convention conv) {
  FamilyShape s = family_shape(id, conv);
  CalculusInstance c = constructed_calculus(
      std::string(family_name(id.family)), s.white,
      phase_of(s.white, s.alpha.first, s.alpha.second), s.black,
      phase_of(s.black, s.beta.first, s.beta.second));
  c.family = id;
  return c;
}

namespace {

using Table = std::map<std::string, Morphism>;

Table z_white(const S& p, const S& q) {
  // Z monoid shifted by phase_of(Z, p, q).
  return {{"white.product", p * prod({1, 0, 0, 0, 0, 0, 0, q})},
          {"white.unit", p.inv() * col2(1, q.inv())},
          {"white.coproduct", coprod({1, 0, 0, 0, 0, 0, 0, 1})},
          {"white.counit", row2(1, 1)},
          {"white.cap", p * row4(1, 0, 0, q)},
          {"white.cup", p.inv() * col4(1, 0, 0, q.inv())}};
}

Table merge(Table a, const Table& b) {
  for (const auto& [k, v] : b) a.insert_or_assign(k, v);
  return a;
}

Table negate_black(Table t) {
  for (auto& [k, v] : t) {
    if (k.rfind("black.", 0) == 0 || k == "dualizer") v = frac(-1) * v;
  }
  return t;
}

Morphism z_white_phase(const S&, const S&, const S& x, const S& y) { return x * op(1, 0, 0, y); }

Table zz1(const S& a, const S& b) {
  return merge(z_white(a, b / a),
               {{"dualizer", op(1, 0, 0, 1)},
                {"black.product", prod({1, 0, 0, 0, 0, 0, 0, 1})},
                {"black.unit", col2(1, 1)},
                {"black.coproduct", coprod({a.inv(), 0, 0, 0, 0, 0, 0, b.inv()})},
                {"black.counit", row2(a, b)}});
}

Table zz2(const S& a, const S& b) {
  return merge(z_white(a, b / a),
               {{"dualizer", op(1, 0, 0, -1)},
                {"black.product", prod({1, 0, 0, 0, 0, 0, 0, -1})},
                {"black.unit", col2(1, -1)},
                {"black.coproduct", coprod({a.inv(), 0, 0, 0, 0, 0, 0, -b.inv()})},
                {"black.counit", row2(a, -b)}});
}

Morphism zz1_phase(const S&, const S&, const S& x, const S& y) { return x * op(1, 0, 0, y); }
Morphism zz2_phase(const S&, const S&, const S& x, const S& y) { return x * op(1, 0, 0, -y); }

Table zx1(const S& a, const S&) {
  return merge(z_white(a, 1),
               {{"dualizer", op(1, 0, 0, 1)},
                {"black.product", prod({1, 0, 0, 1, 0, 1, 1, 0})},
                {"black.unit", col2(1, 0)},
                {"black.coproduct", a.inv() * coprod({1, 0, 0, 1, 0, 1, 1, 0})},
                {"black.counit", a * row2(1, 0)}});
}

Table zx2(const S& a, const S&) {
  return merge(z_white(a, 1),
               {{"dualizer", op(0, 1, 1, 0)},
                {"black.product", prod({0, 1, 1, 0, 1, 0, 0, 1})},
                {"black.unit", col2(0, 1)},
                {"black.coproduct", a.inv() * coprod({0, 1, 1, 0, 1, 0, 0, 1})},
                {"black.counit", a * row2(0, 1)}});
}

Morphism zx1_phase(const S&, const S&, const S& x, const S& y) {
  return (x / 2) * op(y + 1, 1 - y, 1 - y, y + 1);
}

Morphism zx2_phase(const S&, const S&, const S& x, const S& y) {
  return (x / 2) * op(1 - y, 1 + y, 1 + y, 1 - y);
}

Table zx5(const S& a, const S& b) {
  S bi = b.inv();
  return merge(z_white(a / b, b * b),
               {{"dualizer", op(0, b, bi, 0)},
                {"black.product", prod({0, b, b, 0, bi, 0, 0, bi})},
                {"black.unit", col2(0, bi)},
                {"black.coproduct", a.inv() * coprod({0, b * b, 1, 0, 1, 0, 0, bi * bi})},
                {"black.counit", a * row2(0, 1)}});
}

Morphism zx5_phase(const S&, const S& b, const S& x, const S& y) {
  return (x / 2) * op(b - b * y, b + b * y, (y + 1) / b, (1 - y) / b);
}

Table zx6(const S& a, const S& b) {
  S b2 = b * b;
  S k = (2 * b).inv();
  return merge(
      z_white(a, -1),
      {{"dualizer", k * op(b2 + 1, 1 - b2, b2 - 1, -1 - b2)},
       {"black.product",
        k * prod({b2 + 1, 1 - b2, 1 - b2, b2 + 1, b2 - 1, -1 - b2, -1 - b2, b2 - 1})},
       {"black.unit", k * col2(b2 + 1, b2 - 1)},
       {"black.coproduct",
        (2 * a * b).inv() * coprod({b2 + 1, 1 - b2, b2 - 1, -1 - b2, b2 - 1, -1 - b2, b2 + 1, 1 - b2})},
       {"black.counit", (a / (2 * b)) * row2(b2 + 1, 1 - b2)}});
}

Morphism zx6_phase(const S&, const S& b, const S& x, const S& y) {
  S b2y = b * b * y;
  return (x / (2 * b)) * op(b2y + 1, 1 - b2y, b2y - 1, -1 - b2y);
}

Table zh1(const S& a, const S& b) {
  S b2 = b * b;
  S e = b2 - 1;
  return merge(z_white(a, e.inv()),
               {{"dualizer", b.inv() * op(1, 1, e, -1)},
                {"black.product", b.inv() * prod({1, 1, 1, 1, e, e, e, -1})},
                {"black.unit", b.inv() * col2(1, -1)},
                {"black.coproduct", (a * b).inv() * coprod({1, 1, e, e, e, e, e * e, -e})},
                {"black.counit", (a / b) * row2(1, (-e).inv())}});
}

Morphism zh1_phase(const S&, const S& b, const S& x, const S& y) {
  S e = b * b - 1;
  return (x / b) * op(1, 1, e, e - b * b * y);
}

S zh2_root(const S& c) {
  auto s = sqrt_if_exact(c + 1);
  if (!s) throw DomainError("c + 1 has no square root in the field");
  return *s;
}

Table zh2(const S& a, const S& c) {
  S s = zh2_root(c);
  return merge(z_white(a, c.inv()),
               {{"dualizer", s.inv() * op(1, 1, c, -1)},
                {"black.product", s.inv() * prod({1, 1, 1, 1, c, c, c, -1})},
                {"black.unit", s.inv() * col2(1, -1)},
                {"black.coproduct", (a * s).inv() * coprod({1, 1, c, c, c, c, c * c, -c})},
                {"black.counit", (a / s) * row2(1, -c.inv())}});
}

Morphism zh2_phase(const S&, const S& c, const S& x, const S& y) {
  S s = zh2_root(c);
  return (x / s) * op(1, 1, c, c - (c + 1) * y);
}

Table zh_orig(const S&, const S&) {
  S r = S::sqrt2().inv();
  return merge(z_white(1, 1),
               {{"dualizer", r * op(1, 1, 1, -1)},
                {"black.product", r * prod({1, 1, 1, 1, 1, 1, 1, -1})},
                {"black.unit", r * col2(1, -1)},
                {"black.coproduct", r * coprod({1, 1, 1, 1, 1, 1, 1, -1})},
                {"black.counit", r * row2(1, -1)}});
}

Morphism zh_orig_phase(const S&, const S&, const S& x, const S& y) {
  return (x * S::sqrt2().inv()) * op(1, 1, 1, 1 - 2 * y);
}

Table zw1(const S& a, const S& c) {
  S ci = c.inv();
  return merge(z_white(a, ci * ci),
               {{"dualizer", op(0, ci, c, 0)},
                {"black.product", prod({0, ci, ci, 0, c, 0, 0, 0})},
                {"black.unit", col2(0, c)},
                {"black.coproduct", a.inv() * coprod({0, ci, c, 0, c, 0, 0, 0})},
                {"black.counit", a * row2(0, ci)}});
}

Morphism zw1_phase(const S&, const S& c, const S& x, const S& y) {
  return x * op(c * y, c.inv(), c, 0);
}

Table zw_orig(const S&, const S&) {
  return merge(z_white(1, 1),
               {{"dualizer", op(0, 1, 1, 0)},
                {"black.product", prod({0, 1, 1, 0, 1, 0, 0, 0})},
                {"black.unit", col2(0, 1)},
                {"black.coproduct", coprod({0, 1, 1, 0, 1, 0, 0, 0})},
                {"black.counit", row2(0, 1)}});
}

Morphism zw_orig_phase(const S&, const S&, const S& x, const S& y) { return x * op(y, 1, 1, 0); }

Table wz1(const S& a, const S& b) {
  S bi = b.inv();
  return {{"white.product", a * prod({1, 0, 0, 0, 0, 1, 1, 0})},
          {"white.unit", a.inv() * col2(1, 0)},
          {"white.coproduct", coprod({0, 0, 1, 0, 1, 0, 0, 1})},
          {"white.counit", row2(0, 1)},
          {"white.cap", a * row4(0, 1, 1, 0)},
          {"white.cup", a.inv() * col4(0, 1, 1, 0)},
          {"dualizer", op(0, b, bi, 0)},
          {"black.product", prod({0, 0, 0, b, bi, 0, 0, 0})},
          {"black.unit", col2(b, bi)},
          {"black.coproduct", a.inv() * coprod({0, b, 0, 0, 0, 0, bi, 0})},
          {"black.counit", a * row2(bi, b)}};
}

Morphism w_white_phase(const S&, const S&, const S& x, const S& y) { return x * op(1, 0, y, 1); }

Morphism wz1_phase(const S&, const S& b, const S& x, const S& y) {
  return x * op(0, b * y, b.inv(), 0);
}

using Params = std::pair<S, S>;
using ParamFn = std::function<Params(const S&, const S&)>;

template <class Fn>
auto negated(Fn fn) {
  return [fn](const S& a, const S& b, const S& x, const S& y) {
    return frac(-1) * fn(a, b, x, y);
  };
}

std::vector<AppendixTable> build_tables() {
  std::vector<Params> generic = {{2, 3}, {frac(1, 3), -1}, {S::i(), S::sqrt2()}};
  std::vector<Params> one_param = {{2, 1}, {frac(-1, 3), 1}, {S::i() + 1, 1}};
  std::vector<Params> fixed = {{1, 1}};
  std::vector<Params> zh = {{1, S::sqrt2()}, {2, 3}, {frac(1, 3), S::i()}};
  std::vector<Params> zh2_samples = {{1, 1}, {2, 3}, {frac(1, 3), -2}};
  auto zz_alpha = [](const S& a, const S& b) { return Params{a, b / a}; };
  auto zx_alpha = [](const S& a, const S&) { return Params{a, 1}; };
  std::vector<AppendixTable> t;
  t.push_back({"ZZ.1", "Z^(a,b/a) Z_(1/a,a/b)", Base::Z, Base::Z, zz_alpha,
               [](const S& a, const S& b) { return Params{a.inv(), a / b}; }, zz1, z_white_phase,
               zz1_phase, generic});
  t.push_back({"ZZ.2", "Z^(a,b/a) Z_(1/a,-a/b)", Base::Z, Base::Z, zz_alpha,
               [](const S& a, const S& b) { return Params{a.inv(), -a / b}; }, zz2, z_white_phase,
               zz2_phase, generic});
  t.push_back({"ZZ.3", "Z^(a,b/a) Z_(-1/a,a/b)", Base::Z, Base::Z, zz_alpha,
               [](const S& a, const S& b) { return Params{-a.inv(), a / b}; },
               [](const S& a, const S& b) { return negate_black(zz1(a, b)); }, z_white_phase,
               negated(zz1_phase), generic});
  t.push_back({"ZZ.4", "Z^(a,b/a) Z_(-1/a,-a/b)", Base::Z, Base::Z, zz_alpha,
               [](const S& a, const S& b) { return Params{-a.inv(), -a / b}; },
               [](const S& a, const S& b) { return negate_black(zz2(a, b)); }, z_white_phase,
               negated(zz2_phase), generic});
  t.push_back({"ZX.1", "Z^(a,1) X_(2/a,1)", Base::Z, Base::X, zx_alpha,
               [](const S& a, const S&) { return Params{frac(2) / a, 1}; }, zx1, z_white_phase,
               zx1_phase, one_param});
  t.push_back({"ZX.2", "Z^(a,1) X_(2/a,-1)", Base::Z, Base::X, zx_alpha,
               [](const S& a, const S&) { return Params{frac(2) / a, -1}; }, zx2, z_white_phase,
               zx2_phase, one_param});
  t.push_back({"ZX.3", "Z^(a,1) X_(-2/a,-1)", Base::Z, Base::X, zx_alpha,
               [](const S& a, const S&) { return Params{frac(-2) / a, -1}; },
               [](const S& a, const S& b) { return negate_black(zx2(a, b)); }, z_white_phase,
               negated(zx2_phase), one_param});
  t.push_back({"ZX.4", "Z^(a,1) X_(-2/a,1)", Base::Z, Base::X, zx_alpha,
               [](const S& a, const S&) { return Params{frac(-2) / a, 1}; },
               [](const S& a, const S& b) { return negate_black(zx1(a, b)); }, z_white_phase,
               negated(zx1_phase), one_param});
  t.push_back({"ZX.5", "Z^(a/b,b^2) X_(2/a,-1)", Base::Z, Base::X,
               [](const S& a, const S& b) { return Params{a / b, b * b}; },
               [](const S& a, const S&) { return Params{frac(2) / a, -1}; }, zx5, z_white_phase,
               zx5_phase, generic});
  t.push_back({"ZX.6", "Z^(a,-1) X_(2b/a,1/b^2)", Base::Z, Base::X,
               [](const S& a, const S&) { return Params{a, -1}; },
               [](const S& a, const S& b) { return Params{frac(2) * b / a, (b * b).inv()}; }, zx6,
               z_white_phase, zx6_phase, generic});
  t.push_back({"ZH.1", "Z^(a,1/(b^2-1)) H_(b/a,(1-b^2)/b^2)", Base::Z, Base::H,
               [](const S& a, const S& b) { return Params{a, (b * b - 1).inv()}; },
               [](const S& a, const S& b) { return Params{b / a, (1 - b * b) / (b * b)}; }, zh1,
               z_white_phase, zh1_phase, zh});
  t.push_back({"ZH.2", "Z^(a,1/c) H_(sqrt(c+1)/a,-c/(c+1))", Base::Z, Base::H,
               [](const S& a, const S& c) { return Params{a, c.inv()}; },
               [](const S& a, const S& c) { return Params{zh2_root(c) / a, -c / (c + 1)}; }, zh2,
               z_white_phase, zh2_phase, zh2_samples});
  t.push_back({"ZH.orig", "Z^(1,1) H_(sqrt2,-1/2)", Base::Z, Base::H,
               [](const S&, const S&) { return Params{1, 1}; },
               [](const S&, const S&) { return Params{S::sqrt2(), frac(-1, 2)}; }, zh_orig,
               z_white_phase, zh_orig_phase, fixed});
  t.push_back({"ZW.1", "Z^(a,1/c^2) W_(c/a,0)", Base::Z, Base::W,
               [](const S& a, const S& c) { return Params{a, (c * c).inv()}; },
               [](const S& a, const S& c) { return Params{c / a, 0}; }, zw1, z_white_phase,
               zw1_phase, generic});
  t.push_back({"ZW.orig", "Z^(1,1) W_(1,0)", Base::Z, Base::W,
               [](const S&, const S&) { return Params{1, 1}; },
               [](const S&, const S&) { return Params{1, 0}; }, zw_orig, z_white_phase,
               zw_orig_phase, fixed});
  t.push_back({"WZ.1", "W^(a,0) Z_(b/a,1/b^2)", Base::W, Base::Z,
               [](const S& a, const S&) { return Params{a, 0}; },
               [](const S& a, const S& b) { return Params{b / a, (b * b).inv()}; }, wz1,
               w_white_phase, wz1_phase, generic});
  return t;
}

}  // namespace

const std::vector<AppendixTable>& appendix_tables() {
  static const std::vector<AppendixTable> tables = build_tables();
  return tables;
}

const AppendixTable& find_appendix_table(std::string_view name) {
  for (const auto& t : appendix_tables()) {
    if (t.name == name) return t;
  }
  throw DomainError("unknown calculus table '" + std::string(name) + "'");
}

namespace {

CalculusInstance construct_from_table(const AppendixTable& t, const S& a, const S& b) {
  require_nonzero(a, "a");
  require_nonzero(b, "b");
  auto [wa, wb] = t.alpha(a, b);
  auto [ba, bb] = t.beta(a, b);
  return constructed_calculus(t.name, t.white, phase_of(t.white, wa, wb), t.black,
                              phase_of(t.black, ba, bb));
}

}  // namespace

CalculusInstance appendix_table(std::string_view name, const S& a, const S& b) {
  const AppendixTable& t = find_appendix_table(name);
  CalculusInstance c = construct_from_table(t, a, b);
  c.generator_table = t.matrices(a, b);
  auto wp = t.white_phase;
  auto bp = t.black_phase;
  c.white_phase = [wp, a, b](const S& x, const S& y) { return wp(a, b, x, y); };
  c.black_phase = [bp, a, b](const S& x, const S& y) { return bp(a, b, x, y); };
  return c;
}

namespace {

PhaseConformance compare_phase(Base base, const Morphism& d, const PhaseConstructor& table,
                               const PhaseConstructor& built, bool adjust) {
  static const std::vector<Params> samples = {{2, 3}, {-1, frac(1, 3)}, {S::i(), S::sqrt2()}};
  PhaseConformance out{true, true, {}};
  for (const auto& [x, y] : samples) {
    Morphism tabulated = table(x, y);
    if (!(tabulated == built(x, y))) out.same_parameters = false;
    Morphism raw = adjust ? compose(*inverse(d), tabulated) : tabulated;
    auto params = phase_parameters(base, raw);
    if (!params) {
      out.same_family = false;
      out.note = "tabulated phase at (" + x.to_string() + ", " + y.to_string() +
                 ") is not a phase of the construction";
      continue;
    }
    if (!out.same_parameters && out.note.empty()) {
      out.note = "tabulated (x, y) = (" + x.to_string() + ", " + y.to_string() +
                 ") is the constructed phase at (" + params->first.to_string() + ", " +
                 params->second.to_string() + ")";
    }
  }
  return out;
}

}  // namespace

TableConformance check_appendix_table(const AppendixTable& t, const S& a, const S& b) {
  CalculusInstance built = construct_from_table(t, a, b);
  CalculusInstance literal = appendix_table(t.name, a, b);
  TableConformance out;
  out.table = t.name;
  for (const auto& [key, value] : literal.generator_table) {
    auto it = built.generator_table.find(key);
    if (it == built.generator_table.end()) {
      out.generators.add(key, false);
      continue;
    }
    out.generators.check(key, value, it->second);
  }
  const Morphism& d = built.zstar.dualizer();
  out.white_phase = compare_phase(t.white, d, literal.white_phase, built.white_phase, false);
  out.black_phase = compare_phase(t.black, d, literal.black_phase, built.black_phase, true);
  out.zstar = check_zstar(built.zstar);
  return out;
}

Morphism hadamard() { return op(1, 1, 1, -1); }

std::pair<Morphism, Morphism> pi_commutation_sides(const S& lambda) {
  Morphism flip = phase_of(Base::X, 1, -1);
  return {compose(phase_of(Base::Z, 1, lambda), flip),
          lambda * compose(flip, phase_of(Base::Z, 1, lambda.inv()))};
}

std::pair<Morphism, Morphism> zh_commutation_sides(const S& lambda) {
  S l1 = lambda + 1;
  if (lambda.is_zero() || l1.is_zero()) throw DomainError("lambda must differ from 0 and -1");
  Morphism lhs = compose(phase_of(Base::Z, 1, lambda),
                         compose(hadamard(), phase_of(Base::H, 1, frac(1, 2) * l1.inv())));
  Morphism rhs = compose(phase_of(Base::H, 1, 2 * l1),
                         compose(hadamard(), phase_of(Base::Z, 1, lambda.inv())));
  return {(2 * l1 / lambda) * lhs, rhs};
}

std::pair<Morphism, Morphism> zh_commutation_solved_sides(const S& lambda) {
  S l1 = lambda + 1;
  if (lambda.is_zero() || l1.is_zero()) throw DomainError("lambda must differ from 0 and -1");
  Morphism lhs = compose(phase_of(Base::Z, 1, lambda),
                         compose(hadamard(), phase_of(Base::H, 1, l1 / (2 * lambda))));
  Morphism rhs = compose(phase_of(Base::H, 1, 2 * lambda / l1),
                         compose(hadamard(), phase_of(Base::Z, 1, lambda.inv())));
  return {(frac(2) / l1) * lhs, rhs};
}

ZStarAlgebra qudit_zx(std::size_t d) {
  if (d < 2) throw DomainError("qudit dimension must be at least 2");
  Morphism wmu(d, 2, 1), weta(d, 0, 1), wdelta(d, 1, 2), weps(d, 1, 0);
  Morphism bmu(d, 2, 1), beta(d, 0, 1), bdelta(d, 1, 2), beps(d, 1, 0);
  for (std::size_t x = 0; x < d; ++x) {
    wmu.at(x, x * d + x) = 1;
    weta.at(x, 0) = 1;
    wdelta.at(x * d + x, x) = 1;
    weps.at(0, x) = 1;
    for (std::size_t y = 0; y < d; ++y) {
      bmu.at((x + y) % d, x * d + y) = 1;
      bdelta.at(x * d + y, (x + y) % d) = 1;
    }
  }
  beta.at(0, 0) = 1;
  beps.at(0, 0) = 1;
  return ZStarAlgebra(Frobenius{Monoid(wmu, weta), Comonoid(wdelta, weps)},
                      Frobenius{Monoid(bmu, beta), Comonoid(bdelta, beps)});
}

ZStarAlgebra qudit_zw(std::size_t d) {
  if (d < 2) throw DomainError("qudit dimension must be at least 2");
  Morphism wmu(d, 2, 1), weta(d, 0, 1), wdelta(d, 1, 2), weps(d, 1, 0);
  Morphism bmu(d, 2, 1), beta(d, 0, 1), bdelta(d, 1, 2), beps(d, 1, 0);
  for (std::size_t x = 0; x < d; ++x) {
    wmu.at(x, x * d + x) = 1;
    weta.at(x, 0) = 1;
    wdelta.at(x * d + x, x) = 1;
    weps.at(0, x) = 1;
    for (std::size_t y = 0; y < d; ++y) {
      if (x + y < d) bmu.at(x + y, x * d + y) = 1;
      if (x + y >= d - 1) bdelta.at(x * d + y, x + y - (d - 1)) = 1;
    }
  }
  beta.at(0, 0) = 1;
  beps.at(0, d - 1) = 1;
  return ZStarAlgebra(Frobenius{Monoid(wmu, weta), Comonoid(wdelta, weps)},
                      Frobenius{Monoid(bmu, beta), Comonoid(bdelta, beps)});
}

Monoid contracted_algebra(const MultiplicationTable& table) {
  std::size_t n = table.size();
  if (n == 0) throw DomainError("empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw DomainError("multiplication table is not square");
    for (const auto& v : row) {
      if (v && *v >= n) throw DomainError("multiplication table entry out of range");
    }
  }
  auto mul = [&](std::optional<std::size_t> x, std::optional<std::size_t> y) {
    if (!x || !y) return std::optional<std::size_t>{};
    return table[*x][*y];
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] != table[j][i]) throw DomainError("multiplication table is not commutative");
      for (std::size_t k = 0; k < n; ++k) {
        if (mul(mul(i, j), k) != mul(i, mul(j, k))) {
          throw DomainError("multiplication table is not associative");
        }
      }
    }
  }
  Morphism mu(n, 2, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j]) mu.at(*table[i][j], i * n + j) = 1;
    }
  }
  auto unit = solve_unit(mu);
  if (!unit) throw DomainError("multiplication table has no unit");
  return Monoid(std::move(mu), std::move(*unit));
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (Family f : all_families()) names.emplace_back(family_name(f));
  for (const auto& t : appendix_tables()) names.push_back(t.name);
  return names;
}

CalculusInstance catalog_calculus(std::string_view name, const S& a, const S& b) {
  if (auto f = parse_family(name)) return family_calculus({*f, a, b});
  for (const auto& t : appendix_tables()) {
    if (t.name == name) return appendix_table(name, a, b);
  }
  throw DomainError("unknown calculus '" + std::string(name) + "'");
}

}  // namespace zstar
