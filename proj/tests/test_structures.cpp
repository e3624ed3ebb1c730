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

#include <stdexcept>

#include "doctest.h"
#include "support.hpp"
#include "zstar/errors.hpp"
#include "zstar/structures.hpp"

using namespace zstar;
using namespace zstar::testing;

namespace {

Morphism m2(S a, S b, S c, S d) { return Morphism::from_rows(2, 1, 1, {{a, b}, {c, d}}); }

// Frobenius algebras of the catalog: the four bases and both sides of every sample calculus.
std::vector<std::pair<std::string, Frobenius>> catalog_frobenius() {
  std::vector<std::pair<std::string, Frobenius>> out;
  for (Base b : {Base::Z, Base::X, Base::H, Base::W}) {
    out.emplace_back(std::string(base_name(b)), base_algebra(b));
  }
  for (const auto& c : sample_calculi()) {
    out.emplace_back(c.name + ".white", c.zstar.white());
    out.emplace_back(c.name + ".black", c.zstar.black());
  }
  return out;
}

// Candidate phases of a Frobenius algebra: the tabulated phase shapes of every base,
// filtered by the phase equation of the monoid.
std::vector<Morphism> sampled_phases(const Frobenius& f, std::size_t count) {
  std::vector<Morphism> out;
  const std::vector<std::pair<S, S>> params = {
      {S(1), S(2)}, {S(2), S(-1)}, {frac(1, 3), S(3)}, {ii(), S(2)},   {S(-1), ii()},
      {S(2), r2()}, {frac(1, 2), frac(-1, 2)}, {S(3), S(5)}, {r2(), S(-3)}, {S(1), frac(1, 4)},
      {S(5), ii() + S(1)}, {S(-2), S(7)}};
  for (Base b : {Base::Z, Base::X, Base::H, Base::W}) {
    for (const auto& [a, bb] : params) {
      Morphism p = phase_of(b, a, bb);
      if (is_phase(f.monoid, p)) out.push_back(p);
      if (out.size() == count) return out;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("monoid and comonoid law checks") {
  Frobenius z = base_algebra(Base::Z), w = base_algebra(Base::W);
  CHECK(check_monoid(z.monoid).all_passed());
  CHECK(check_monoid(w.monoid).all_passed());
  CHECK(check_comonoid(z.comonoid).all_passed());
  Monoid bad(z.monoid.mu, Morphism::from_rows(2, 0, 1, {{S(1)}, {S(0)}}));
  LawReport r = check_monoid(bad);
  CHECK_FALSE(r.passed("unit.left"));
  CHECK(r.passed("associativity"));
  CHECK(r.passed("commutativity"));
  const LawResult* unit = nullptr;
  for (const auto& x : r.results()) {
    if (x.law == "unit.left") unit = &x;
  }
  REQUIRE(unit);
  REQUIRE(unit->mismatch);
  CHECK_THROWS_AS(r.passed("no such law"), std::out_of_range);
  CHECK_THROWS_AS(Monoid(identity(2), z.monoid.eta), ArityError);
  CHECK_THROWS_AS(Comonoid(z.comonoid.delta, identity(2)), ArityError);
  CHECK(r.to_text().find("unit.left") != std::string::npos);

  // a non-commutative monoid: 2x2 upper triangular matrices would need d=4; use the
  // left-projection product x*y = x on d=2 with no unit
  Morphism left = Morphism::from_rows(2, 2, 1, {{S(1), S(1), S(0), S(0)}, {S(0), S(0), S(1), S(1)}});
  LawReport nc = check_monoid(Monoid(left, z.monoid.eta));
  CHECK_FALSE(nc.passed("commutativity"));
  CHECK(nc.passed("associativity"));
}

TEST_CASE("base Frobenius algebras") {
  for (Base b : {Base::Z, Base::X, Base::H, Base::W}) {
    CAPTURE(base_name(b));
    CHECK(check_frobenius(base_algebra(b)).all_passed());
    CHECK(check_compact(induced_compact(base_algebra(b))).all_passed());
  }
}

TEST_CASE("is_phase and phase shifting") {
  Frobenius z = base_algebra(Base::Z), w = base_algebra(Base::W);
  CHECK(is_phase(z.monoid, S(3) * m2(S(1), S(0), S(0), S(5))));
  CHECK(is_phase(w.monoid, S(2) * m2(S(1), S(0), S(4), S(1))));
  CHECK_FALSE(is_phase(z.monoid, m2(S(0), S(1), S(1), S(0))));
  CHECK_FALSE(is_phase(z.monoid, m2(S(1), S(0), S(0), S(0))));

  CHECK(phase_shift(z.monoid, identity(2)) == z.monoid);
  Morphism flip = m2(S(1), S(0), S(0), S(-1));
  Monoid zs = phase_shift(z.monoid, flip);
  CHECK(zs.mu == compose(flip, z.monoid.mu));
  CHECK(zs.eta == Morphism::from_rows(2, 0, 1, {{S(1)}, {S(-1)}}));
  CHECK(check_monoid(zs).all_passed());
  CHECK(check_monoid(phase_shift(w.monoid, m2(S(1), S(0), S(1), S(1)))).all_passed());
  CHECK_THROWS_AS(phase_shift(z.monoid, m2(S(0), S(1), S(1), S(0))), DomainError);
  Comonoid cs = phase_shift(z.comonoid, flip);
  CHECK(check_comonoid(cs).all_passed());
  CHECK(cs.delta == compose(z.comonoid.delta, flip));
}

TEST_CASE("n-ary products") {
  Frobenius z = base_algebra(Base::Z);
  CHECK(mu_n(z.monoid, 0) == z.monoid.eta);
  CHECK(mu_n(z.monoid, 1) == identity(2));
  CHECK(mu_n(z.monoid, 2) == z.monoid.mu);
  Morphism m3 = mu_n(z.monoid, 3);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t c = 0; c < 2; ++c) {
        Morphism expect = (a == b && b == c) ? basis_state(2, {a}) : Morphism(2, 0, 1);
        CHECK(apply(m3, {a, b, c}) == expect);
      }
    }
  }
  for (const auto& [name, f] : catalog_frobenius()) {
    CAPTURE(name);
    for (std::size_t n = 0; n <= 2; ++n) {
      for (std::size_t p = 0; p <= 2; ++p) {
        CHECK(mu_n(f.monoid, n + p) == compose(f.monoid.mu, tensor(mu_n(f.monoid, n), mu_n(f.monoid, p))));
        CHECK(delta_n(f.comonoid, n + p) ==
              compose(tensor(delta_n(f.comonoid, n), delta_n(f.comonoid, p)), f.comonoid.delta));
      }
    }
  }
}

TEST_CASE("spiders") {
  Frobenius z = base_algebra(Base::Z);
  CHECK(spider(z, 1, 1) == identity(2));
  CHECK(spider(z, 2, 1) == z.monoid.mu);
  CHECK(spider(z, 1, 2) == z.comonoid.delta);
  Morphism a = phase_of(Base::Z, S(2), S(3)), b = phase_of(Base::Z, ii(), frac(1, 2));
  CHECK(compose(spider(z, 1, 1, a), spider(z, 1, 1, b)) == spider(z, 1, 1, compose(a, b)));
  CHECK_THROWS_AS(spider(z, 1, 1, m2(S(0), S(1), S(1), S(0))), DomainError);
}

TEST_CASE("spider fusion grid on every sample calculus") {
  for (const auto& calc : sample_calculi()) {
    for (const Frobenius* f : {&calc.zstar.white(), &calc.zstar.black()}) {
      CAPTURE(calc.name);
      auto phases = sampled_phases(*f, 1);
      REQUIRE(phases.size() == 1);
      const Morphism& alpha = phases[0];
      const Morphism beta = compose(alpha, alpha);
      // one loop of the algebra: mu o Delta
      const Morphism loop = compose(f->monoid.mu, f->comonoid.delta);
      for (std::size_t n = 0; n <= 3; ++n) {
        for (std::size_t m = 1; n + m <= 4; ++m) {
          for (std::size_t p = 1; p <= 4; ++p) {
            for (std::size_t q = 0; p + q <= 4; ++q) {
              for (std::size_t k = 1; k <= 2 && k <= m && k <= p; ++k) {
                Morphism first = tensor(spider(*f, n, m, alpha), identity(2, p - k));
                Morphism second = tensor(identity(2, m - k), spider(*f, p, q, beta));
                Morphism composed = compose(second, first);
                Morphism middle = compose(beta, alpha);
                for (std::size_t extra = 1; extra < k; ++extra) middle = compose(loop, middle);
                Morphism fused = compose(delta_n(f->comonoid, m - k + q),
                                         compose(middle, mu_n(f->monoid, n + p - k)));
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(p);
                CAPTURE(q);
                CAPTURE(k);
                REQUIRE(composed == fused);
                if (k == 1) REQUIRE(fused == spider(*f, n + p - 1, m - 1 + q, middle));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("induced compact structures") {
  auto z = induced_compact(base_algebra(Base::Z));
  CHECK(z.cap == Morphism::from_rows(2, 2, 0, {{S(1), S(0), S(0), S(1)}}));
  CHECK(z.cup == Morphism::from_rows(2, 0, 2, {{S(1)}, {S(0)}, {S(0)}, {S(1)}}));
  auto w = induced_compact(base_algebra(Base::W));
  CHECK(w.cap == Morphism::from_rows(2, 2, 0, {{S(0), S(1), S(1), S(0)}}));
  CHECK(w.cup == Morphism::from_rows(2, 0, 2, {{S(0)}, {S(1)}, {S(1)}, {S(0)}}));
  auto h = induced_compact(base_algebra(Base::H));
  CHECK(h.cap == Morphism::from_rows(2, 2, 0, {{S(1), S(1), S(1), S(2)}}));
  CHECK(h.cup == Morphism::from_rows(2, 0, 2, {{S(2)}, {S(-1)}, {S(-1)}, {S(1)}}));
  for (const auto& [name, f] : catalog_frobenius()) {
    CAPTURE(name);
    CHECK(check_compact(induced_compact(f)).all_passed());
  }
}

TEST_CASE("dualizers") {
  auto cz = induced_compact(base_algebra(Base::Z));
  auto cw = induced_compact(base_algebra(Base::W));
  CHECK(dualizer(cz, cw) == m2(S(0), S(1), S(1), S(0)));
  CHECK(dualizer(cz, cz) == identity(2));
  // H at b = r2 after shifting: the ZH family member a = 1, b = r2.
  ZStarAlgebra zh = family_instance({Family::ZH, S(1), r2()});
  CHECK(dualizer(induced_compact(zh.white()), induced_compact(zh.black())) ==
        (S(1) / r2()) * m2(S(1), S(1), S(1), S(-1)));

  // the two dualizers of any pair are mutually inverse, compatible or not
  std::vector<CompactStructure> all;
  for (const auto& [name, f] : catalog_frobenius()) all.push_back(induced_compact(f));
  for (const auto& a : all) {
    for (const auto& b : all) {
      REQUIRE(compose(dualizer(a, b), dualizer(b, a)) == identity(2));
    }
  }
}

TEST_CASE("compatibility") {
  Frobenius z = base_algebra(Base::Z), w = base_algebra(Base::W), h = base_algebra(Base::H);
  CHECK(check_compatibility(z, w));
  CHECK(check_compatibility(z, z));
  // H with a = c = 1 and b = 2 violates a^2 c^2 (d + 1) = 1
  Frobenius h2{phase_shift(h.monoid, identity(2)), phase_shift(h.comonoid, phase_of(Base::H, S(1), S(2)))};
  CHECK_FALSE(check_compatibility(z, h2));
  CHECK_FALSE(check_compatibility(z, base_algebra(Base::X)));
}

TEST_CASE("bialgebra laws") {
  Frobenius z = base_algebra(Base::Z), x = base_algebra(Base::X), w = base_algebra(Base::W);
  LawReport zx = check_bialgebra(z.comonoid, x.monoid);
  for (const char* law : {"B", "C1", "C2", "Id"}) CHECK(zx.passed(law));
  CHECK(check_bialgebra(z.comonoid, w.monoid).passed("B"));
  CHECK_FALSE(check_bialgebra(w.comonoid, w.monoid).passed("B"));
  CHECK(check_bialgebra(z.comonoid, z.monoid).passed("B"));
}

TEST_CASE("Z*-algebra checks") {
  CHECK(check_zstar(family_instance({Family::ZW, S(1), S(1)})).all_passed());
  CHECK(check_zstar(family_instance({Family::ZH, S(1), r2()})).all_passed());
  Frobenius z = base_algebra(Base::Z);
  Frobenius zb{z.monoid, phase_shift(z.comonoid, phase_of(Base::Z, S(2), S(1)))};
  LawReport bad = check_zstar(ZStarAlgebra(z, zb));
  CHECK_FALSE(bad.passed("compatibility"));
  CHECK(bad.passed("bigebra"));
}

TEST_CASE("phase-shifted Z*-algebras") {
  ZStarAlgebra zx(base_algebra(Base::Z), base_algebra(Base::X));
  auto same = phase_shift_zstar(zx, identity(2), identity(2));
  CHECK(same.algebra.white() == zx.white());
  CHECK(same.algebra.black() == zx.black());
  CHECK(same.compatible == check_compatibility(zx.white(), zx.black()));
  CHECK(same.equation_holds == same.compatible);

  auto good = phase_shift_zstar(zx, phase_of(Base::Z, S(3), S(1)), phase_of(Base::X, frac(2, 3), S(1)));
  CHECK(good.compatible);
  CHECK(good.equation_holds);
  CHECK(check_zstar(good.algebra).all_passed());
  auto bad = phase_shift_zstar(zx, phase_of(Base::Z, S(1), S(2)), phase_of(Base::X, S(1), S(1)));
  CHECK_FALSE(bad.compatible);
  CHECK_FALSE(bad.equation_holds);
  CHECK_THROWS_AS(phase_shift_zstar(zx, m2(S(0), S(1), S(1), S(0)), identity(2)), DomainError);
}

TEST_CASE("phases of the monoid are phases of the comonoid") {
  for (const auto& [name, f] : catalog_frobenius()) {
    CAPTURE(name);
    auto phases = sampled_phases(f, 10);
    REQUIRE(phases.size() == 10);
    for (const auto& p : phases) CHECK(is_phase(f.comonoid, p));
  }
}

TEST_CASE("phase-shifted comonoids keep the Frobenius law and the phase is recoverable") {
  for (const auto& [name, f] : catalog_frobenius()) {
    CAPTURE(name);
    for (const auto& alpha : sampled_phases(f, 4)) {
      Comonoid shifted = phase_shift(f.comonoid, alpha);
      CHECK(check_frobenius(Frobenius{f.monoid, shifted}).all_passed());
      auto back = extract_phase(f, shifted);
      REQUIRE(back);
      CHECK(*back == alpha);
    }
  }
  Frobenius z = base_algebra(Base::Z);
  CHECK_FALSE(extract_phase(z, base_algebra(Base::W).comonoid).has_value());
}

TEST_CASE("modified generators") {
  ZStarAlgebra zw = family_instance({Family::ZW, S(1), S(1)});
  auto g = modified_generators(zw);
  CHECK(g.at("white.product") == zw.white().monoid.mu);
  CHECK(g.at("black.product") == compose(zw.dualizer(), zw.black().monoid.mu));
  CHECK(g.at("black.product") == Morphism::from_rows(2, 2, 1, {{S(0), S(1), S(1), S(0)}, {S(1), S(0), S(0), S(0)}}));
  CHECK(g.at("black.unit") == Morphism::from_rows(2, 0, 1, {{S(0)}, {S(1)}}));
  CHECK(g.at("dualizer") == zw.dualizer());
  for (const char* key : {"white.product", "white.unit", "white.coproduct", "white.counit", "white.cap",
                          "white.cup", "dualizer", "black.product", "black.unit", "black.coproduct",
                          "black.counit"}) {
    CHECK(g.count(key) == 1);
  }
}
