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

#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "zstar/classification.hpp"
#include "zstar/errors.hpp"

using namespace zstar;
using namespace zstar::testing;

namespace {

Morphism m2(S a, S b, S c, S d) { return Morphism::from_rows(2, 1, 1, {{a, b}, {c, d}}); }

Morphism candidate(int a, int b, int c, int d, int e, int f) {
  return Morphism::from_rows(2, 2, 1, {{S(a), S(b), S(b), S(c)}, {S(d), S(e), S(e), S(f)}});
}

// (B): Delta o mu = (mu (x) mu) o (id (x) sigma (x) id) o (Delta (x) Delta), via the oracles.
bool oracle_bigebra(const Morphism& delta, const Morphism& mu) {
  Morphism middle = oracle_permutation(2, {0, 2, 1, 3});
  Morphism rhs = oracle_compose(oracle_tensor(mu, mu), oracle_compose(middle, oracle_tensor(delta, delta)));
  return oracle_compose(delta, mu) == rhs;
}

// Rank of a 2x4 matrix via its 2x2 minors.
int oracle_rank(const Morphism& m) {
  bool nonzero = false;
  for (std::size_t c = 0; c < 4; ++c) nonzero = nonzero || !m.at(0, c).is_zero() || !m.at(1, c).is_zero();
  if (!nonzero) return 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (!(m.at(0, i) * m.at(1, j) - m.at(0, j) * m.at(1, i)).is_zero()) return 2;
    }
  }
  return 1;
}

Morphism ket(std::size_t v) { return basis_state(2, {v}); }

Morphism product(const Morphism& mu, const Morphism& x, const Morphism& y) {
  return oracle_compose(mu, oracle_tensor(x, y));
}

// Automorphisms by the characterization: identity and swap for Z, diag(1, a) for W.
bool oracle_in_family(Base which, const Morphism& m) {
  if (which == Base::Z) return m == identity(2) || m == m2(S(0), S(1), S(1), S(0));
  return m.at(0, 0).is_one() && m.at(0, 1).is_zero() && m.at(1, 0).is_zero() && !m.at(1, 1).is_zero();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("bigebra pair enumeration stages") {
  BigebraEnumeration e = enumerate_bigebra_pairs_deltaZ();
  CHECK(e.candidates.size() == 64);
  CHECK(e.solutions.size() == 27);
  CHECK(e.rank2.size() == 12);
  CHECK(e.orbits.size() == 7);
  CHECK(e.representatives.size() == 7);
  REQUIRE(e.algebras.size() == 4);
  std::set<Base> found;
  for (const auto& [b, m] : e.algebras) {
    found.insert(b);
    CHECK(m == base_algebra(b).monoid);
    CHECK(check_monoid(m).all_passed());
  }
  CHECK(found == std::set<Base>{Base::Z, Base::X, Base::H, Base::W});
  CHECK(e.pairs == std::vector<std::string>{"mu_W/Delta_Z", "mu_X/Delta_Z", "mu_Z/Delta_Z", "mu_H/Delta_Z",
                                            "mu_Z/Delta_W"});
  CHECK(e.pair_checks.all_passed());
}

TEST_CASE("enumeration agrees with an independent scan") {
  Morphism dz = base_algebra(Base::Z).comonoid.delta;
  BigebraEnumeration e = enumerate_bigebra_pairs_deltaZ();
  int solutions = 0, rank2 = 0;
  std::size_t k = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int d = 0; d < 2; ++d) {
          for (int ee = 0; ee < 2; ++ee) {
            for (int f = 0; f < 2; ++f) {
              Morphism mu = candidate(a, b, c, d, ee, f);
              bool ok = oracle_bigebra(dz, mu);
              int r = oracle_rank(mu);
              const BigebraCandidate& got = e.candidates[k++];
              CHECK(got.mu == mu);
              CHECK(got.bits == std::array<int, 6>{a, b, c, d, ee, f});
              CHECK(got.satisfies_b == ok);
              CHECK(got.rank == static_cast<std::size_t>(r));
              CHECK(candidate_from_bits(got.bits) == mu);
              CHECK(candidate_bits(mu) == got.bits);
              solutions += ok;
              rank2 += ok && r == 2;
            }
          }
        }
      }
    }
  }
  CHECK(solutions == 27);
  CHECK(rank2 == 12);
}

TEST_CASE("rejected candidates fail associativity at the cited input") {
  BigebraEnumeration e = enumerate_bigebra_pairs_deltaZ();
  std::set<std::array<int, 6>> algebra_bits;
  for (const auto& [b, m] : e.algebras) algebra_bits.insert(candidate_bits(m.mu));
  int rejected = 0;
  for (const auto& orbit : e.orbits) {
    bool is_algebra = false;
    for (const auto& m : orbit) is_algebra = is_algebra || algebra_bits.count(candidate_bits(m));
    if (is_algebra) continue;
    for (const auto& mu : orbit) {
      ++rejected;
      Morphism left = product(mu, product(mu, ket(0), ket(0)), ket(1));
      Morphism right = product(mu, ket(0), product(mu, ket(0), ket(1)));
      CHECK(left != right);
      CHECK_FALSE(check_monoid(Monoid(mu, ket(0))).passed("associativity"));
    }
  }
  CHECK(rejected == 5);
  CHECK(e.rejected.size() == 3);
  for (const auto& r : e.rejected) CHECK(r.left != r.right);
}

TEST_CASE("golden trace") {
  std::string golden = read_text(std::string(ZSTAR_SOURCE_DIR) + "/tests/golden/bigebra_deltaZ.txt");
  REQUIRE_FALSE(golden.empty());
  CHECK(enumerate_bigebra_pairs_deltaZ().trace() == golden);
  CHECK(enumerate_bigebra_pairs_deltaZ().trace() == enumerate_bigebra_pairs_deltaZ().trace());
}

TEST_CASE("normalization of the four algebras") {
  Normalization x = normalize_algebra(base_algebra(Base::X).monoid);
  CHECK(x.tag == AlgebraType::ZType);
  CHECK(x.normal_form.verify());
  REQUIRE(x.canonical);
  CHECK(x.canonical->verify());
  CHECK(x.canonical->target == base_algebra(Base::Z).monoid);
  REQUIRE(x.displayed_final_change_exact);
  CHECK_FALSE(*x.displayed_final_change_exact);
  // the displayed final change sends mu_X to r2 mu_Z
  Morphism shown = r2().inv() * m2(S(1), S(-1), S(1), S(1));
  Morphism sinv = *inverse(shown);
  CHECK(compose(shown, compose(base_algebra(Base::X).monoid.mu, tensor(sinv, sinv))) ==
        r2() * base_algebra(Base::Z).monoid.mu);

  Normalization w = normalize_algebra(base_algebra(Base::W).monoid);
  CHECK(w.tag == AlgebraType::WType);
  CHECK(w.lambda == S(0));
  REQUIRE(w.canonical);
  CHECK(w.canonical->target == base_algebra(Base::W).monoid);

  Normalization h = normalize_algebra(base_algebra(Base::H).monoid);
  CHECK(h.tag == AlgebraType::ZType);
  CHECK_FALSE(h.lambda.is_zero());
  REQUIRE(h.canonical);
  CHECK(h.canonical->verify());

  for (Base b : {Base::Z, Base::X, Base::H, Base::W}) {
    Normalization n = normalize_algebra(base_algebra(b).monoid);
    // lambda read off the normal form: e1 * e1 = lambda e0 and e0 is the unit
    const Monoid& t = n.normal_form.target;
    CHECK(t.eta == ket(0));
    CHECK(product(t.mu, ket(1), ket(1)) == n.lambda * ket(0));
    CHECK(t == study_normal_form(n.lambda));
    CHECK(n.displayed_lambda == n.x + n.y * n.y / 2);
    CHECK(n.displayed_formula_matches == (n.displayed_lambda == n.lambda));
    CHECK(n.lambda == n.x + n.y * n.y / 4);
  }
}

TEST_CASE("normalization without a square root stays in normal form") {
  Monoid three = study_normal_form(S(3));
  Normalization n = normalize_algebra(three);
  CHECK(n.tag == AlgebraType::ZType);
  CHECK(n.lambda == S(3));
  CHECK_FALSE(n.canonical.has_value());
  CHECK(n.note == "normal form reached, witness to Z unavailable in field");
}

TEST_CASE("normalization rejects non-algebras") {
  Monoid no_unit(base_algebra(Base::Z).monoid.mu, ket(0));
  CHECK_THROWS_AS(normalize_algebra(no_unit), DomainError);
  Monoid nonassoc(candidate(0, 0, 1, 1, 0, 0), ket(0));
  CHECK_THROWS_AS(normalize_algebra(nonassoc), DomainError);
}

TEST_CASE("classification is invariant under conjugation") {
  Rng rng(31);
  for (int k = 0; k < 20; ++k) {
    Morphism r = random_invertible(rng, 2);
    for (Base b : {Base::Z, Base::X, Base::H, Base::W}) {
      Monoid m = base_algebra(b).monoid;
      Monoid c = conjugate(m, r);
      CHECK(check_monoid(c).all_passed());
      Normalization nc = normalize_algebra(c);
      CHECK(nc.tag == normalize_algebra(m).tag);
      CHECK(nc.normal_form.verify());
      IsoWitness w{r, m, c};
      CHECK(w.verify());
    }
  }
}

TEST_CASE("automorphisms of mu_Z and mu_W") {
  Monoid z = base_algebra(Base::Z).monoid, w = base_algebra(Base::W).monoid;
  CHECK(is_automorphism(z, m2(S(0), S(1), S(1), S(0))));
  CHECK(is_automorphism(z, identity(2)));
  CHECK(is_automorphism(w, m2(S(1), S(0), S(0), S(5))));
  CHECK_FALSE(is_automorphism(z, m2(S(1), S(0), S(0), S(2))));
  for (const S& a : {S(2), S(-1), ii(), r2(), frac(1, 3)}) {
    CHECK(is_automorphism(w, m2(S(1), S(0), S(0), a)));
    CHECK(in_automorphism_family(Base::W, m2(S(1), S(0), S(0), a)));
  }
  Rng rng(77);
  std::vector<Morphism> candidates = {identity(2), m2(S(0), S(1), S(1), S(0)), m2(S(1), S(0), S(0), S(2))};
  int outside = 0;
  while (outside < 50) {
    Morphism r = random_invertible(rng, 2);
    candidates.push_back(r);
    for (Base b : {Base::Z, Base::W}) {
      if (oracle_in_family(b, r)) continue;
      const Monoid& m = b == Base::Z ? z : w;
      CHECK_FALSE(is_automorphism(m, r));
      CHECK_FALSE(in_automorphism_family(b, r));
    }
    if (!oracle_in_family(Base::Z, r) && !oracle_in_family(Base::W, r)) ++outside;
  }
  CHECK(verify_automorphisms(Base::Z, candidates).consistent());
  CHECK(verify_automorphisms(Base::W, candidates).consistent());
  CHECK_THROWS_AS(verify_automorphisms(Base::X, candidates), DomainError);
}

TEST_CASE("bigebra solutions against Delta_W") {
  DeltaWReport r = solve_bigebra_deltaW();
  CHECK(r.family_mirrored.all_passed());
  CHECK(r.family_tabulated.all_passed());
  CHECK(r.off_family.all_passed());
  CHECK(r.reductions.all_passed());
  CHECK(r.consistent());
  Comonoid dw = base_algebra(Base::W).comonoid;
  CHECK(oracle_bigebra(dw.delta, candidate(1, 0, 0, 0, 0, 1)));
  CHECK_FALSE(oracle_bigebra(dw.delta, candidate(1, 1, 0, 0, 0, 1)));
  CHECK(check_bialgebra(dw, Monoid(candidate(1, 0, 0, 0, 0, 1), Morphism::from_rows(2, 0, 1, {{S(1)}, {S(1)}})))
            .passed("B"));
  Monoid f2(Morphism::from_rows(2, 2, 1, {{S(1), S(0), S(0), S(0)}, {S(0), S(0), S(0), S(2)}}),
            Morphism::from_rows(2, 0, 1, {{S(1)}, {frac(1, 2)}}));
  CHECK(conjugate(f2, m2(S(1), S(0), S(0), S(2))) == base_algebra(Base::Z).monoid);
  CHECK(oracle_bigebra(r.mirrored.delta, f2.mu));
}

TEST_CASE("compatibility systems agree with the dualizer check") {
  CompatibilitySystemsReport r = verify_compatibility_systems();
  CHECK(r.all_agree());
  for (const char* shape : {"ZZ", "ZX", "ZH", "ZW", "WZ"}) {
    CAPTURE(shape);
    CHECK(r.count(shape, true) + r.count(shape, false) >= 8);
    CHECK(r.count(shape, true) >= 1);
    CHECK(r.count(shape, false) >= 1);
  }
  for (const auto& s : r.samples) CHECK(s.matrix_verdict == s.system_verdict);

  CHECK(compatibility_system("ZZ", S(2), S(3), frac(1, 2), frac(1, 3)));
  CHECK(compatibility_by_matrix("ZZ", S(2), S(3), frac(1, 2), frac(1, 3)));
  CHECK_FALSE(compatibility_system("ZZ", S(2), S(3), frac(1, 2), frac(1, 2)));
  CHECK_FALSE(compatibility_by_matrix("ZZ", S(2), S(3), frac(1, 2), frac(1, 2)));
  CHECK(compatibility_system("ZH", S(1), S(1), r2(), frac(-1, 2)));
  CHECK(compatibility_by_matrix("ZH", S(1), S(1), r2(), frac(-1, 2)));
  CHECK_FALSE(compatibility_by_matrix("ZH", S(1), S(2), r2(), frac(-1, 2)));
  CHECK(compatibility_by_matrix("ZW", S(1), S(1), S(1), S(0)));
  CHECK_FALSE(compatibility_by_matrix("ZW", S(1), S(1), S(1), S(1)));

  // dense sweep: both formulations agree on a grid
  const std::vector<S> grid = {S(1), S(-1), S(2), frac(1, 2), frac(-1, 2), ii(), r2()};
  for (const char* shape : {"ZZ", "ZX", "ZH"}) {
    for (const S& a : grid) {
      for (const S& d : grid) {
        for (const S& c : {S(1), r2(), S(2), frac(1, 2)}) {
          S b = S(1);
          CHECK(compatibility_system(shape, a, b, c, d) == compatibility_by_matrix(shape, a, b, c, d));
        }
      }
    }
  }
}
