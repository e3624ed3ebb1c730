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

#include "doctest.h"
#include "support.hpp"
#include "zstar/catalog.hpp"
#include "zstar/errors.hpp"
#include "zstar/linalg.hpp"

using namespace zstar;
using namespace zstar::testing;

TEST_CASE("compose and tensor examples") {
  Frobenius z = base_algebra(Base::Z);
  Rng rng(3);
  Morphism f = random_morphism(rng, 2, 2, 1);
  CHECK(compose(identity(2), f) == f);
  CHECK(compose(z.monoid.mu, z.comonoid.delta) == identity(2));
  CHECK(compose(symmetry(2), symmetry(2)) == identity(2, 2));
  CHECK(tensor(empty(2), f) == f);
  CHECK(tensor(f, empty(2)) == f);
  CHECK(tensor(identity(2), identity(2)) == identity(2, 2));
  Morphism zw = tensor(z.monoid.eta, base_algebra(Base::W).monoid.eta);
  CHECK(zw == Morphism::from_rows(2, 0, 2, {{S(1)}, {S(0)}, {S(1)}, {S(0)}}));
  CHECK_THROWS_AS(compose(f, f), ArityError);
  CHECK_THROWS_AS(tensor(identity(2), identity(3)), ArityError);
}

TEST_CASE("equality requires equal arity") {
  Morphism cap(2, 2, 0), cup(2, 0, 2);
  CHECK(cap.entries().size() == cup.entries().size());
  CHECK_FALSE(cap == cup);
  CHECK(identity(2) != identity(3));
  auto mm = identity(2).first_mismatch(symmetry(2));
  REQUIRE(mm);
  CHECK(mm->row == 2);
  CHECK(mm->col == 2);
  Morphism a = identity(2), b = identity(2);
  b.at(1, 0) = S(5);
  auto m2 = a.first_mismatch(b);
  REQUIRE(m2);
  CHECK(m2->row == 1);
  CHECK(m2->col == 0);
  CHECK(m2->rhs == S(5));
}

TEST_CASE("symmetry, sigma_n and permutations") {
  CHECK(apply(symmetry(2), {0, 1}) == basis_state(2, {1, 0}));
  CHECK(sigma_n(2, 0) == identity(2));
  CHECK(sigma_n(2, 1) == symmetry(2));
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t c = 0; c < 2; ++c) {
        CHECK(apply(sigma_n(2, 2), {a, b, c}) == basis_state(2, {b, c, a}));
      }
    }
  }
  CHECK(permutation(2, {1, 2, 3}) == identity(2, 3));
  CHECK(permutation(2, {2, 1}) == symmetry(2));
  CHECK(permutation(2, {2, 3, 1}) == sigma_n(2, 2));
  CHECK(permutation(3, {3, 1, 2}) == oracle_permutation(3, {2, 0, 1}));
  CHECK_THROWS_AS(permutation(2, {1, 1}), DomainError);
  CHECK_THROWS_AS(permutation(2, {0, 1}), DomainError);
  // sigma_n moves wire 1 past n wires, at every size
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<std::size_t> perm;
    for (std::size_t j = 1; j <= n; ++j) perm.push_back(j);
    perm.push_back(0);
    CHECK(sigma_n(2, n) == oracle_permutation(2, perm));
  }
  // composition of permutations is composition of morphisms
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    std::vector<std::size_t> p = {1, 2, 3}, q = {1, 2, 3};
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    std::vector<std::size_t> pq(3);
    // (P_p o P_q) output j carries q's input at p[j]
    for (std::size_t j = 0; j < 3; ++j) pq[j] = q[p[j] - 1];
    CHECK(compose(permutation(2, p), permutation(2, q)) == permutation(2, pq));
  }
}

TEST_CASE("prop axioms on random morphisms") {
  Rng rng(2024);
  std::uniform_int_distribution<std::size_t> ar(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t a = ar(rng), b = ar(rng), c = ar(rng), e = ar(rng);
    Morphism f = random_morphism(rng, 2, c, e), g = random_morphism(rng, 2, b, c),
             h = random_morphism(rng, 2, a, b);
    CHECK(compose(f, g) == oracle_compose(f, g));
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    CHECK(compose(identity(2, e), f) == f);
    CHECK(compose(f, identity(2, c)) == f);

    std::size_t n1 = ar(rng) % 3, m1 = ar(rng) % 3, n2 = ar(rng) % 3, m2 = ar(rng) % 3;
    Morphism x = random_morphism(rng, 2, n1, m1), y = random_morphism(rng, 2, n2, m2),
             w = random_morphism(rng, 2, ar(rng) % 2, ar(rng) % 2);
    CHECK(tensor(x, y) == oracle_tensor(x, y));
    CHECK(tensor(tensor(x, y), w) == tensor(x, tensor(y, w)));
    CHECK(tensor(empty(2), x) == x);

    // interchange (f1 o g1) (x) (f2 o g2) = (f1 (x) f2) o (g1 (x) g2)
    std::size_t p = ar(rng) % 3, q = ar(rng) % 3, r = ar(rng) % 3, s = ar(rng) % 3;
    Morphism g1 = random_morphism(rng, 2, p, q), f1 = random_morphism(rng, 2, q, 1),
             g2 = random_morphism(rng, 2, r, s), f2 = random_morphism(rng, 2, s, 1);
    CHECK(tensor(compose(f1, g1), compose(f2, g2)) == compose(tensor(f1, f2), tensor(g1, g2)));
  }
  for (int k = 0; k < 20; ++k) {
    Morphism f = random_morphism(rng, 2, 1, 1);
    CHECK(compose(symmetry(2), tensor(f, identity(2))) == compose(tensor(identity(2), f), symmetry(2)));
    Morphism g = random_morphism(rng, 2, 1, 1);
    CHECK(compose(symmetry(2), tensor(f, g)) == compose(tensor(g, f), symmetry(2)));
  }
}

TEST_CASE("scalars, transpose, inverse and rank") {
  Morphism k = scalar_morphism(2, frac(1, 2));
  CHECK(k.inputs() == 0);
  CHECK(k.outputs() == 0);
  CHECK(tensor(k, identity(2)) == frac(1, 2) * identity(2));
  Morphism h = Morphism::from_rows(2, 1, 1, {{S(1), S(1)}, {S(1), S(-1)}});
  auto hinv = inverse(h);
  REQUIRE(hinv);
  CHECK(compose(*hinv, h) == identity(2));
  CHECK(*hinv == frac(1, 2) * h);
  CHECK_FALSE(inverse(Morphism::from_rows(2, 1, 1, {{S(1), S(2)}, {S(2), S(4)}})).has_value());
  CHECK_THROWS_AS(inverse(Morphism(2, 2, 1)), ArityError);
  CHECK(matrix_rank(base_algebra(Base::Z).monoid.mu) == 2);
  CHECK(matrix_rank(Morphism(2, 2, 1)) == 0);
  Morphism mu = base_algebra(Base::H).monoid.mu;
  CHECK(transpose(mu).inputs() == 1);
  CHECK(transpose(transpose(mu)) == mu);
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    Morphism m = random_invertible(rng, 2);
    CHECK(compose(m, *inverse(m)) == identity(2));
    CHECK(compose(*inverse(m), m) == identity(2));
  }
}

TEST_CASE("matrix text format round trip") {
  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    Morphism f(2, t % 3, (t / 3) % 3);
    for (auto r = 0u; r < f.rows(); ++r) {
      for (auto c = 0u; c < f.cols(); ++c) f.at(r, c) = random_scalar(rng);
    }
    std::string text = f.to_text();
    CHECK(Morphism::parse(text) == f);
    CHECK(Morphism::parse(text).to_text() == text);
  }
  std::string text = "# a comment\nmorphism d=2 n=1 m=1\n0, 1\n1, 0\n";
  CHECK(Morphism::parse(text) == Morphism::from_rows(2, 1, 1, {{S(0), S(1)}, {S(1), S(0)}}));
  CHECK_THROWS_AS(Morphism::parse("morphism d=2 n=1 m=1\n0, 1\n"), ParseError);
  CHECK_THROWS_AS(Morphism::parse("morphism d=2 n=1\n"), ParseError);
  CHECK_THROWS_AS(Morphism::parse("morphism d=2 n=1 m=1\n0, 1, 2\n1, 0\n"), ParseError);
}

TEST_CASE("row reduction over rationals and prime fields") {
  using linalg::Matrix;
  Matrix<Rational> a = {{Rational(1), Rational(2), Rational(3)},
                        {Rational(2), Rational(4), Rational(6)},
                        {Rational(0), Rational(1), Rational(1)}};
  CHECK(linalg::rank(a, 3) == 2);
  auto ns = linalg::nullspace(a, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : a) {
    Rational dot = 0;
    for (std::size_t k = 0; k < 3; ++k) dot += row[k] * ns[0][k];
    CHECK(dot == 0);
  }
  Matrix<Zp<3>> b = {{Zp<3>(1), Zp<3>(1)}, {Zp<3>(2), Zp<3>(2)}};
  CHECK(linalg::rank(b, 2) == 1);
}
