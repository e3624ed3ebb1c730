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

#include "zstar/structures.hpp"

#include <sstream>
#include <stdexcept>

#include "zstar/errors.hpp"
#include "zstar/linalg.hpp"

namespace zstar {

void LawReport::add(std::string law, bool passed, std::optional<Mismatch> mismatch) {
  results_.push_back({std::move(law), passed, std::move(mismatch)});
}

bool LawReport::check(std::string law, const Morphism& lhs, const Morphism& rhs) {
  auto mismatch = lhs.first_mismatch(rhs);
  bool ok = !mismatch.has_value();
  add(std::move(law), ok, std::move(mismatch));
  return ok;
}

void LawReport::merge(const LawReport& other, std::string_view prefix) {
  for (const auto& r : other.results_) {
    results_.push_back({std::string(prefix) + r.law, r.passed, r.mismatch});
  }
}

bool LawReport::all_passed() const {
  for (const auto& r : results_) {
    if (!r.passed) return false;
  }
  return true;
}

bool LawReport::passed(std::string_view law) const {
  for (const auto& r : results_) {
    if (r.law == law) return r.passed;
  }
  throw std::out_of_range("law not in report: " + std::string(law));
}

std::string LawReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : results_) {
    os << (r.passed ? "pass  " : "FAIL  ") << r.law;
    if (r.mismatch) {
      os << "  first mismatch at (" << r.mismatch->row << "," << r.mismatch->col
         << "): " << r.mismatch->lhs << " vs " << r.mismatch->rhs;
    }
    os << "\n";
  }
  return os.str();
}

namespace {

void expect_arity(const Morphism& f, std::size_t n, std::size_t m, const char* what) {
  if (f.inputs() != n || f.outputs() != m) {
    throw ArityError(std::string(what) + " must be " + std::to_string(n) + " -> " +
                     std::to_string(m) + ", got " + std::to_string(f.inputs()) + " -> " +
                     std::to_string(f.outputs()));
  }
}

void expect_same_dim(const Morphism& a, const Morphism& b) {
  if (a.dim() != b.dim()) throw ArityError("structure maps have different wire dimensions");
}

Morphism id1(std::size_t d) { return identity(d); }

}  // namespace

Monoid::Monoid(Morphism mu_, Morphism eta_) : mu(std::move(mu_)), eta(std::move(eta_)) {
  expect_arity(mu, 2, 1, "product");
  expect_arity(eta, 0, 1, "unit");
  expect_same_dim(mu, eta);
}

Comonoid::Comonoid(Morphism delta_, Morphism epsilon_)
    : delta(std::move(delta_)), epsilon(std::move(epsilon_)) {
  expect_arity(delta, 1, 2, "coproduct");
  expect_arity(epsilon, 1, 0, "counit");
  expect_same_dim(delta, epsilon);
}

CompactStructure::CompactStructure(Morphism cup_, Morphism cap_)
    : cup(std::move(cup_)), cap(std::move(cap_)) {
  expect_arity(cup, 0, 2, "cup");
  expect_arity(cap, 2, 0, "cap");
  expect_same_dim(cup, cap);
}

LawReport check_monoid(const Monoid& m) {
  expect_arity(m.mu, 2, 1, "product");
  expect_arity(m.eta, 0, 1, "unit");
  std::size_t d = m.dim();
  LawReport r;
  r.check("unit.left", compose(m.mu, tensor(m.eta, id1(d))), id1(d));
  r.check("unit.right", compose(m.mu, tensor(id1(d), m.eta)), id1(d));
  r.check("associativity", compose(m.mu, tensor(m.mu, id1(d))),
          compose(m.mu, tensor(id1(d), m.mu)));
  r.check("commutativity", compose(m.mu, symmetry(d)), m.mu);
  return r;
}

LawReport check_comonoid(const Comonoid& c) {
  expect_arity(c.delta, 1, 2, "coproduct");
  expect_arity(c.epsilon, 1, 0, "counit");
  std::size_t d = c.dim();
  LawReport r;
  r.check("counit.left", compose(tensor(c.epsilon, id1(d)), c.delta), id1(d));
  r.check("counit.right", compose(tensor(id1(d), c.epsilon), c.delta), id1(d));
  r.check("coassociativity", compose(tensor(c.delta, id1(d)), c.delta),
          compose(tensor(id1(d), c.delta), c.delta));
  r.check("cocommutativity", compose(symmetry(d), c.delta), c.delta);
  return r;
}

LawReport check_frobenius(const Frobenius& f) {
  std::size_t d = f.dim();
  LawReport r;
  r.merge(check_monoid(f.monoid), "monoid.");
  r.merge(check_comonoid(f.comonoid), "comonoid.");
  const Morphism& mu = f.monoid.mu;
  const Morphism& delta = f.comonoid.delta;
  Morphism middle = compose(delta, mu);
  r.check("frobenius.left", compose(tensor(mu, id1(d)), tensor(id1(d), delta)), middle);
  r.check("frobenius.right", compose(tensor(id1(d), mu), tensor(delta, id1(d))), middle);
  return r;
}

LawReport check_compact(const CompactStructure& c) {
  std::size_t d = c.cup.dim();
  LawReport r;
  r.check("snake.left", compose(tensor(c.cap, id1(d)), tensor(id1(d), c.cup)), id1(d));
  r.check("snake.right", compose(tensor(id1(d), c.cap), tensor(c.cup, id1(d))), id1(d));
  r.check("cap.symmetry", compose(c.cap, symmetry(d)), c.cap);
  r.check("cup.symmetry", compose(symmetry(d), c.cup), c.cup);
  return r;
}

std::optional<Morphism> solve_unit(const Morphism& mu) {
  expect_arity(mu, 2, 1, "product");
  std::size_t n = mu.dim();
  linalg::Matrix<ExactScalar> a;
  std::vector<ExactScalar> rhs;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<ExactScalar> eq(n);
      for (std::size_t k = 0; k < n; ++k) eq[k] = mu.at(r, k * n + j);
      a.push_back(std::move(eq));
      rhs.push_back(r == j ? ExactScalar(1) : ExactScalar(0));
    }
  }
  auto u = linalg::solve(a, rhs, n);
  if (!u) return std::nullopt;
  return Morphism(n, 0, 1, std::move(*u));
}

bool is_phase(const Monoid& m, const Morphism& op) {
  if (op.inputs() != 1 || op.outputs() != 1 || op.dim() != m.dim()) return false;
  if (!is_invertible(op)) return false;
  return compose(m.mu, tensor(op, id1(m.dim()))) == compose(op, m.mu);
}

bool is_phase(const Comonoid& c, const Morphism& op) {
  if (op.inputs() != 1 || op.outputs() != 1 || op.dim() != c.dim()) return false;
  if (!is_invertible(op)) return false;
  return compose(tensor(op, id1(c.dim())), c.delta) == compose(c.delta, op);
}

Monoid phase_shift(const Monoid& m, const Morphism& alpha) {
  if (!is_phase(m, alpha)) throw DomainError("not a phase of the monoid");
  return Monoid(compose(alpha, m.mu), compose(*inverse(alpha), m.eta));
}

Comonoid phase_shift(const Comonoid& c, const Morphism& alpha) {
  if (!is_phase(c, alpha)) throw DomainError("not a phase of the comonoid");
  return Comonoid(compose(c.delta, alpha), compose(c.epsilon, *inverse(alpha)));
}

Morphism mu_n(const Monoid& m, std::size_t n) {
  if (n == 0) return m.eta;
  Morphism r = id1(m.dim());
  for (std::size_t k = 1; k < n; ++k) r = compose(m.mu, tensor(r, id1(m.dim())));
  return r;
}

Morphism delta_n(const Comonoid& c, std::size_t n) {
  if (n == 0) return c.epsilon;
  Morphism r = id1(c.dim());
  for (std::size_t k = 1; k < n; ++k) r = compose(tensor(r, id1(c.dim())), c.delta);
  return r;
}

Morphism spider(const Frobenius& f, std::size_t n, std::size_t m,
                const std::optional<Morphism>& alpha) {
  Morphism inner = mu_n(f.monoid, n);
  if (alpha) {
    if (!is_phase(f.monoid, *alpha)) throw DomainError("spider decoration is not a phase");
    inner = compose(*alpha, inner);
  }
  return compose(delta_n(f.comonoid, m), inner);
}

CompactStructure induced_compact(const Frobenius& f) {
  return CompactStructure(compose(f.comonoid.delta, f.monoid.eta),
                          compose(f.comonoid.epsilon, f.monoid.mu));
}

Morphism dualizer(const CompactStructure& a, const CompactStructure& b) {
  std::size_t d = a.cup.dim();
  if (b.cup.dim() != d) throw ArityError("dualizer: wire dimensions differ");
  return compose(tensor(a.cap, id1(d)), tensor(id1(d), b.cup));
}

bool check_compatibility(const Frobenius& a, const Frobenius& b) {
  Morphism d = dualizer(induced_compact(a), induced_compact(b));
  return compose(d, d) == id1(a.dim());
}

LawReport check_bialgebra(const Comonoid& c, const Monoid& m) {
  std::size_t d = c.dim();
  if (m.dim() != d) throw ArityError("bialgebra: wire dimensions differ");
  LawReport r;
  Morphism middle = tensor(tensor(id1(d), symmetry(d)), id1(d));
  r.check("B", compose(c.delta, m.mu),
          compose(tensor(m.mu, m.mu), compose(middle, tensor(c.delta, c.delta))));
  r.check("C1", compose(c.delta, m.eta), tensor(m.eta, m.eta));
  r.check("C2", compose(c.epsilon, m.mu), tensor(c.epsilon, c.epsilon));
  r.check("Id", compose(c.epsilon, m.eta), empty(d));
  return r;
}

ZStarAlgebra::ZStarAlgebra(Frobenius white, Frobenius black)
    : white_(std::move(white)),
      black_(std::move(black)),
      dualizer_(zstar::dualizer(induced_compact(white_), induced_compact(black_))) {
  if (white_.dim() != black_.dim()) throw ArityError("Z*-algebra: wire dimensions differ");
}

LawReport check_zstar(const ZStarAlgebra& z) {
  LawReport r;
  r.merge(check_frobenius(z.white()), "white.");
  r.merge(check_frobenius(z.black()), "black.");
  LawReport bi = check_bialgebra(z.white().comonoid, z.black().monoid);
  for (const auto& law : bi.results()) {
    if (law.law == "B") r.add("bigebra", law.passed, law.mismatch);
  }
  r.check("compatibility", compose(z.dualizer(), z.dualizer()), id1(z.dim()));
  return r;
}

PhaseShiftedZStar phase_shift_zstar(const ZStarAlgebra& z, const Morphism& alpha,
                                    const Morphism& beta) {
  Frobenius white{phase_shift(z.white().monoid, alpha), z.white().comonoid};
  Frobenius black{z.black().monoid, phase_shift(z.black().comonoid, beta)};
  ZStarAlgebra shifted(std::move(white), std::move(black));
  bool compatible = compose(shifted.dualizer(), shifted.dualizer()) == id1(z.dim());
  const Morphism& d = z.dualizer();
  Morphism lhs = compose(beta, compose(d, alpha));
  Morphism rhs = compose(*inverse(alpha), compose(*inverse(d), *inverse(beta)));
  return {std::move(shifted), compatible, lhs == rhs};
}

std::optional<Morphism> extract_phase(const Frobenius& f, const Comonoid& shifted) {
  std::size_t d = f.dim();
  Morphism alpha = compose(tensor(f.comonoid.epsilon, id1(d)), shifted.delta);
  if (!is_phase(f.comonoid, alpha)) return std::nullopt;
  if (!(phase_shift(f.comonoid, alpha) == shifted)) return std::nullopt;
  return alpha;
}

std::map<std::string, Morphism> modified_generators(const ZStarAlgebra& z) {
  const Frobenius& w = z.white();
  const Frobenius& b = z.black();
  const Morphism& d = z.dualizer();
  CompactStructure cw = induced_compact(w);
  return {
      {"white.product", w.monoid.mu},
      {"white.unit", w.monoid.eta},
      {"white.coproduct", w.comonoid.delta},
      {"white.counit", w.comonoid.epsilon},
      {"white.cap", cw.cap},
      {"white.cup", cw.cup},
      {"dualizer", d},
      {"black.product", compose(d, b.monoid.mu)},
      {"black.unit", compose(d, b.monoid.eta)},
      {"black.coproduct", compose(tensor(d, d), b.comonoid.delta)},
      {"black.counit", b.comonoid.epsilon},
  };
}

}  // namespace zstar
