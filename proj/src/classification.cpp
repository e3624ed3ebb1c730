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

#include "zstar/classification.hpp"

#include <sstream>

#include "zstar/errors.hpp"

namespace zstar {

namespace {

using S = ExactScalar;

Morphism op(S a, S b, S c, S d) { return Morphism(2, 1, 1, {a, b, c, d}); }
Morphism swap2() { return op(0, 1, 1, 0); }

Morphism inverse_or_throw(const Morphism& m) {
  auto inv = inverse(m);
  if (!inv) throw DomainError("basis change is not invertible");
  return *inv;
}

std::string flat(const Morphism& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ",";
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ",";
      os << m.at(r, c);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

Monoid conjugate(const Monoid& m, const Morphism& basis_change) {
  Morphism inv = inverse_or_throw(basis_change);
  return Monoid(compose(basis_change, compose(m.mu, tensor(inv, inv))),
                compose(basis_change, m.eta));
}

Comonoid conjugate(const Comonoid& c, const Morphism& basis_change) {
  Morphism inv = inverse_or_throw(basis_change);
  return Comonoid(compose(tensor(basis_change, basis_change), compose(c.delta, inv)),
                  compose(c.epsilon, inv));
}

bool is_automorphism(const Monoid& m, const Morphism& basis_change) {
  if (!is_invertible(basis_change)) return false;
  return conjugate(m, basis_change) == m;
}

bool is_automorphism(const Comonoid& c, const Morphism& basis_change) {
  if (!is_invertible(basis_change)) return false;
  return conjugate(c, basis_change) == c;
}

bool IsoWitness::verify() const {
  if (!is_invertible(basis_change)) return false;
  return conjugate(source, basis_change) == target;
}

Monoid study_normal_form(const S& lambda) {
  return Monoid(Morphism(2, 2, 1, {1, 0, 0, lambda, 0, 1, 1, 0}), Morphism(2, 0, 1, {1, 0}));
}

Normalization normalize_algebra(const Monoid& m) {
  if (m.dim() != 2) throw DomainError("normalize_algebra expects a 2-dimensional algebra");
  LawReport laws = check_monoid(m);
  if (!laws.passed("associativity")) throw DomainError("algebra is not associative");
  if (!laws.passed("unit.left") || !laws.passed("unit.right")) {
    throw DomainError("algebra is not unital");
  }
  if (!laws.passed("commutativity")) throw DomainError("algebra is not commutative");

  // Columns of p: the unit, then a vector completing it to a basis.
  const Morphism& eta = m.eta;
  S v0 = eta.at(0, 0).is_zero() ? S(1) : S(0);
  S v1 = eta.at(0, 0).is_zero() ? S(0) : S(1);
  Morphism p = op(eta.at(0, 0), v0, eta.at(1, 0), v1);
  Morphism to_unit_basis = inverse_or_throw(p);
  Monoid m1 = conjugate(m, to_unit_basis);
  S x = m1.mu.at(0, 3);
  S y = m1.mu.at(1, 3);

  Morphism square = op(1, y / 2, 0, 1);
  Morphism to_normal = compose(square, to_unit_basis);
  Monoid m2 = conjugate(m, to_normal);
  S lambda = m2.mu.at(0, 3);

  Normalization out{AlgebraType::ZType, x, y, lambda, x + y * y / 2, false,
                    IsoWitness{to_normal, m, study_normal_form(lambda)}, std::nullopt,
                    std::nullopt, {}};
  out.displayed_formula_matches = out.displayed_lambda == lambda;
  if (!out.normal_form.verify()) {
    out.note = "completing the square did not reach the normal form";
    return out;
  }
  if (lambda.is_zero()) {
    out.tag = AlgebraType::WType;
    out.canonical = IsoWitness{to_normal, m, base_algebra(Base::W).monoid};
    return out;
  }
  auto root = sqrt_if_exact(lambda);
  if (!root) {
    out.note = "normal form reached, witness to Z unavailable in field";
    return out;
  }
  Morphism to_x = compose(op(1, 0, 0, *root), to_normal);
  Morphism x_to_z = op(1, -1, 1, 1);
  out.canonical = IsoWitness{compose(x_to_z, to_x), m, base_algebra(Base::Z).monoid};
  Morphism displayed = S::sqrt2().inv() * x_to_z;
  out.displayed_final_change_exact =
      conjugate(base_algebra(Base::X).monoid, displayed) == base_algebra(Base::Z).monoid;
  return out;
}

bool in_automorphism_family(Base which, const Morphism& m) {
  if (m.dim() != 2 || m.inputs() != 1 || m.outputs() != 1) return false;
  switch (which) {
    case Base::Z:
      return m == identity(2) || m == swap2();
    case Base::W:
      return m.at(0, 0).is_one() && m.at(0, 1).is_zero() && m.at(1, 0).is_zero() &&
             !m.at(1, 1).is_zero();
    default:
      throw DomainError("automorphisms are characterized only for Z and W");
  }
}

bool AutomorphismReport::consistent() const {
  for (const auto& v : verdicts) {
    if (v.is_automorphism != v.in_characterized_family) return false;
  }
  return true;
}

AutomorphismReport verify_automorphisms(Base which, const std::vector<Morphism>& candidates) {
  if (which != Base::Z && which != Base::W) {
    throw DomainError("automorphisms are characterized only for Z and W");
  }
  Monoid m = base_algebra(which).monoid;
  AutomorphismReport report{which, {}};
  for (const auto& c : candidates) {
    report.verdicts.push_back({c, is_automorphism(m, c), in_automorphism_family(which, c)});
  }
  return report;
}

Morphism candidate_from_bits(const std::array<int, 6>& v) {
  return Morphism(2, 2, 1, {v[0], v[1], v[1], v[2], v[3], v[4], v[4], v[5]});
}

std::array<int, 6> candidate_bits(const Morphism& mu) {
  std::array<int, 6> bits{};
  const std::size_t idx[6][2] = {{0, 0}, {0, 1}, {0, 3}, {1, 0}, {1, 1}, {1, 3}};
  for (int k = 0; k < 6; ++k) bits[k] = mu.at(idx[k][0], idx[k][1]).is_one() ? 1 : 0;
  return bits;
}

namespace {

std::string bits_text(const std::array<int, 6>& bits) {
  std::string s;
  for (int b : bits) s += static_cast<char>('0' + b);
  return s;
}

Morphism swap_conjugate(const Morphism& mu) {
  return compose(swap2(), compose(mu, tensor(swap2(), swap2())));
}

}  // namespace

BigebraEnumeration enumerate_bigebra_pairs_deltaZ() {
  BigebraEnumeration out;
  Comonoid dz = base_algebra(Base::Z).comonoid;
  Morphism any_unit(2, 0, 1, {1, 0});
  for (int code = 0; code < 64; ++code) {
    std::array<int, 6> bits{};
    for (int k = 0; k < 6; ++k) bits[k] = (code >> (5 - k)) & 1;
    BigebraCandidate cand{bits, candidate_from_bits(bits), false, 0};
    cand.satisfies_b = check_bialgebra(dz, Monoid(cand.mu, any_unit)).passed("B");
    cand.rank = matrix_rank(cand.mu);
    if (cand.satisfies_b) {
      out.solutions.push_back(cand.mu);
      if (cand.rank == 2) out.rank2.push_back(cand.mu);
    }
    out.candidates.push_back(std::move(cand));
  }

  std::vector<bool> used(out.rank2.size(), false);
  for (std::size_t k = 0; k < out.rank2.size(); ++k) {
    if (used[k]) continue;
    used[k] = true;
    std::vector<Morphism> orbit{out.rank2[k]};
    Morphism image = swap_conjugate(out.rank2[k]);
    for (std::size_t j = k + 1; j < out.rank2.size(); ++j) {
      if (!used[j] && out.rank2[j] == image) {
        used[j] = true;
        orbit.push_back(image);
      }
    }
    Morphism rep = orbit.front();
    for (const auto& member : orbit) {
      for (Base b : {Base::Z, Base::X, Base::H, Base::W}) {
        if (member == base_algebra(b).monoid.mu) rep = member;
      }
    }
    out.orbits.push_back(orbit);
    out.representatives.push_back(rep);
  }

  Morphism e0(2, 0, 1, {1, 0}), e1(2, 0, 1, {0, 1});
  for (const auto& mu : out.representatives) {
    auto unit = solve_unit(mu);
    bool associative = compose(mu, tensor(mu, identity(2))) == compose(mu, tensor(identity(2), mu));
    if (associative && unit && check_monoid(Monoid(mu, *unit)).all_passed()) {
      for (Base b : {Base::Z, Base::X, Base::H, Base::W}) {
        if (base_algebra(b).monoid == Monoid(mu, *unit)) out.algebras.emplace_back(b, Monoid(mu, *unit));
      }
      continue;
    }
    Morphism left = compose(mu, tensor(compose(mu, tensor(e0, e0)), e1));
    Morphism right = compose(mu, tensor(e0, compose(mu, tensor(e0, e1))));
    out.rejected.push_back({mu, left, right});
  }

  for (const auto& [b, m] : out.algebras) {
    std::string name = "mu_" + std::string(base_name(b)) + "/Delta_Z";
    bool ok = check_bialgebra(dz, m).passed("B");
    out.pair_checks.add(name, ok);
    if (ok) out.pairs.push_back(name);
  }
  Frobenius z = base_algebra(Base::Z);
  bool zw = check_bialgebra(base_algebra(Base::W).comonoid, z.monoid).passed("B");
  out.pair_checks.add("mu_Z/Delta_W", zw);
  if (zw) out.pairs.push_back("mu_Z/Delta_W");
  return out;
}

std::string BigebraEnumeration::trace() const {
  std::ostringstream os;
  os << "# bigebra (B) scan of [[a,b,b,c],[d,e,e,f]] against Delta_Z\n";
  for (const auto& c : candidates) {
    os << "candidate " << bits_text(c.bits) << " B=" << (c.satisfies_b ? "pass" : "fail")
       << " rank=" << c.rank << "\n";
  }
  os << "stage candidates " << candidates.size() << "\n";
  os << "stage solutions " << solutions.size() << "\n";
  os << "stage rank2 " << rank2.size() << "\n";
  os << "stage orbits " << orbits.size() << "\n";
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    os << "orbit";
    for (const auto& m : orbits[k]) os << " " << bits_text(candidate_bits(m));
    os << " representative " << bits_text(candidate_bits(representatives[k])) << "\n";
  }
  for (const auto& [b, m] : algebras) {
    os << "algebra " << base_name(b) << " mu=" << flat(m.mu) << " eta=" << flat(m.eta) << "\n";
  }
  for (const auto& r : rejected) {
    os << "rejected " << bits_text(candidate_bits(r.mu)) << " (e0*e0)*e1=" << flat(r.left)
       << " e0*(e0*e1)=" << flat(r.right) << "\n";
  }
  os << "stage algebras " << algebras.size() << "\n";
  for (const auto& p : pairs) os << "pair " << p << "\n";
  os << "stage pairs " << pairs.size() << "\n";
  return os.str();
}

bool DeltaWReport::consistent() const {
  return family_mirrored.all_passed() && family_tabulated.all_passed() && off_family.all_passed() &&
         reductions.all_passed() && !family_against_tabulated.results().empty() &&
         [this] {
           for (const auto& r : family_against_tabulated.results()) {
             if (r.passed) return false;
           }
           return true;
         }();
}

DeltaWReport solve_bigebra_deltaW() {
  DeltaWReport out;
  out.tabulated = base_algebra(Base::W).comonoid;
  out.mirrored = conjugate(out.tabulated, swap2());
  auto b_holds = [](const Comonoid& c, const Morphism& mu) {
    return check_bialgebra(c, Monoid(mu, Morphism(2, 0, 1, {1, 0}))).passed("B");
  };
  auto cand = [](S a, S b, S c, S d, S e, S f) {
    return Morphism(2, 2, 1, {a, b, b, c, d, e, e, f});
  };
  std::vector<S> fs = {1, 2, -1, S::i(), S::sqrt2()};
  for (const S& f : fs) {
    std::string tag = "f=" + f.to_string();
    out.family_mirrored.add(tag, b_holds(out.mirrored, cand(1, 0, 0, 0, 0, f)));
    out.family_tabulated.add(tag, b_holds(out.tabulated, cand(f, 0, 0, 0, 0, 1)));
    if (!f.is_one()) {
      out.family_against_tabulated.add(tag, b_holds(out.tabulated, cand(1, 0, 0, 0, 0, f)));
    }
    Morphism df = op(1, 0, 0, f);
    Morphism fd = op(f, 0, 0, 1);
    out.reductions.add("diag(1,f) automorphism of mirrored, " + tag,
                       is_automorphism(out.mirrored, df));
    out.reductions.add("diag(f,1) automorphism of tabulated, " + tag,
                       is_automorphism(out.tabulated, fd));
    Morphism fam = cand(1, 0, 0, 0, 0, f);
    Morphism reduced = compose(df, compose(fam, tensor(*inverse(df), *inverse(df))));
    out.reductions.add("diag(1,f) carries family to mu_Z, " + tag,
                       reduced == base_algebra(Base::Z).monoid.mu);
    Morphism mir = cand(f, 0, 0, 0, 0, 1);
    Morphism reduced_t = compose(fd, compose(mir, tensor(*inverse(fd), *inverse(fd))));
    out.reductions.add("diag(f,1) carries mirrored family to mu_Z, " + tag,
                       reduced_t == base_algebra(Base::Z).monoid.mu);
  }
  // Constraint equations of the (B) system: off-family points must fail.
  struct Off {
    const char* name;
    Morphism mu;
  };
  std::vector<Off> offs = {
      {"a=2", cand(2, 0, 0, 0, 0, 1)},
      {"a=-1", cand(-1, 0, 0, 0, 0, 3)},
      {"a=1/2", cand(S::fraction(1, 2), 0, 0, 0, 0, 1)},
      {"b=1", cand(1, 1, 0, 0, 0, 1)},
      {"c=1", cand(1, 0, 1, 0, 0, 1)},
      {"d=1", cand(1, 0, 0, 1, 0, 1)},
      {"e=1", cand(1, 0, 0, 0, 1, 1)},
  };
  for (const auto& o : offs) {
    out.off_family.add(std::string("mirrored rejects ") + o.name, !b_holds(out.mirrored, o.mu));
  }
  out.off_family.add("zero solution", b_holds(out.mirrored, cand(0, 0, 0, 0, 0, 0)));
  out.off_family.add("b=1 inserted rejected by tabulated",
                     !b_holds(out.tabulated, cand(1, 1, 0, 0, 0, 1)));
  return out;
}

bool CompatibilitySystemsReport::all_agree() const {
  for (const auto& s : samples) {
    if (s.matrix_verdict != s.system_verdict) return false;
  }
  return true;
}

std::size_t CompatibilitySystemsReport::count(const std::string& shape, bool compatible) const {
  std::size_t n = 0;
  for (const auto& s : samples) {
    if (s.shape == shape && s.matrix_verdict == compatible) ++n;
  }
  return n;
}

bool compatibility_system(const std::string& shape, const S& a, const S& b, const S& c,
                          const S& d) {
  S k = a * a * c * c;
  if (shape == "ZZ") return k.is_one() && (b * b * d * d).is_one();
  if (shape == "ZX") {
    return ((d * k - 4) * (1 + d)).is_zero() && ((k * b * d + 4) * (1 - d)).is_zero() &&
           ((k * b * b * d - 4) * (1 + d)).is_zero();
  }
  if (shape == "ZH") {
    return (k * (d + 1)).is_one() && (k * b * d + 1).is_zero() &&
           (k * b * b * d * d - 1 - d).is_zero();
  }
  if (shape == "ZW") return d.is_zero() && (k * b).is_one();
  if (shape == "WZ") return b.is_zero() && (k * d).is_one();
  throw DomainError("unknown compatibility shape '" + shape + "'");
}

bool compatibility_by_matrix(const std::string& shape, const S& a, const S& b, const S& c,
                             const S& d) {
  if (shape.size() != 2) throw DomainError("unknown compatibility shape '" + shape + "'");
  auto white = parse_base(shape.substr(0, 1));
  auto black = parse_base(shape.substr(1, 1));
  if (!white || !black) throw DomainError("unknown compatibility shape '" + shape + "'");
  Frobenius w = base_algebra(*white);
  Frobenius bl = base_algebra(*black);
  Frobenius ws{phase_shift(w.monoid, phase_of(*white, a, b)), w.comonoid};
  Frobenius bs{bl.monoid, phase_shift(bl.comonoid, phase_of(*black, c, d))};
  return check_compatibility(ws, bs);
}

CompatibilitySystemsReport verify_compatibility_systems() {
  CompatibilitySystemsReport out;
  auto add = [&out](const std::string& shape, S a, S b, S c, S d) {
    out.samples.push_back({shape, {a, b}, {c, d}, compatibility_by_matrix(shape, a, b, c, d),
                           compatibility_system(shape, a, b, c, d)});
  };
  const std::vector<std::pair<S, S>> params = {
      {1, 2}, {2, 3}, {-1, S::fraction(1, 3)}, {S::i(), S::sqrt2()}, {S::sqrt2(), -1}};
  auto shape_of = [](Family f) -> std::string {
    switch (f) {
      case Family::ZZpp: case Family::ZZmp: case Family::ZZpm: case Family::ZZmm: return "ZZ";
      case Family::ZH: return "ZH";
      case Family::ZW: return "ZW";
      case Family::WZ: return "WZ";
      default: return "ZX";
    }
  };
  for (Family f : all_families()) {
    for (const auto& [a, b] : params) {
      FamilyShape s;
      try {
        s = family_shape({f, a, b});
      } catch (const DomainError&) {
        continue;
      }
      std::string shape = shape_of(f);
      auto [wa, wb] = s.alpha;
      auto [ba, bb] = s.beta;
      add(shape, wa, wb, ba, bb);
      add(shape, wa, wb, 2 * ba, bb);
      if (shape == "WZ") {
        add(shape, wa, wb, ba, bb + 1);
      } else {
        add(shape, wa, wb + 1 == 0 ? S(2) : wb + 1, ba, bb);
      }
    }
  }
  add("ZZ", 2, 3, S::fraction(1, 2), S::fraction(1, 3));
  add("ZZ", 2, 3, S::fraction(1, 2), S::fraction(1, 2));
  add("ZH", 1, 1, S::sqrt2(), S::fraction(-1, 2));
  return out;
}

}  // namespace zstar
