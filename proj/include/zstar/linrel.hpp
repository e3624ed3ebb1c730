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

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zstar/errors.hpp"
#include "zstar/finite_field.hpp"
#include "zstar/linalg.hpp"
#include "zstar/structures.hpp"

namespace zstar::linrel {

using linalg::Matrix;

// A linear relation n -> m: a subspace of K^(n+m), inputs first, stored as a
// reduced row echelon basis.
template <Field F>
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t inputs, std::size_t outputs, Matrix<F> rows)
      : inputs_(inputs), outputs_(outputs), basis_(std::move(rows)) {
    for (const auto& r : basis_) {
      if (r.size() != width()) throw ArityError("relation basis vector has the wrong length");
    }
    linalg::rref(basis_, width());
  }

  std::size_t inputs() const { return inputs_; }
  std::size_t outputs() const { return outputs_; }
  std::size_t width() const { return inputs_ + outputs_; }
  std::size_t dimension() const { return basis_.size(); }
  const Matrix<F>& basis() const { return basis_; }

  bool contains(const std::vector<F>& v) const {
    Matrix<F> m = basis_;
    m.push_back(v);
    return linalg::rank(m, width()) == basis_.size();
  }

  // Vectors w with w . v = 0 for every v in the relation.
  Matrix<F> annihilator() const { return linalg::nullspace(basis_, width()); }

  Relation canonical() const { return Relation(inputs_, outputs_, basis_); }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.inputs_ == b.inputs_ && a.outputs_ == b.outputs_ && a.basis_ == b.basis_;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << inputs_ << "->" << outputs_ << " span{";
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (r) os << ",";
      os << "(";
      for (std::size_t c = 0; c < basis_[r].size(); ++c) {
        if (c) os << ",";
        os << field_to_string(basis_[r][c]);
      }
      os << ")";
    }
    os << "}";
    return os.str();
  }

 private:
  std::size_t inputs_ = 0;
  std::size_t outputs_ = 0;
  Matrix<F> basis_;
};

template <Field F>
Relation<F> identity(std::size_t wires = 1) {
  Matrix<F> rows;
  for (std::size_t k = 0; k < wires; ++k) {
    std::vector<F> v(2 * wires, F(0));
    v[k] = F(1);
    v[wires + k] = F(1);
    rows.push_back(std::move(v));
  }
  return Relation<F>(wires, wires, std::move(rows));
}

template <Field F>
Relation<F> symmetry() {
  return Relation<F>(2, 2, {{F(1), F(0), F(0), F(1)}, {F(0), F(1), F(1), F(0)}});
}

// Relational converse: swaps the roles of inputs and outputs.
template <Field F>
Relation<F> converse(const Relation<F>& f) {
  Matrix<F> rows;
  for (const auto& r : f.basis()) {
    std::vector<F> v(r.begin() + f.inputs(), r.end());
    v.insert(v.end(), r.begin(), r.begin() + f.inputs());
    rows.push_back(std::move(v));
  }
  return Relation<F>(f.outputs(), f.inputs(), std::move(rows));
}

// {(x, z) : exists y, (x, y) in g and (y, z) in f}.
template <Field F>
Relation<F> compose(const Relation<F>& f, const Relation<F>& g) {
  if (f.inputs() != g.outputs()) throw ArityError("relation composition arity mismatch");
  std::size_t a = g.inputs(), b = g.outputs(), c = f.outputs();
  std::size_t width = a + b + c;
  Matrix<F> constraints;
  for (const auto& w : g.annihilator()) {
    std::vector<F> v(width, F(0));
    std::copy(w.begin(), w.end(), v.begin());
    constraints.push_back(std::move(v));
  }
  for (const auto& w : f.annihilator()) {
    std::vector<F> v(width, F(0));
    std::copy(w.begin(), w.end(), v.begin() + a);
    constraints.push_back(std::move(v));
  }
  Matrix<F> solutions = linalg::nullspace(constraints, width);
  Matrix<F> projected;
  for (const auto& s : solutions) {
    std::vector<F> v(s.begin(), s.begin() + a);
    v.insert(v.end(), s.begin() + a + b, s.end());
    projected.push_back(std::move(v));
  }
  return Relation<F>(a, c, std::move(projected));
}

// Direct sum, coordinates ordered (inputs of f, inputs of g, outputs of f, outputs of g).
template <Field F>
Relation<F> tensor(const Relation<F>& f, const Relation<F>& g) {
  std::size_t n = f.inputs() + g.inputs(), m = f.outputs() + g.outputs();
  Matrix<F> rows;
  for (const auto& r : f.basis()) {
    std::vector<F> v(n + m, F(0));
    for (std::size_t k = 0; k < f.inputs(); ++k) v[k] = r[k];
    for (std::size_t k = 0; k < f.outputs(); ++k) v[n + k] = r[f.inputs() + k];
    rows.push_back(std::move(v));
  }
  for (const auto& r : g.basis()) {
    std::vector<F> v(n + m, F(0));
    for (std::size_t k = 0; k < g.inputs(); ++k) v[f.inputs() + k] = r[k];
    for (std::size_t k = 0; k < g.outputs(); ++k) v[n + f.outputs() + k] = r[g.inputs() + k];
    rows.push_back(std::move(v));
  }
  return Relation<F>(n, m, std::move(rows));
}

template <Field F>
bool is_invertible(const Relation<F>& r) {
  if (r.inputs() != r.outputs()) return false;
  Relation<F> c = converse(r);
  return compose(r, c) == identity<F>(r.inputs()) && compose(c, r) == identity<F>(r.inputs());
}

template <Field F>
struct Monoid {
  Relation<F> mu;   // 2 -> 1
  Relation<F> eta;  // 0 -> 1
  friend bool operator==(const Monoid&, const Monoid&) = default;
};

template <Field F>
struct Comonoid {
  Relation<F> delta;    // 1 -> 2
  Relation<F> epsilon;  // 1 -> 0
  friend bool operator==(const Comonoid&, const Comonoid&) = default;
};

template <Field F>
struct Frobenius {
  Monoid<F> monoid;
  Comonoid<F> comonoid;
};

template <Field F>
Relation<F> mu_N() {
  return Relation<F>(2, 1, {{F(1), F(1), F(1)}});
}

template <Field F>
Relation<F> mu_B() {
  return Relation<F>(2, 1, {{F(1), F(0), F(1)}, {F(0), F(1), F(1)}});
}

template <Field F>
Monoid<F> monoid_N() {
  return {mu_N<F>(), Relation<F>(0, 1, {{F(1)}})};
}

template <Field F>
Monoid<F> monoid_B() {
  return {mu_B<F>(), Relation<F>(0, 1, {})};
}

template <Field F>
Comonoid<F> transpose_comonoid(const Monoid<F>& m) {
  return {converse(m.mu), converse(m.eta)};
}

template <Field F>
Frobenius<F> frobenius_of(const Monoid<F>& m) {
  return {m, transpose_comonoid(m)};
}

template <Field F>
LawReport check_monoid(const Monoid<F>& m) {
  Relation<F> id = identity<F>();
  LawReport r;
  r.add("unit.left", compose(m.mu, tensor(m.eta, id)) == id);
  r.add("unit.right", compose(m.mu, tensor(id, m.eta)) == id);
  r.add("associativity", compose(m.mu, tensor(m.mu, id)) == compose(m.mu, tensor(id, m.mu)));
  r.add("commutativity", compose(m.mu, symmetry<F>()) == m.mu);
  return r;
}

template <Field F>
LawReport check_comonoid(const Comonoid<F>& c) {
  Relation<F> id = identity<F>();
  LawReport r;
  r.add("counit.left", compose(tensor(c.epsilon, id), c.delta) == id);
  r.add("counit.right", compose(tensor(id, c.epsilon), c.delta) == id);
  r.add("coassociativity",
        compose(tensor(c.delta, id), c.delta) == compose(tensor(id, c.delta), c.delta));
  r.add("cocommutativity", compose(symmetry<F>(), c.delta) == c.delta);
  return r;
}

template <Field F>
LawReport check_frobenius(const Frobenius<F>& f) {
  Relation<F> id = identity<F>();
  LawReport r;
  r.merge(check_monoid(f.monoid), "monoid.");
  r.merge(check_comonoid(f.comonoid), "comonoid.");
  Relation<F> middle = compose(f.comonoid.delta, f.monoid.mu);
  r.add("frobenius.left",
        compose(tensor(f.monoid.mu, id), tensor(id, f.comonoid.delta)) == middle);
  r.add("frobenius.right",
        compose(tensor(id, f.monoid.mu), tensor(f.comonoid.delta, id)) == middle);
  return r;
}

template <Field F>
bool bigebra_law(const Comonoid<F>& c, const Monoid<F>& m) {
  Relation<F> id = identity<F>();
  Relation<F> middle = tensor(tensor(id, symmetry<F>()), id);
  return compose(c.delta, m.mu) ==
         compose(tensor(m.mu, m.mu), compose(middle, tensor(c.delta, c.delta)));
}

// Dualizer (nu_white (x) id) o (id (x) delta_black) of the induced compact structures.
template <Field F>
Relation<F> dualizer(const Frobenius<F>& white, const Frobenius<F>& black) {
  Relation<F> id = identity<F>();
  Relation<F> cap = compose(white.comonoid.epsilon, white.monoid.mu);
  Relation<F> cup = compose(black.comonoid.delta, black.monoid.eta);
  return compose(tensor(cap, id), tensor(id, cup));
}

template <Field F>
LawReport check_zstar(const Frobenius<F>& white, const Frobenius<F>& black) {
  LawReport r;
  r.merge(check_frobenius(white), "white.");
  r.merge(check_frobenius(black), "black.");
  r.add("bigebra", bigebra_law(white.comonoid, black.monoid));
  Relation<F> d = dualizer(white, black);
  r.add("compatibility", compose(d, d) == identity<F>());
  return r;
}

template <std::uint32_t P>
std::vector<Zp<P>> zp_elements() {
  std::vector<Zp<P>> v;
  for (std::uint32_t k = 0; k < P; ++k) v.emplace_back(static_cast<long>(k));
  return v;
}

// Every subspace of K^width, each in canonical form, for a finite field.
template <Field F>
std::vector<Matrix<F>> all_subspaces(std::size_t width, const std::vector<F>& elements) {
  std::vector<Matrix<F>> out;
  for (std::uint32_t mask = 0; mask < (1u << width); ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < width; ++c) {
      if (mask & (1u << c)) pivots.push_back(c);
    }
    // Free positions: row r, column c > pivots[r], c not a pivot column.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (std::size_t c = pivots[r] + 1; c < width; ++c) {
        if (!(mask & (1u << c))) free.emplace_back(r, c);
      }
    }
    std::vector<std::size_t> digits(free.size(), 0);
    while (true) {
      Matrix<F> rows(pivots.size(), std::vector<F>(width, F(0)));
      for (std::size_t r = 0; r < pivots.size(); ++r) rows[r][pivots[r]] = F(1);
      for (std::size_t k = 0; k < free.size(); ++k) {
        rows[free[k].first][free[k].second] = elements[digits[k]];
      }
      out.push_back(std::move(rows));
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == elements.size()) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  }
  return out;
}

template <Field F>
std::vector<Relation<F>> all_relations(std::size_t inputs, std::size_t outputs,
                                       const std::vector<F>& elements) {
  std::vector<Relation<F>> out;
  for (auto& rows : all_subspaces(inputs + outputs, elements)) {
    out.emplace_back(inputs, outputs, std::move(rows));
  }
  return out;
}

template <Field F>
std::vector<Monoid<F>> enumerate_monoids(const std::vector<F>& elements) {
  std::vector<Monoid<F>> out;
  auto products = all_relations<F>(2, 1, elements);
  auto units = all_relations<F>(0, 1, elements);
  for (const auto& mu : products) {
    for (const auto& eta : units) {
      Monoid<F> m{mu, eta};
      if (check_monoid(m).all_passed()) out.push_back(m);
    }
  }
  return out;
}

template <Field F>
std::vector<Relation<F>> phase_group(const Monoid<F>& m, const std::vector<F>& elements) {
  std::vector<Relation<F>> out;
  Relation<F> id = identity<F>();
  for (const auto& alpha : all_relations<F>(1, 1, elements)) {
    if (!is_invertible(alpha)) continue;
    if (compose(m.mu, tensor(alpha, id)) == compose(alpha, m.mu)) out.push_back(alpha);
  }
  return out;
}

// Comonoids that form a Frobenius algebra with m.
template <Field F>
std::vector<Comonoid<F>> frobenius_comonoids(const Monoid<F>& m, const std::vector<F>& elements) {
  std::vector<Comonoid<F>> out;
  auto coproducts = all_relations<F>(1, 2, elements);
  auto counits = all_relations<F>(1, 0, elements);
  for (const auto& delta : coproducts) {
    for (const auto& eps : counits) {
      Frobenius<F> f{m, {delta, eps}};
      if (check_frobenius(f).all_passed()) out.push_back(f.comonoid);
    }
  }
  return out;
}

// phi o mu o (phi^-1 (x) phi^-1) for an invertible 1 -> 1 relation phi.
template <Field F>
Relation<F> conjugate(const Relation<F>& mu, const Relation<F>& phi) {
  Relation<F> inv = converse(phi);
  return compose(phi, compose(mu, tensor(inv, inv)));
}

struct PrimeSummary {
  std::uint32_t prime = 0;
  std::size_t subspaces_k1 = 0;
  std::size_t subspaces_k2 = 0;
  std::size_t subspaces_k3 = 0;
  std::vector<std::string> monoids;  // "N: ..." / "B: ..." / other
  bool monoids_are_n_and_b = false;
  std::map<std::string, std::size_t> phase_group_sizes;
  std::map<std::string, bool> phase_group_trivial;
  std::map<std::string, LawReport> zstar;  // BB, NN, BN, NB
  bool non_isomorphic = false;
};

bool supported_prime(std::uint32_t p);
// Exhaustive LinRel classification over GF(p), p in {2, 3, 5}.
PrimeSummary classify_prime(std::uint32_t p);
std::string summary_text(const PrimeSummary& s);

// Frobenius, bigebra and compatibility checks for BB, NN, BN, NB over Q.
std::map<std::string, LawReport> verify_rational_zstar();

// Sampled checks of the unital-subspace characterization over Q: a line
// span{(a,b,c)} is unital iff a = b = c != 0; a plane with normal (a,b,c) is
// unital iff a = b = -c != 0.
LawReport rational_constraint_check();

}  // namespace zstar::linrel
