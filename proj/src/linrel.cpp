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

#include "zstar/linrel.hpp"

#include <random>

namespace zstar::linrel {

namespace {

template <Field F>
PrimeSummary classify(std::uint32_t p, const std::vector<F>& elements) {
  PrimeSummary s;
  s.prime = p;
  s.subspaces_k1 = all_subspaces<F>(1, elements).size();
  s.subspaces_k2 = all_subspaces<F>(2, elements).size();
  s.subspaces_k3 = all_subspaces<F>(3, elements).size();
  auto monoids = enumerate_monoids<F>(elements);
  Monoid<F> n = monoid_N<F>(), b = monoid_B<F>();
  bool has_n = false, has_b = false;
  for (const auto& m : monoids) {
    std::string label = "?";
    if (m == n) {
      label = "N";
      has_n = true;
    } else if (m == b) {
      label = "B";
      has_b = true;
    }
    s.monoids.push_back(label + ": mu " + m.mu.to_text() + ", eta " + m.eta.to_text());
  }
  s.monoids_are_n_and_b = monoids.size() == 2 && has_n && has_b;
  for (const auto& [name, m] : {std::pair{std::string("N"), n}, std::pair{std::string("B"), b}}) {
    auto group = phase_group<F>(m, elements);
    s.phase_group_sizes[name] = group.size();
    s.phase_group_trivial[name] = group.size() == 1 && group.front() == identity<F>();
  }
  Frobenius<F> fn = frobenius_of(n), fb = frobenius_of(b);
  s.zstar["BB"] = check_zstar(fb, fb);
  s.zstar["NN"] = check_zstar(fn, fn);
  s.zstar["BN"] = check_zstar(fb, fn);
  s.zstar["NB"] = check_zstar(fn, fb);
  s.non_isomorphic = true;
  for (const auto& phi : all_relations<F>(1, 1, elements)) {
    if (!is_invertible(phi)) continue;
    if (conjugate(n.mu, phi) == b.mu || conjugate(b.mu, phi) == n.mu) s.non_isomorphic = false;
  }
  return s;
}

using Q = Rational;

bool unital(const Relation<Q>& mu) {
  Relation<Q> id = identity<Q>();
  for (const auto& eta : {Relation<Q>(0, 1, {}), Relation<Q>(0, 1, {{Q(1)}})}) {
    if (compose(mu, tensor(eta, id)) == id && compose(mu, tensor(id, eta)) == id) return true;
  }
  return false;
}

}  // namespace

bool supported_prime(std::uint32_t p) { return p == 2 || p == 3 || p == 5; }

PrimeSummary classify_prime(std::uint32_t p) {
  switch (p) {
    case 2: return classify<Zp<2>>(2, zp_elements<2>());
    case 3: return classify<Zp<3>>(3, zp_elements<3>());
    case 5: return classify<Zp<5>>(5, zp_elements<5>());
    default:
      throw DomainError("unsupported prime " + std::to_string(p) + " (supported: 2, 3, 5)");
  }
}

std::string summary_text(const PrimeSummary& s) {
  std::ostringstream os;
  os << "LinRel over GF(" << s.prime << ")\n";
  os << "  subspaces of K^1: " << s.subspaces_k1 << "\n";
  os << "  subspaces of K^2: " << s.subspaces_k2 << "\n";
  os << "  subspaces of K^3: " << s.subspaces_k3 << "\n";
  os << "  monoids: " << s.monoids.size() << "\n";
  for (const auto& m : s.monoids) os << "    " << m << "\n";
  for (const auto& [name, size] : s.phase_group_sizes) {
    os << "  phase group of " << name << ": " << size
       << (s.phase_group_trivial.at(name) ? " (identity only)" : "") << "\n";
  }
  os << "  N and B non-isomorphic: " << (s.non_isomorphic ? "yes" : "no") << "\n";
  for (const auto& [name, report] : s.zstar) {
    os << "  " << name << ": " << (report.all_passed() ? "Z*-algebra" : "not a Z*-algebra") << "\n";
  }
  return os.str();
}

std::map<std::string, LawReport> verify_rational_zstar() {
  Frobenius<Q> fn = frobenius_of(monoid_N<Q>()), fb = frobenius_of(monoid_B<Q>());
  return {{"BB", check_zstar(fb, fb)},
          {"NN", check_zstar(fn, fn)},
          {"BN", check_zstar(fb, fn)},
          {"NB", check_zstar(fn, fb)}};
}

LawReport rational_constraint_check() {
  LawReport r;
  std::mt19937_64 rng(2718);
  std::vector<Q> pool = {Q(0), Q(1), Q(-1), Q(2), Q(1, 2), Q(-3, 4)};
  auto pick = [&] { return pool[rng() % pool.size()]; };
  for (int trial = 0; trial < 60; ++trial) {
    Q a = pick(), b = pick(), c = pick();
    if (trial % 4 == 0) b = c = a;
    if (trial % 4 == 1) {
      b = a;
      c = -a;
    }
    if (sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0) a = 1;
    std::string tag = "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")";
    Relation<Q> line(2, 1, {{a, b, c}});
    bool line_oracle = a == b && b == c && sgn(a) != 0;
    r.add("line " + tag, unital(line) == line_oracle);
    // Plane a*x + b*y + c*z = 0.
    Matrix<Q> normal = {{a, b, c}};
    Relation<Q> plane(2, 1, linalg::nullspace(normal, 3));
    bool plane_oracle = a == b && b == -c && sgn(a) != 0;
    r.add("plane " + tag, unital(plane) == plane_oracle);
  }
  r.add("zero subspace", !unital(Relation<Q>(2, 1, {})));
  r.add("full space", !unital(Relation<Q>(2, 1, {{Q(1), Q(0), Q(0)}, {Q(0), Q(1), Q(0)}, {Q(0), Q(0), Q(1)}})));
  return r;
}

}  // namespace zstar::linrel
