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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "zstar/catalog.hpp"
#include "zstar/structures.hpp"

namespace zstar {

// (M o mu o (M^-1 (x) M^-1), M o eta).
Monoid conjugate(const Monoid& m, const Morphism& basis_change);
// ((M (x) M) o Delta o M^-1, epsilon o M^-1).
Comonoid conjugate(const Comonoid& c, const Morphism& basis_change);

bool is_automorphism(const Monoid& m, const Morphism& basis_change);
bool is_automorphism(const Comonoid& c, const Morphism& basis_change);

struct IsoWitness {
  Morphism basis_change;
  Monoid source;
  Monoid target;

  bool verify() const;
};

enum class AlgebraType { ZType, WType };

struct Normalization {
  AlgebraType tag;
  // Structure constants after moving the unit to the first basis vector:
  // e1 * e1 = x e0 + y e1.
  ExactScalar x;
  ExactScalar y;
  // e1 * e1 = lambda e0 after the completing-the-square change of basis.
  ExactScalar lambda;
  ExactScalar displayed_lambda;  // x + y^2/2
  bool displayed_formula_matches = false;
  IsoWitness normal_form;
  // To mu_Z (Z-type, when sqrt(lambda) exists) or to mu_W (W-type).
  std::optional<IsoWitness> canonical;
  // For Z-type with a canonical witness: whether (1/sqrt2)[[1,-1],[1,1]]
  // carries mu_X exactly onto mu_Z.
  std::optional<bool> displayed_final_change_exact;
  std::string note;
};

// Classifies a 2-dimensional commutative unital algebra.
Normalization normalize_algebra(const Monoid& m);

// Normal form [[1,0,0,lambda],[0,1,1,0]] with unit (1,0).
Monoid study_normal_form(const ExactScalar& lambda);

struct AutomorphismVerdict {
  Morphism candidate;
  bool is_automorphism = false;
  bool in_characterized_family = false;
};

struct AutomorphismReport {
  Base which;
  std::vector<AutomorphismVerdict> verdicts;
  // True when every verdict agrees with the characterization.
  bool consistent() const;
};

// Characterization: swap and identity for mu_Z, diag(1, a) (a != 0) for mu_W.
AutomorphismReport verify_automorphisms(Base which, const std::vector<Morphism>& candidates);
bool in_automorphism_family(Base which, const Morphism& m);

struct BigebraCandidate {
  std::array<int, 6> bits{};  // (a, b, c, d, e, f) of [[a,b,b,c],[d,e,e,f]]
  Morphism mu;
  bool satisfies_b = false;
  std::size_t rank = 0;
};

struct RejectedCandidate {
  Morphism mu;
  // (e0 * e0) * e1 and e0 * (e0 * e1).
  Morphism left;
  Morphism right;
};

struct BigebraEnumeration {
  std::vector<BigebraCandidate> candidates;
  std::vector<Morphism> solutions;
  std::vector<Morphism> rank2;
  std::vector<std::vector<Morphism>> orbits;
  std::vector<Morphism> representatives;
  std::vector<std::pair<Base, Monoid>> algebras;
  std::vector<RejectedCandidate> rejected;
  std::vector<std::string> pairs;
  LawReport pair_checks;

  std::string trace() const;
};

BigebraEnumeration enumerate_bigebra_pairs_deltaZ();
std::array<int, 6> candidate_bits(const Morphism& mu);
Morphism candidate_from_bits(const std::array<int, 6>& bits);

struct DeltaWReport {
  // Delta_W as tabulated and its conjugate by the swap.
  Comonoid tabulated;
  Comonoid mirrored;
  // [[1,0,0,0],[0,0,0,f]] against the mirrored coproduct.
  LawReport family_mirrored;
  // [[f,0,0,0],[0,0,0,1]] against the tabulated coproduct.
  LawReport family_tabulated;
  // [[1,0,0,0],[0,0,0,f]] against the tabulated coproduct, f != 1 (expected to fail).
  LawReport family_against_tabulated;
  // Off-family candidates that must fail, and the zero solution that must pass.
  LawReport off_family;
  // Automorphism and reduction-to-mu_Z checks.
  LawReport reductions;

  bool consistent() const;
};

DeltaWReport solve_bigebra_deltaW();

struct CompatibilitySample {
  std::string shape;
  std::pair<ExactScalar, ExactScalar> alpha;
  std::pair<ExactScalar, ExactScalar> beta;
  bool matrix_verdict = false;
  bool system_verdict = false;
};

struct CompatibilitySystemsReport {
  std::vector<CompatibilitySample> samples;

  bool all_agree() const;
  std::size_t count(const std::string& shape, bool compatible) const;
};

// Polynomial systems for the five shapes ZZ, ZX, ZH, ZW, WZ, with
// alpha = (a, b) on the white monoid and beta = (c, d) on the black comonoid.
bool compatibility_system(const std::string& shape, const ExactScalar& a, const ExactScalar& b,
                          const ExactScalar& c, const ExactScalar& d);
bool compatibility_by_matrix(const std::string& shape, const ExactScalar& a, const ExactScalar& b,
                             const ExactScalar& c, const ExactScalar& d);
CompatibilitySystemsReport verify_compatibility_systems();

}  // namespace zstar
