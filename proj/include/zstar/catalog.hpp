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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zstar/structures.hpp"

namespace zstar {

enum class Base { Z, X, H, W };

std::string_view base_name(Base b);
std::optional<Base> parse_base(std::string_view name);

Frobenius base_algebra(Base which);
Morphism phase_of(Base which, const ExactScalar& a, const ExactScalar& b);
// Inverse of phase_of on its image; nullopt if m is not of that shape.
std::optional<std::pair<ExactScalar, ExactScalar>> phase_parameters(Base which,
                                                                     const Morphism& m);

enum class Family { ZZpp, ZZmp, ZZpm, ZZmm, ZX1, ZX2, ZX3, ZX4, ZX5, ZX6, ZH, ZW, WZ };

// The two parameterizations in which the families are published.
enum class Convention { Appendix, MainText };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family>& all_families();

struct FamilyId {
  Family family;
  ExactScalar a;
  ExactScalar b;
};

// The ingredients of a family member: the white base shifted by alpha (on its
// monoid) and the black base shifted by beta (on its comonoid).
struct FamilyShape {
  Base white;
  Base black;
  std::pair<ExactScalar, ExactScalar> alpha;
  std::pair<ExactScalar, ExactScalar> beta;
};

FamilyShape family_shape(const FamilyId& id, Convention conv = Convention::Appendix);
ZStarAlgebra shifted_algebra(Base white, const Morphism& alpha, Base black, const Morphism& beta);
ZStarAlgebra family_instance(const FamilyId& id, Convention conv = Convention::Appendix);

// Main-text parameters (a, b) -> appendix parameters of the same member.
std::pair<ExactScalar, ExactScalar> main_to_appendix(Family f, const ExactScalar& a,
                                                     const ExactScalar& b);

using PhaseConstructor = std::function<Morphism(const ExactScalar&, const ExactScalar&)>;

struct CalculusInstance {
  std::string name;
  std::optional<FamilyId> family;
  ZStarAlgebra zstar;
  std::optional<Base> white_base;
  std::optional<Base> black_base;
  // Named generator matrices (white.product, ..., dualizer, black.counit).
  std::map<std::string, Morphism> generator_table;
  // Phase generators as they appear in the calculus (black ones include the dualizer).
  PhaseConstructor white_phase;
  PhaseConstructor black_phase;
};

// Generator table produced by phase-shifting the base structures.
CalculusInstance constructed_calculus(std::string name, Base white, const Morphism& alpha,
                                      Base black, const Morphism& beta);
CalculusInstance family_calculus(const FamilyId& id, Convention conv = Convention::Appendix);

struct AppendixTable {
  std::string name;
  std::string title;
  Base white;
  Base black;
  std::function<std::pair<ExactScalar, ExactScalar>(const ExactScalar&, const ExactScalar&)> alpha;
  std::function<std::pair<ExactScalar, ExactScalar>(const ExactScalar&, const ExactScalar&)> beta;
  // Literal generator matrices at parameters (a, b).
  std::function<std::map<std::string, Morphism>(const ExactScalar&, const ExactScalar&)> matrices;
  std::function<Morphism(const ExactScalar& a, const ExactScalar& b, const ExactScalar& x,
                         const ExactScalar& y)>
      white_phase;
  std::function<Morphism(const ExactScalar& a, const ExactScalar& b, const ExactScalar& x,
                         const ExactScalar& y)>
      black_phase;
  // Legal parameter samples used by the conformance checks.
  std::vector<std::pair<ExactScalar, ExactScalar>> samples;
};

const std::vector<AppendixTable>& appendix_tables();
const AppendixTable& find_appendix_table(std::string_view name);
// Calculus whose generator table holds the literal tabulated matrices.
CalculusInstance appendix_table(std::string_view name, const ExactScalar& a, const ExactScalar& b);

struct PhaseConformance {
  bool same_family = false;
  bool same_parameters = false;
  std::string note;
};

struct TableConformance {
  std::string table;
  LawReport generators;  // one law per generator matrix and sample
  PhaseConformance white_phase;
  PhaseConformance black_phase;
  LawReport zstar;
};

// Compares a tabulated calculus against the phase-shift construction.
TableConformance check_appendix_table(const AppendixTable& t, const ExactScalar& a,
                                      const ExactScalar& b);

// Unnormalized Hadamard matrix [[1, 1], [1, -1]].
Morphism hadamard();

// Both sides of (1,l)_Z o (1,-1)_X = l (1,-1)_X o (1,1/l)_Z.
std::pair<Morphism, Morphism> pi_commutation_sides(const ExactScalar& lambda);

// Both sides of 2 (l+1)/l (1,l)_Z o H o (1, 1/(2(l+1)))_H = (1, 2(l+1))_H o H o (1,1/l)_Z.
std::pair<Morphism, Morphism> zh_commutation_sides(const ExactScalar& lambda);

// The coefficients for which k (1,l)_Z o H o (1,b)_H = (1,b')_H o H o (1,1/l)_Z holds:
// k = 2/(l+1), b = (l+1)/(2l), b' = 2l/(l+1).
std::pair<Morphism, Morphism> zh_commutation_solved_sides(const ExactScalar& lambda);

ZStarAlgebra qudit_zx(std::size_t d);
ZStarAlgebra qudit_zw(std::size_t d);

// table[i][j] = product of basis elements i and j, or nullopt for the
// absorbing zero.
using MultiplicationTable = std::vector<std::vector<std::optional<std::size_t>>>;
Monoid contracted_algebra(const MultiplicationTable& table);

// Catalog entries usable by name on the command line.
std::vector<std::string> catalog_names();
CalculusInstance catalog_calculus(std::string_view name, const ExactScalar& a,
                                  const ExactScalar& b);

}  // namespace zstar
