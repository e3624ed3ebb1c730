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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zstar/morphism.hpp"

namespace zstar {

struct LawResult {
  std::string law;
  bool passed = false;
  std::optional<Mismatch> mismatch;
};

class LawReport {
 public:
  void add(std::string law, bool passed, std::optional<Mismatch> mismatch = std::nullopt);
  // Records lhs == rhs under the given law name.
  bool check(std::string law, const Morphism& lhs, const Morphism& rhs);
  void merge(const LawReport& other, std::string_view prefix = {});

  bool all_passed() const;
  // Throws std::out_of_range if the law was never checked.
  bool passed(std::string_view law) const;
  const std::vector<LawResult>& results() const { return results_; }
  std::string to_text() const;

 private:
  std::vector<LawResult> results_;
};

struct Monoid {
  Morphism mu;   // 2 -> 1
  Morphism eta;  // 0 -> 1

  Monoid() = default;
  Monoid(Morphism mu, Morphism eta);
  std::size_t dim() const { return mu.dim(); }
  friend bool operator==(const Monoid&, const Monoid&) = default;
};

struct Comonoid {
  Morphism delta;    // 1 -> 2
  Morphism epsilon;  // 1 -> 0

  Comonoid() = default;
  Comonoid(Morphism delta, Morphism epsilon);
  std::size_t dim() const { return delta.dim(); }
  friend bool operator==(const Comonoid&, const Comonoid&) = default;
};

struct Frobenius {
  Monoid monoid;
  Comonoid comonoid;

  std::size_t dim() const { return monoid.dim(); }
  friend bool operator==(const Frobenius&, const Frobenius&) = default;
};

struct CompactStructure {
  Morphism cup;  // 0 -> 2
  Morphism cap;  // 2 -> 0

  CompactStructure() = default;
  CompactStructure(Morphism cup, Morphism cap);
  friend bool operator==(const CompactStructure&, const CompactStructure&) = default;
};

LawReport check_monoid(const Monoid& m);
LawReport check_comonoid(const Comonoid& c);
LawReport check_frobenius(const Frobenius& f);
LawReport check_compact(const CompactStructure& c);

// Solves mu o (eta (x) id) = id for eta; nullopt when no unit exists.
std::optional<Morphism> solve_unit(const Morphism& mu);

bool is_phase(const Monoid& m, const Morphism& op);
bool is_phase(const Comonoid& c, const Morphism& op);

// (alpha o mu, alpha^-1 o eta).
Monoid phase_shift(const Monoid& m, const Morphism& alpha);
// (Delta o alpha, epsilon o alpha^-1).
Comonoid phase_shift(const Comonoid& c, const Morphism& alpha);

Morphism mu_n(const Monoid& m, std::size_t n);
Morphism delta_n(const Comonoid& c, std::size_t n);

// Delta_m o alpha o mu_n.
Morphism spider(const Frobenius& f, std::size_t n, std::size_t m,
                const std::optional<Morphism>& alpha = std::nullopt);

CompactStructure induced_compact(const Frobenius& f);

// (nu_a (x) id) o (id (x) delta_b).
Morphism dualizer(const CompactStructure& a, const CompactStructure& b);

bool check_compatibility(const Frobenius& a, const Frobenius& b);

// Laws "B", "C1", "C2", "Id" for the comonoid c and the monoid m.
LawReport check_bialgebra(const Comonoid& c, const Monoid& m);

class ZStarAlgebra {
 public:
  ZStarAlgebra(Frobenius white, Frobenius black);

  const Frobenius& white() const { return white_; }
  const Frobenius& black() const { return black_; }
  const Morphism& dualizer() const { return dualizer_; }
  std::size_t dim() const { return white_.dim(); }

 private:
  Frobenius white_;
  Frobenius black_;
  Morphism dualizer_;
};

LawReport check_zstar(const ZStarAlgebra& z);

struct PhaseShiftedZStar {
  ZStarAlgebra algebra;
  bool compatible;
  // beta o d o alpha == alpha^-1 o d^-1 o beta^-1 for the original dualizer d.
  bool equation_holds;
};

// White monoid shifted by alpha, black comonoid shifted by beta.
PhaseShiftedZStar phase_shift_zstar(const ZStarAlgebra& z, const Morphism& alpha,
                                    const Morphism& beta);

// Given a comonoid c' forming a Frobenius algebra with f's monoid, recovers the
// phase alpha with c' = (Delta o alpha, epsilon o alpha^-1), i.e.
// (epsilon (x) id) o Delta'. Returns nullopt if c' is not such a shift.
std::optional<Morphism> extract_phase(const Frobenius& f, const Comonoid& shifted);

// Generators of the calculus built on a Z*-algebra: the white structure is
// unchanged and the black structure is post-composed with the dualizer.
std::map<std::string, Morphism> modified_generators(const ZStarAlgebra& z);

}  // namespace zstar
