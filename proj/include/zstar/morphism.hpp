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

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "zstar/scalar.hpp"

namespace zstar {

struct Mismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  ExactScalar lhs;
  ExactScalar rhs;
};

// A morphism n -> m of the matrix prop on K^dim, stored as a dense
// dim^m x dim^n row-major matrix. Wire 1 is the most significant digit of a
// basis index.
class Morphism {
 public:
  Morphism() : Morphism(2, 0, 0) {}
  Morphism(std::size_t dim, std::size_t inputs, std::size_t outputs);
  Morphism(std::size_t dim, std::size_t inputs, std::size_t outputs,
           std::vector<ExactScalar> entries);

  static Morphism from_rows(std::size_t dim, std::size_t inputs, std::size_t outputs,
                            std::initializer_list<std::initializer_list<ExactScalar>> rows);

  std::size_t dim() const { return dim_; }
  std::size_t inputs() const { return inputs_; }
  std::size_t outputs() const { return outputs_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const ExactScalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  ExactScalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<ExactScalar>& entries() const { return entries_; }

  bool is_zero() const;

  friend bool operator==(const Morphism& a, const Morphism& b);

  // First entry where the two differ; nullopt when equal. Arity or dimension
  // mismatch is reported at (rows, cols) of the left operand.
  std::optional<Mismatch> first_mismatch(const Morphism& other) const;

  Morphism& operator+=(const Morphism& o);
  Morphism& operator-=(const Morphism& o);
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }
  friend Morphism operator*(const ExactScalar& k, const Morphism& f);

  std::string to_text() const;
  static Morphism parse(std::string_view text);

 private:
  std::size_t dim_, inputs_, outputs_, rows_, cols_;
  std::vector<ExactScalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const Morphism& f);

std::size_t ipow(std::size_t base, std::size_t exp);

// f o g : g's outputs feed f's inputs.
Morphism compose(const Morphism& f, const Morphism& g);
Morphism tensor(const Morphism& f, const Morphism& g);
Morphism tensor_power(const Morphism& f, std::size_t k);

Morphism identity(std::size_t dim, std::size_t wires = 1);
Morphism empty(std::size_t dim);
Morphism symmetry(std::size_t dim);
Morphism scalar_morphism(std::size_t dim, const ExactScalar& k);

// Moves wire 1 past the next n wires: |x_1 x_2 ... x_{n+1}> -> |x_2 ... x_{n+1} x_1>.
Morphism sigma_n(std::size_t dim, std::size_t n);

// Output position j (1-based) carries input wire perm[j-1].
Morphism permutation(std::size_t dim, const std::vector<std::size_t>& perm);

// |x_1 ... x_k> as a 0 -> k morphism.
Morphism basis_state(std::size_t dim, const std::vector<std::size_t>& digits);
// Applies f to a basis state and returns the output column as a 0 -> m morphism.
Morphism apply(const Morphism& f, const std::vector<std::size_t>& digits);

// Square-matrix utilities for 1 -> 1 (or k -> k) morphisms.
std::optional<Morphism> inverse(const Morphism& f);
bool is_invertible(const Morphism& f);
std::size_t matrix_rank(const Morphism& f);
Morphism transpose(const Morphism& f);

}  // namespace zstar
