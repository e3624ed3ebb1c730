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
#include <optional>
#include <utility>
#include <vector>

#include "zstar/finite_field.hpp"

namespace zstar::linalg {

template <class F>
using Matrix = std::vector<std::vector<F>>;

// In-place reduced row echelon form; zero rows are dropped. Returns pivot columns.
template <Field F>
std::vector<std::size_t> rref(Matrix<F>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && field_is_zero(a[p][c])) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    F s = field_inverse(a[rank][c]);
    for (auto& x : a[rank]) x = x * s;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || field_is_zero(a[r][c])) continue;
      F factor = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = a[r][k] - factor * a[rank][k];
    }
    pivots.push_back(c);
    ++rank;
  }
  a.resize(rank);
  return pivots;
}

template <Field F>
std::size_t rank(Matrix<F> a, std::size_t cols) {
  return rref(a, cols).size();
}

// Basis of {x : a x = 0}.
template <Field F>
Matrix<F> nullspace(Matrix<F> a, std::size_t cols) {
  auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<F> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of a x = b, or nullopt.
template <Field F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b,
                                    std::size_t cols) {
  Matrix<F> aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto pivots = rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<F> x(cols, F(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

}  // namespace zstar::linalg
