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

#include "zstar/morphism.hpp"

#include <algorithm>
#include <sstream>

#include "zstar/errors.hpp"

namespace zstar {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r *= base;
  return r;
}

Morphism::Morphism(std::size_t dim, std::size_t inputs, std::size_t outputs)
    : dim_(dim),
      inputs_(inputs),
      outputs_(outputs),
      rows_(ipow(dim, outputs)),
      cols_(ipow(dim, inputs)),
      entries_(rows_ * cols_) {
  if (dim == 0) throw DomainError("wire dimension must be at least 1");
}

Morphism::Morphism(std::size_t dim, std::size_t inputs, std::size_t outputs,
                   std::vector<ExactScalar> entries)
    : Morphism(dim, inputs, outputs) {
  if (entries.size() != entries_.size()) {
    throw ArityError("expected " + std::to_string(entries_.size()) + " entries for a " +
                     std::to_string(inputs) + "->" + std::to_string(outputs) +
                     " morphism, got " + std::to_string(entries.size()));
  }
  entries_ = std::move(entries);
}

Morphism Morphism::from_rows(std::size_t dim, std::size_t inputs, std::size_t outputs,
                             std::initializer_list<std::initializer_list<ExactScalar>> rows) {
  std::vector<ExactScalar> flat;
  std::size_t expected_cols = ipow(dim, inputs);
  for (const auto& row : rows) {
    if (row.size() != expected_cols) throw ArityError("row length does not match arity");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Morphism(dim, inputs, outputs, std::move(flat));
}

bool Morphism::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const ExactScalar& x) { return x.is_zero(); });
}

bool operator==(const Morphism& a, const Morphism& b) {
  return a.dim_ == b.dim_ && a.inputs_ == b.inputs_ && a.outputs_ == b.outputs_ &&
         a.entries_ == b.entries_;
}

std::optional<Mismatch> Morphism::first_mismatch(const Morphism& other) const {
  if (dim_ != other.dim_ || inputs_ != other.inputs_ || outputs_ != other.outputs_) {
    return Mismatch{rows_, cols_, {}, {}};
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(at(r, c) == other.at(r, c))) return Mismatch{r, c, at(r, c), other.at(r, c)};
    }
  }
  return std::nullopt;
}

Morphism& Morphism::operator+=(const Morphism& o) {
  if (dim_ != o.dim_ || inputs_ != o.inputs_ || outputs_ != o.outputs_) {
    throw ArityError("cannot add morphisms of different type");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

Morphism& Morphism::operator-=(const Morphism& o) {
  if (dim_ != o.dim_ || inputs_ != o.inputs_ || outputs_ != o.outputs_) {
    throw ArityError("cannot subtract morphisms of different type");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

Morphism operator*(const ExactScalar& k, const Morphism& f) {
  Morphism r = f;
  for (auto& x : r.entries_) x = k * x;
  return r;
}

std::string Morphism::to_text() const {
  std::ostringstream os;
  os << "morphism d=" << dim_ << " n=" << inputs_ << " m=" << outputs_ << "\n";
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << at(r, c);
    }
    os << "\n";
  }
  return os.str();
}

namespace {

std::size_t parse_field(const std::string& token, const std::string& key, std::size_t line) {
  if (token.rfind(key + "=", 0) != 0) throw ParseError(line, "expected " + key + "=<n>");
  try {
    std::size_t pos = 0;
    unsigned long v = std::stoul(token.substr(key.size() + 1), &pos);
    if (pos != token.size() - key.size() - 1) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "malformed " + key + " in '" + token + "'");
  }
}

}  // namespace

Morphism Morphism::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::optional<Morphism> result;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!result) {
      std::istringstream hs(line);
      std::string word, d, n, m, extra;
      hs >> word >> d >> n >> m;
      if (word != "morphism" || m.empty() || (hs >> extra)) {
        throw ParseError(lineno, "expected header 'morphism d=<d> n=<n> m=<m>'");
      }
      result.emplace(parse_field(d, "d", lineno), parse_field(n, "n", lineno),
                     parse_field(m, "m", lineno));
      continue;
    }
    if (row >= result->rows()) throw ParseError(lineno, "too many rows");
    std::size_t col = 0, start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string cell = line.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
      if (col >= result->cols()) throw ParseError(lineno, "too many entries in row");
      try {
        result->at(row, col) = ExactScalar::parse(cell);
      } catch (const ParseError& e) {
        throw ParseError(lineno, e.what());
      }
      ++col;
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (col != result->cols()) throw ParseError(lineno, "too few entries in row");
    ++row;
  }
  if (!result) throw ParseError(lineno, "missing morphism header");
  if (row != result->rows()) throw ParseError(lineno, "too few rows");
  return *result;
}

std::ostream& operator<<(std::ostream& os, const Morphism& f) { return os << f.to_text(); }

Morphism compose(const Morphism& f, const Morphism& g) {
  if (f.dim() != g.dim()) throw ArityError("compose: wire dimensions differ");
  if (f.inputs() != g.outputs()) {
    throw ArityError("compose: " + std::to_string(f.inputs()) + " inputs cannot accept " +
                     std::to_string(g.outputs()) + " outputs");
  }
  Morphism r(f.dim(), g.inputs(), f.outputs());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < f.cols(); ++k) {
      const ExactScalar& a = f.at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < g.cols(); ++j) {
        const ExactScalar& b = g.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  if (f.dim() != g.dim()) throw ArityError("tensor: wire dimensions differ");
  Morphism r(f.dim(), f.inputs() + g.inputs(), f.outputs() + g.outputs());
  for (std::size_t i1 = 0; i1 < f.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < f.cols(); ++j1) {
      const ExactScalar& a = f.at(i1, j1);
      if (a.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < g.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < g.cols(); ++j2) {
          const ExactScalar& b = g.at(i2, j2);
          if (b.is_zero()) continue;
          r.at(i1 * g.rows() + i2, j1 * g.cols() + j2) = a * b;
        }
      }
    }
  }
  return r;
}

Morphism tensor_power(const Morphism& f, std::size_t k) {
  Morphism r = empty(f.dim());
  for (std::size_t j = 0; j < k; ++j) r = tensor(r, f);
  return r;
}

Morphism identity(std::size_t dim, std::size_t wires) {
  Morphism r(dim, wires, wires);
  for (std::size_t k = 0; k < r.rows(); ++k) r.at(k, k) = 1;
  return r;
}

Morphism empty(std::size_t dim) { return identity(dim, 0); }

Morphism scalar_morphism(std::size_t dim, const ExactScalar& k) {
  Morphism r(dim, 0, 0);
  r.at(0, 0) = k;
  return r;
}

Morphism symmetry(std::size_t dim) { return permutation(dim, {2, 1}); }

Morphism sigma_n(std::size_t dim, std::size_t n) {
  Morphism s = identity(dim);
  for (std::size_t k = 1; k <= n; ++k) {
    s = compose(tensor(identity(dim, k - 1), symmetry(dim)), tensor(s, identity(dim)));
  }
  return s;
}

namespace {

std::vector<std::size_t> digits_of(std::size_t index, std::size_t dim, std::size_t wires) {
  std::vector<std::size_t> d(wires);
  for (std::size_t k = wires; k-- > 0;) {
    d[k] = index % dim;
    index /= dim;
  }
  return d;
}

std::size_t index_of(const std::vector<std::size_t>& digits, std::size_t dim) {
  std::size_t idx = 0;
  for (std::size_t v : digits) {
    if (v >= dim) throw DomainError("basis digit out of range");
    idx = idx * dim + v;
  }
  return idx;
}

}  // namespace

Morphism permutation(std::size_t dim, const std::vector<std::size_t>& perm) {
  std::size_t k = perm.size();
  std::vector<bool> seen(k, false);
  for (std::size_t v : perm) {
    if (v < 1 || v > k || seen[v - 1]) throw DomainError("permutation is not a bijection");
    seen[v - 1] = true;
  }
  Morphism r(dim, k, k);
  for (std::size_t col = 0; col < r.cols(); ++col) {
    auto in = digits_of(col, dim, k);
    std::vector<std::size_t> out(k);
    for (std::size_t j = 0; j < k; ++j) out[j] = in[perm[j] - 1];
    r.at(index_of(out, dim), col) = 1;
  }
  return r;
}

Morphism basis_state(std::size_t dim, const std::vector<std::size_t>& digits) {
  Morphism r(dim, 0, digits.size());
  r.at(index_of(digits, dim), 0) = 1;
  return r;
}

Morphism apply(const Morphism& f, const std::vector<std::size_t>& digits) {
  if (digits.size() != f.inputs()) throw ArityError("apply: wrong number of input digits");
  return compose(f, basis_state(f.dim(), digits));
}

Morphism transpose(const Morphism& f) {
  Morphism r(f.dim(), f.outputs(), f.inputs());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) r.at(j, i) = f.at(i, j);
  }
  return r;
}

namespace {

// Gauss-Jordan on a copy of the rows; returns the rank and optionally the
// inverse when the matrix is square and invertible.
std::size_t eliminate(std::vector<std::vector<ExactScalar>> a,
                      std::vector<std::vector<ExactScalar>>* inv) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  if (inv) {
    inv->assign(rows, std::vector<ExactScalar>(rows));
    for (std::size_t k = 0; k < rows; ++k) (*inv)[k][k] = 1;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    if (inv) std::swap((*inv)[pivot], (*inv)[rank]);
    ExactScalar s = a[rank][c].inv();
    for (auto& x : a[rank]) x *= s;
    if (inv) {
      for (auto& x : (*inv)[rank]) x *= s;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      ExactScalar factor = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= factor * a[rank][k];
      if (inv) {
        for (std::size_t k = 0; k < rows; ++k) (*inv)[r][k] -= factor * (*inv)[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<ExactScalar>> to_rows(const Morphism& f) {
  std::vector<std::vector<ExactScalar>> a(f.rows(), std::vector<ExactScalar>(f.cols()));
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) a[i][j] = f.at(i, j);
  }
  return a;
}

}  // namespace

std::size_t matrix_rank(const Morphism& f) { return eliminate(to_rows(f), nullptr); }

std::optional<Morphism> inverse(const Morphism& f) {
  if (f.inputs() != f.outputs()) throw ArityError("inverse: morphism is not k -> k");
  std::vector<std::vector<ExactScalar>> inv;
  if (eliminate(to_rows(f), &inv) != f.rows()) return std::nullopt;
  Morphism r(f.dim(), f.inputs(), f.outputs());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) r.at(i, j) = inv[i][j];
  }
  return r;
}

bool is_invertible(const Morphism& f) {
  return f.inputs() == f.outputs() && matrix_rank(f) == f.rows();
}

}  // namespace zstar
