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
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zstar/catalog.hpp"
#include "zstar/diagram.hpp"
#include "zstar/morphism.hpp"
#include "zstar/scalar.hpp"

namespace zstar::testing {

using S = ExactScalar;
using Rng = std::mt19937_64;

inline S r2() { return S::sqrt2(); }
inline S ii() { return S::i(); }
inline S frac(long n, long d) { return S::fraction(n, d); }

inline Rational random_rational(Rng& rng, int span = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline S random_scalar(Rng& rng) {
  std::bernoulli_distribution keep(0.6);
  auto part = [&] { return keep(rng) ? random_rational(rng) : Rational(0); };
  Rational p = part(), q = part(), r = part(), s = part();
  return S(p, q, r, s);
}

inline S random_nonzero(Rng& rng) {
  for (;;) {
    S x = random_scalar(rng);
    if (!x.is_zero()) return x;
  }
}

// Small entries from {-1, 0, 1, 2, i} keep products readable and fast.
inline S small_scalar(Rng& rng) {
  static const std::vector<S> pool = {S(-1), S(0), S(0), S(1), S(2), S::i(), S::fraction(1, 2)};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

inline Morphism random_morphism(Rng& rng, std::size_t dim, std::size_t n, std::size_t m) {
  Morphism f(dim, n, m);
  for (std::size_t r = 0; r < f.rows(); ++r) {
    for (std::size_t c = 0; c < f.cols(); ++c) f.at(r, c) = small_scalar(rng);
  }
  return f;
}

inline Morphism random_invertible(Rng& rng, std::size_t dim) {
  for (;;) {
    Morphism f = random_morphism(rng, dim, 1, 1);
    if (is_invertible(f)) return f;
  }
}

// Independent oracles for the prop operations: sums over explicit basis digits.
inline std::vector<std::size_t> digits(std::size_t index, std::size_t dim, std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t k = count; k-- > 0;) {
    out[k] = index % dim;
    index /= dim;
  }
  return out;
}

inline std::size_t undigits(const std::vector<std::size_t>& ds, std::size_t dim) {
  std::size_t r = 0;
  for (auto v : ds) r = r * dim + v;
  return r;
}

inline Morphism oracle_compose(const Morphism& f, const Morphism& g) {
  Morphism r(f.dim(), g.inputs(), f.outputs());
  for (std::size_t out = 0; out < r.rows(); ++out) {
    for (std::size_t in = 0; in < r.cols(); ++in) {
      S total;
      for (std::size_t mid = 0; mid < g.rows(); ++mid) total += f.at(out, mid) * g.at(mid, in);
      r.at(out, in) = total;
    }
  }
  return r;
}

inline Morphism oracle_tensor(const Morphism& f, const Morphism& g) {
  std::size_t d = f.dim();
  Morphism r(d, f.inputs() + g.inputs(), f.outputs() + g.outputs());
  for (std::size_t out = 0; out < r.rows(); ++out) {
    auto od = digits(out, d, r.outputs());
    std::vector<std::size_t> of(od.begin(), od.begin() + static_cast<long>(f.outputs()));
    std::vector<std::size_t> og(od.begin() + static_cast<long>(f.outputs()), od.end());
    for (std::size_t in = 0; in < r.cols(); ++in) {
      auto id = digits(in, d, r.inputs());
      std::vector<std::size_t> inf(id.begin(), id.begin() + static_cast<long>(f.inputs()));
      std::vector<std::size_t> ing(id.begin() + static_cast<long>(f.inputs()), id.end());
      r.at(out, in) = f.at(undigits(of, d), undigits(inf, d)) * g.at(undigits(og, d), undigits(ing, d));
    }
  }
  return r;
}

// Permutation oracle: output wire j carries input wire perm[j] (0-based).
inline Morphism oracle_permutation(std::size_t d, const std::vector<std::size_t>& perm) {
  std::size_t k = perm.size();
  Morphism r(d, k, k);
  for (std::size_t in = 0; in < r.cols(); ++in) {
    auto id = digits(in, d, k);
    std::vector<std::size_t> od(k);
    for (std::size_t j = 0; j < k; ++j) od[j] = id[perm[j]];
    r.at(undigits(od, d), in) = S(1);
  }
  return r;
}

// Phase parameters legal in every catalog calculus (both entries nonzero).
inline std::pair<S, S> random_phase(Rng& rng) {
  static const std::vector<S> pool = {S(1), S(2), S(-1), S::fraction(1, 3), S::i()};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return {pool[pick(rng)], pool[pick(rng)]};
}

struct DiagramShape {
  std::size_t max_nodes = 6;
  std::size_t max_edges = 10;
  std::size_t max_inputs = 2;
  std::size_t max_outputs = 2;
  std::size_t max_degree = 6;
};

inline Diagram random_diagram(Rng& rng, const DiagramShape& shape = {}) {
  std::uniform_int_distribution<std::size_t> nodes_d(1, shape.max_nodes);
  std::uniform_int_distribution<std::size_t> in_d(0, shape.max_inputs), out_d(0, shape.max_outputs);
  std::bernoulli_distribution coin(0.5), rare(0.15);
  std::size_t n = nodes_d(rng), ins = in_d(rng), outs = out_d(rng);
  Diagram d(ins, outs);
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::pair<S, S>> phase;
    if (coin(rng)) phase = random_phase(rng);
    d.add_node("n" + std::to_string(k), coin(rng) ? NodeColor::White : NodeColor::Black, phase);
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  auto open_node = [&]() -> std::optional<std::size_t> {
    for (int tries = 0; tries < 20; ++tries) {
      std::size_t v = pick(rng);
      if (d.degree(v) < shape.max_degree) return v;
    }
    return std::nullopt;
  };
  for (std::size_t k = 0; k < ins; ++k) {
    std::size_t v = open_node().value_or(0);
    d.connect(Endpoint::input(k), Endpoint::node(v, d.next_port(v)));
  }
  for (std::size_t k = 0; k < outs; ++k) {
    std::size_t v = open_node().value_or(0);
    d.connect(Endpoint::node(v, d.next_port(v)), Endpoint::output(k));
  }
  std::size_t budget = shape.max_edges > ins + outs ? shape.max_edges - ins - outs : 0;
  std::uniform_int_distribution<std::size_t> inner_d(0, budget);
  std::size_t inner = inner_d(rng);
  for (std::size_t k = 0; k < inner; ++k) {
    auto a = open_node(), b = open_node();
    if (!a || !b) break;
    if (*a == *b && !rare(rng)) continue;
    if (*a == *b && d.degree(*a) + 2 > shape.max_degree) continue;
    d.wire(a, b);
  }
  return d;
}

inline std::vector<std::size_t> random_order(Rng& rng, std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

// One instance per family (at (2, 3)) and per table (at its first sample).
inline const std::vector<CalculusInstance>& sample_calculi() {
  static const std::vector<CalculusInstance> all = [] {
    std::vector<CalculusInstance> out;
    for (Family f : all_families()) out.push_back(family_calculus({f, S(2), S(3)}));
    for (const auto& t : appendix_tables()) {
      out.push_back(appendix_table(t.name, t.samples.front().first, t.samples.front().second));
    }
    return out;
  }();
  return all;
}

}  // namespace zstar::testing
