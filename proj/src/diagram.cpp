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

#include "zstar/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "zstar/errors.hpp"

namespace zstar {

std::size_t Diagram::add_node(std::string id, NodeColor color,
                              std::optional<std::pair<ExactScalar, ExactScalar>> phase) {
  for (const auto& n : nodes_) {
    if (n.id == id) throw DomainError("duplicate node id '" + id + "'");
  }
  nodes_.push_back(Node{std::move(id), color, std::move(phase)});
  return nodes_.size() - 1;
}

void Diagram::connect(Endpoint a, Endpoint b) {
  for (const Endpoint& e : {a, b}) {
    if (e.kind == Endpoint::Kind::Node && e.index >= nodes_.size()) {
      throw DomainError("edge refers to missing node " + std::to_string(e.index));
    }
    if (e.kind == Endpoint::Kind::Input && e.index >= inputs_) {
      throw DomainError("input port " + std::to_string(e.index) + " out of range");
    }
    if (e.kind == Endpoint::Kind::Output && e.index >= outputs_) {
      throw DomainError("output port " + std::to_string(e.index) + " out of range");
    }
  }
  edges_.push_back(Edge{a, b});
}

void Diagram::wire(std::optional<std::size_t> node_a, std::optional<std::size_t> node_b) {
  if (!node_a || !node_b) throw DomainError("wire: both endpoints must be nodes");
  Endpoint a = Endpoint::node(*node_a, degree(*node_a));
  std::size_t pb = degree(*node_b) + (*node_a == *node_b ? 1 : 0);
  connect(a, Endpoint::node(*node_b, pb));
}

std::size_t Diagram::degree(std::size_t node) const {
  std::size_t k = 0;
  for (const Edge& e : edges_) {
    for (const Endpoint& p : {e.a, e.b}) {
      if (p.kind == Endpoint::Kind::Node && p.index == node) ++k;
    }
  }
  return k;
}

namespace {

std::string endpoint_text(const Diagram& d, const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::Input:
      return "in." + std::to_string(e.index);
    case Endpoint::Kind::Output:
      return "out." + std::to_string(e.index);
    case Endpoint::Kind::Node:
      break;
  }
  return d.nodes()[e.index].id + "." + std::to_string(e.port);
}

std::optional<std::string> first_defect(const Diagram& d) {
  std::vector<std::vector<std::size_t>> ports(d.nodes().size());
  std::vector<std::size_t> in_use(d.inputs(), 0), out_use(d.outputs(), 0);
  for (const Edge& e : d.edges()) {
    for (const Endpoint& p : {e.a, e.b}) {
      switch (p.kind) {
        case Endpoint::Kind::Input:
          if (p.index >= d.inputs()) return "input port " + std::to_string(p.index) + " out of range";
          ++in_use[p.index];
          break;
        case Endpoint::Kind::Output:
          if (p.index >= d.outputs()) return "output port " + std::to_string(p.index) + " out of range";
          ++out_use[p.index];
          break;
        case Endpoint::Kind::Node:
          if (p.index >= d.nodes().size()) return "missing node " + std::to_string(p.index);
          ports[p.index].push_back(p.port);
          break;
      }
    }
  }
  for (std::size_t k = 0; k < in_use.size(); ++k) {
    if (in_use[k] == 0) return "dangling input port in." + std::to_string(k);
    if (in_use[k] > 1) return "input port in." + std::to_string(k) + " used more than once";
  }
  for (std::size_t k = 0; k < out_use.size(); ++k) {
    if (out_use[k] == 0) return "dangling output port out." + std::to_string(k);
    if (out_use[k] > 1) return "output port out." + std::to_string(k) + " used more than once";
  }
  for (std::size_t n = 0; n < ports.size(); ++n) {
    auto p = ports[n];
    std::sort(p.begin(), p.end());
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k > 0 && p[k] == p[k - 1]) {
        return "port " + d.nodes()[n].id + "." + std::to_string(p[k]) + " used more than once";
      }
      if (p[k] != k) {
        return "dangling port " + d.nodes()[n].id + "." + std::to_string(k);
      }
    }
  }
  return std::nullopt;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::size_t parse_index(const std::string& s, std::size_t line, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, "expected a non-negative integer for " + what + ", got '" + s + "'");
  }
  return static_cast<std::size_t>(std::stoul(s));
}

}  // namespace

void Diagram::validate() const {
  if (auto defect = first_defect(*this)) throw DomainError(*defect);
}

Diagram Diagram::parse(std::string_view text) {
  Diagram d;
  bool have_boundary = false;
  std::size_t boundary_line = 0;
  std::map<std::string, std::size_t> ids;
  std::map<std::string, std::size_t> node_line;
  std::set<std::tuple<int, std::size_t, std::size_t>> used;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;

  auto endpoint = [&](const std::string& tok) {
    auto dot = tok.rfind('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == tok.size()) {
      throw ParseError(line, "malformed endpoint '" + tok + "' (expected <node>.<k>, in.<k> or out.<k>)");
    }
    std::string head = tok.substr(0, dot);
    std::size_t k = parse_index(tok.substr(dot + 1), line, "port");
    Endpoint e;
    if (head == "in" || head == "out") {
      if (!have_boundary) throw ParseError(line, "boundary must be declared before it is used");
      bool is_in = head == "in";
      std::size_t limit = is_in ? d.inputs_ : d.outputs_;
      if (k >= limit) throw ParseError(line, "boundary port '" + tok + "' out of range");
      e = is_in ? Endpoint::input(k) : Endpoint::output(k);
    } else {
      auto it = ids.find(head);
      if (it == ids.end()) throw ParseError(line, "unknown node '" + head + "'");
      e = Endpoint::node(it->second, k);
    }
    auto key = std::make_tuple(static_cast<int>(e.kind), e.index, e.port);
    if (!used.insert(key).second) throw ParseError(line, "port '" + tok + "' used more than once");
    return e;
  };

  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    auto t = tokens(raw);
    if (t.empty()) continue;
    if (t[0] == "boundary") {
      if (have_boundary) throw ParseError(line, "boundary declared twice");
      if (t.size() != 5 || t[1] != "in" || t[3] != "out") {
        throw ParseError(line, "expected 'boundary in <n> out <m>'");
      }
      d.inputs_ = parse_index(t[2], line, "input count");
      d.outputs_ = parse_index(t[4], line, "output count");
      have_boundary = true;
      boundary_line = line;
    } else if (t[0] == "node") {
      if (t.size() != 3 && t.size() != 6) {
        throw ParseError(line, "expected 'node <id> <white|black> [phase <x> <y>]'");
      }
      const std::string& id = t[1];
      if (id == "in" || id == "out" || id.find('.') != std::string::npos) {
        throw ParseError(line, "invalid node id '" + id + "'");
      }
      if (ids.count(id)) throw ParseError(line, "duplicate node id '" + id + "'");
      NodeColor color;
      if (t[2] == "white") {
        color = NodeColor::White;
      } else if (t[2] == "black") {
        color = NodeColor::Black;
      } else {
        throw ParseError(line, "unknown colour '" + t[2] + "'");
      }
      std::optional<std::pair<ExactScalar, ExactScalar>> phase;
      if (t.size() == 6) {
        if (t[3] != "phase") throw ParseError(line, "expected 'phase' after the colour");
        try {
          phase = std::make_pair(ExactScalar::parse(t[4]), ExactScalar::parse(t[5]));
        } catch (const ParseError& e) {
          throw ParseError(line, e.what());
        }
      }
      ids[id] = d.nodes_.size();
      node_line[id] = line;
      d.nodes_.push_back(Node{id, color, phase});
    } else if (t[0] == "edge") {
      if (t.size() != 3) throw ParseError(line, "expected 'edge <endpoint> <endpoint>'");
      Endpoint a = endpoint(t[1]);
      Endpoint b = endpoint(t[2]);
      d.edges_.push_back(Edge{a, b});
    } else {
      throw ParseError(line, "unknown directive '" + t[0] + "'");
    }
  }

  std::vector<std::vector<std::size_t>> ports(d.nodes_.size());
  std::vector<bool> in_used(d.inputs_, false), out_used(d.outputs_, false);
  for (const Edge& e : d.edges_) {
    for (const Endpoint& p : {e.a, e.b}) {
      if (p.kind == Endpoint::Kind::Node) ports[p.index].push_back(p.port);
      if (p.kind == Endpoint::Kind::Input) in_used[p.index] = true;
      if (p.kind == Endpoint::Kind::Output) out_used[p.index] = true;
    }
  }
  for (std::size_t k = 0; k < in_used.size(); ++k) {
    if (!in_used[k]) throw ParseError(boundary_line, "dangling port in." + std::to_string(k));
  }
  for (std::size_t k = 0; k < out_used.size(); ++k) {
    if (!out_used[k]) throw ParseError(boundary_line, "dangling port out." + std::to_string(k));
  }
  for (std::size_t n = 0; n < ports.size(); ++n) {
    auto p = ports[n];
    std::sort(p.begin(), p.end());
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] != k) {
        const std::string& id = d.nodes_[n].id;
        throw ParseError(node_line[id], "dangling port " + id + "." + std::to_string(k));
      }
    }
  }
  return d;
}

std::string Diagram::to_text() const {
  std::ostringstream out;
  out << "boundary in " << inputs_ << " out " << outputs_ << "\n";
  for (const Node& n : nodes_) {
    out << "node " << n.id << (n.color == NodeColor::White ? " white" : " black");
    if (n.phase) {
      auto compact = [](const ExactScalar& s) {
        std::string t = s.to_string();
        t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
        return t;
      };
      out << " phase " << compact(n.phase->first) << " " << compact(n.phase->second);
    }
    out << "\n";
  }
  for (const Edge& e : edges_) {
    out << "edge " << endpoint_text(*this, e.a) << " " << endpoint_text(*this, e.b) << "\n";
  }
  return out.str();
}

namespace {

// Dense tensor with one index per leg; the first leg is most significant.
struct Tensor {
  std::vector<int> legs;
  std::vector<ExactScalar> data;
};

std::size_t leg_position(const Tensor& t, int leg) {
  auto it = std::find(t.legs.begin(), t.legs.end(), leg);
  return static_cast<std::size_t>(it - t.legs.begin());
}

// Tensor whose legs are the outputs of a state 0 -> k.
Tensor from_state(const Morphism& state, std::vector<int> legs) {
  Tensor t;
  t.legs = std::move(legs);
  t.data.reserve(state.rows());
  for (std::size_t r = 0; r < state.rows(); ++r) t.data.push_back(state.at(r, 0));
  return t;
}

std::vector<std::size_t> digits_of(std::size_t index, std::size_t dim, std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t k = count; k-- > 0;) {
    out[k] = index % dim;
    index /= dim;
  }
  return out;
}

std::size_t index_of(const std::vector<std::size_t>& digits, std::size_t dim) {
  std::size_t r = 0;
  for (std::size_t v : digits) r = r * dim + v;
  return r;
}

// Contracts leg la of a with leg lb of b through the pairing nu.
Tensor contract_pair(const Tensor& a, int la, const Tensor& b, int lb, const Morphism& nu,
                     std::size_t dim) {
  std::size_t pa = leg_position(a, la), pb = leg_position(b, lb);
  Tensor r;
  for (std::size_t k = 0; k < a.legs.size(); ++k) {
    if (k != pa) r.legs.push_back(a.legs[k]);
  }
  for (std::size_t k = 0; k < b.legs.size(); ++k) {
    if (k != pb) r.legs.push_back(b.legs[k]);
  }
  // b'[.., u, ..] = sum_v nu[u, v] b[.., v, ..]
  std::vector<ExactScalar> bp(b.data.size());
  for (std::size_t idx = 0; idx < b.data.size(); ++idx) {
    auto dg = digits_of(idx, dim, b.legs.size());
    ExactScalar s;
    std::size_t u = dg[pb];
    for (std::size_t v = 0; v < dim; ++v) {
      const ExactScalar& w = nu.at(0, u * dim + v);
      if (w.is_zero()) continue;
      dg[pb] = v;
      s += w * b.data[index_of(dg, dim)];
    }
    bp[idx] = s;
  }
  std::size_t na = a.legs.size() - 1, nb = b.legs.size() - 1;
  std::size_t size_a = ipow(dim, na), size_b = ipow(dim, nb);
  r.data.assign(size_a * size_b, ExactScalar());
  for (std::size_t ia = 0; ia < size_a; ++ia) {
    auto da = digits_of(ia, dim, na);
    for (std::size_t ib = 0; ib < size_b; ++ib) {
      auto db = digits_of(ib, dim, nb);
      ExactScalar s;
      for (std::size_t u = 0; u < dim; ++u) {
        std::vector<std::size_t> fa = da, fb = db;
        fa.insert(fa.begin() + static_cast<std::ptrdiff_t>(pa), u);
        fb.insert(fb.begin() + static_cast<std::ptrdiff_t>(pb), u);
        const ExactScalar& x = a.data[index_of(fa, dim)];
        if (x.is_zero()) continue;
        s += x * bp[index_of(fb, dim)];
      }
      r.data[ia * size_b + ib] = s;
    }
  }
  return r;
}

Tensor trace_pair(const Tensor& t, int la, int lb, const Morphism& nu, std::size_t dim) {
  std::size_t pa = leg_position(t, la), pb = leg_position(t, lb);
  Tensor r;
  for (std::size_t k = 0; k < t.legs.size(); ++k) {
    if (k != pa && k != pb) r.legs.push_back(t.legs[k]);
  }
  std::size_t n = r.legs.size();
  r.data.assign(ipow(dim, n), ExactScalar());
  for (std::size_t idx = 0; idx < r.data.size(); ++idx) {
    auto rest = digits_of(idx, dim, n);
    ExactScalar s;
    for (std::size_t u = 0; u < dim; ++u) {
      for (std::size_t v = 0; v < dim; ++v) {
        const ExactScalar& w = nu.at(0, u * dim + v);
        if (w.is_zero()) continue;
        std::vector<std::size_t> full;
        std::size_t j = 0;
        for (std::size_t k = 0; k < t.legs.size(); ++k) {
          if (k == pa) {
            full.push_back(u);
          } else if (k == pb) {
            full.push_back(v);
          } else {
            full.push_back(rest[j++]);
          }
        }
        s += w * t.data[index_of(full, dim)];
      }
    }
    r.data[idx] = s;
  }
  return r;
}

Tensor outer(const Tensor& a, const Tensor& b) {
  Tensor r;
  r.legs = a.legs;
  r.legs.insert(r.legs.end(), b.legs.begin(), b.legs.end());
  r.data.reserve(a.data.size() * b.data.size());
  for (const auto& x : a.data) {
    for (const auto& y : b.data) r.data.push_back(x * y);
  }
  return r;
}

Morphism node_state(const Node& n, std::size_t legs, const CalculusInstance& calc) {
  const ZStarAlgebra& z = calc.zstar;
  std::optional<Morphism> phase;
  if (n.color == NodeColor::White) {
    if (n.phase) phase = calc.white_phase(n.phase->first, n.phase->second);
    return spider(z.white(), 0, legs, phase);
  }
  if (n.phase) {
    auto dinv = inverse(z.dualizer());
    if (!dinv) throw DomainError("dualizer of " + calc.name + " is not invertible");
    phase = compose(*dinv, calc.black_phase(n.phase->first, n.phase->second));
  }
  Morphism s = spider(z.black(), 0, legs, phase);
  return compose(tensor_power(z.dualizer(), legs), s);
}

}  // namespace

Morphism evaluate(const Diagram& d, const CalculusInstance& calc,
                  const std::optional<std::vector<std::size_t>>& edge_order) {
  d.validate();
  const std::size_t dim = calc.zstar.dim();
  const CompactStructure white = induced_compact(calc.zstar.white());
  const Morphism& nu = white.cap;

  // Leg ids: node legs, then the free boundary legs, then the stub legs.
  std::map<std::tuple<int, std::size_t, std::size_t>, int> leg_of;
  int next = 0;
  auto key = [](const Endpoint& e) {
    return std::make_tuple(static_cast<int>(e.kind), e.index, e.port);
  };
  std::vector<Tensor> factors;
  for (std::size_t n = 0; n < d.nodes().size(); ++n) {
    std::size_t deg = d.degree(n);
    std::vector<int> legs;
    for (std::size_t k = 0; k < deg; ++k) {
      legs.push_back(next);
      leg_of[key(Endpoint::node(n, k))] = next++;
    }
    factors.push_back(from_state(node_state(d.nodes()[n], deg, calc), legs));
  }
  std::vector<int> free_in(d.inputs()), free_out(d.outputs());
  Morphism delta = compose(identity(dim, 2), white.cup);
  Morphism kronecker(dim, 0, 2);
  for (std::size_t v = 0; v < dim; ++v) kronecker.at(v * dim + v, 0) = ExactScalar(1);
  for (std::size_t k = 0; k < d.inputs(); ++k) {
    free_in[k] = next++;
    leg_of[key(Endpoint::input(k))] = next;
    factors.push_back(from_state(kronecker, {free_in[k], next++}));
  }
  for (std::size_t k = 0; k < d.outputs(); ++k) {
    free_out[k] = next++;
    leg_of[key(Endpoint::output(k))] = next;
    factors.push_back(from_state(delta, {free_out[k], next++}));
  }

  std::vector<std::size_t> order(d.edges().size());
  std::iota(order.begin(), order.end(), 0);
  if (edge_order) {
    std::vector<std::size_t> sorted = *edge_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != order) throw DomainError("edge order is not a permutation of the edges");
    order = *edge_order;
  }

  std::vector<std::optional<Tensor>> pool(factors.begin(), factors.end());
  auto owner = [&](int leg) {
    for (std::size_t f = 0; f < pool.size(); ++f) {
      if (pool[f] && std::find(pool[f]->legs.begin(), pool[f]->legs.end(), leg) != pool[f]->legs.end()) {
        return f;
      }
    }
    throw DomainError("internal: leg not found during contraction");
  };
  for (std::size_t idx : order) {
    const Edge& e = d.edges()[idx];
    int la = leg_of.at(key(e.a)), lb = leg_of.at(key(e.b));
    std::size_t fa = owner(la), fb = owner(lb);
    if (fa == fb) {
      pool[fa] = trace_pair(*pool[fa], la, lb, nu, dim);
    } else {
      pool[fa] = contract_pair(*pool[fa], la, *pool[fb], lb, nu, dim);
      pool[fb].reset();
    }
  }
  Tensor all{{}, {ExactScalar(1)}};
  for (auto& f : pool) {
    if (f) all = outer(all, *f);
  }

  Morphism result(dim, d.inputs(), d.outputs());
  std::vector<std::size_t> pos_out(d.outputs()), pos_in(d.inputs());
  for (std::size_t k = 0; k < d.outputs(); ++k) pos_out[k] = leg_position(all, free_out[k]);
  for (std::size_t k = 0; k < d.inputs(); ++k) pos_in[k] = leg_position(all, free_in[k]);
  for (std::size_t idx = 0; idx < all.data.size(); ++idx) {
    auto dg = digits_of(idx, dim, all.legs.size());
    std::size_t r = 0, c = 0;
    for (std::size_t p : pos_out) r = r * dim + dg[p];
    for (std::size_t p : pos_in) c = c * dim + dg[p];
    result.at(r, c) = all.data[idx];
  }
  return result;
}

namespace {

std::size_t renumber(std::size_t k, std::size_t removed) { return k > removed ? k - 1 : k; }
std::size_t shift_for_insert(std::size_t k, std::size_t pos) { return k >= pos ? k + 1 : k; }

}  // namespace

Diagram bend(const Diagram& d, const BendMove& move) {
  bool to_output = move.kind == BendMove::Kind::InputToOutput;
  std::size_t from_count = to_output ? d.inputs() : d.outputs();
  std::size_t to_count = to_output ? d.outputs() : d.inputs();
  if (move.index >= from_count) throw DomainError("bend: port index out of range");
  std::size_t pos = move.position.value_or(to_count);
  if (pos > to_count) throw DomainError("bend: target position out of range");

  Diagram r(to_output ? d.inputs() - 1 : d.inputs() + 1, to_output ? d.outputs() + 1 : d.outputs() - 1);
  for (const Node& n : d.nodes()) r.add_node(n.id, n.color, n.phase);
  auto Kfrom = to_output ? Endpoint::Kind::Input : Endpoint::Kind::Output;
  auto Kto = to_output ? Endpoint::Kind::Output : Endpoint::Kind::Input;
  auto map = [&](Endpoint e) {
    if (e.kind == Kfrom) {
      if (e.index == move.index) return Endpoint{Kto, pos, 0};
      return Endpoint{Kfrom, renumber(e.index, move.index), 0};
    }
    if (e.kind == Kto) return Endpoint{Kto, shift_for_insert(e.index, pos), 0};
    return e;
  };
  for (const Edge& e : d.edges()) r.connect(map(e.a), map(e.b));
  return r;
}

Morphism move_wire(std::size_t dim, std::size_t k, std::size_t from, std::size_t to) {
  if (from >= k || to >= k) throw ArityError("move_wire: position out of range");
  std::vector<std::size_t> wires;
  for (std::size_t w = 0; w < k; ++w) {
    if (w != from) wires.push_back(w + 1);
  }
  wires.insert(wires.begin() + static_cast<std::ptrdiff_t>(to), from + 1);
  return permutation(dim, wires);
}

Morphism bend_morphism(const Morphism& m, const BendMove& move, const CompactStructure& white) {
  std::size_t dim = m.dim(), n = m.inputs(), k = m.outputs();
  if (move.kind == BendMove::Kind::InputToOutput) {
    if (move.index >= n) throw DomainError("bend: port index out of range");
    std::size_t pos = move.position.value_or(k);
    if (pos > k) throw DomainError("bend: target position out of range");
    // (id^{n-1} (x) cup), then route the cup's first leg to input slot `index`.
    Morphism prep = tensor(identity(dim, n - 1), white.cup);
    Morphism route = tensor(move_wire(dim, n, n - 1, move.index), identity(dim));
    Morphism body = compose(tensor(m, identity(dim)), compose(route, prep));
    return compose(move_wire(dim, k + 1, k, pos), body);
  }
  if (move.index >= k) throw DomainError("bend: port index out of range");
  std::size_t pos = move.position.value_or(n);
  if (pos > n) throw DomainError("bend: target position out of range");
  Morphism in_route = move_wire(dim, n + 1, pos, n);
  Morphism body = compose(tensor(m, identity(dim)), in_route);
  Morphism out_route = tensor(move_wire(dim, k, move.index, k - 1), identity(dim));
  Morphism capped = tensor(identity(dim, k - 1), white.cap);
  return compose(capped, compose(out_route, body));
}

namespace {

using Terminal = std::pair<int, std::size_t>;  // (0 node | 1 input | 2 output, index)

Terminal terminal(const Endpoint& e, const std::vector<std::size_t>& node_map) {
  switch (e.kind) {
    case Endpoint::Kind::Input:
      return {1, e.index};
    case Endpoint::Kind::Output:
      return {2, e.index};
    case Endpoint::Kind::Node:
      break;
  }
  return {0, node_map[e.index]};
}

std::vector<std::pair<Terminal, Terminal>> edge_multiset(const Diagram& d,
                                                         const std::vector<std::size_t>& node_map) {
  std::vector<std::pair<Terminal, Terminal>> out;
  for (const Edge& e : d.edges()) {
    Terminal a = terminal(e.a, node_map), b = terminal(e.b, node_map);
    if (b < a) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_label(const Node& a, const Node& b) {
  if (a.color != b.color) return false;
  auto norm = [](const Node& n) {
    return n.phase.value_or(std::make_pair(ExactScalar(), ExactScalar()));
  };
  bool a_has = a.phase.has_value(), b_has = b.phase.has_value();
  if (a_has != b_has) return false;
  return !a_has || norm(a) == norm(b);
}

bool search(const Diagram& a, const Diagram& b, std::vector<std::size_t>& map,
            std::vector<bool>& taken, std::size_t next,
            const std::vector<std::pair<Terminal, Terminal>>& target) {
  if (next == a.nodes().size()) return edge_multiset(a, map) == target;
  for (std::size_t j = 0; j < b.nodes().size(); ++j) {
    if (taken[j] || !same_label(a.nodes()[next], b.nodes()[j])) continue;
    if (a.degree(next) != b.degree(j)) continue;
    taken[j] = true;
    map[next] = j;
    if (search(a, b, map, taken, next + 1, target)) return true;
    taken[j] = false;
  }
  return false;
}

}  // namespace

bool diagrams_isomorphic(const Diagram& a, const Diagram& b) {
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs()) return false;
  if (a.nodes().size() != b.nodes().size() || a.edges().size() != b.edges().size()) return false;
  std::vector<std::size_t> ident(b.nodes().size());
  std::iota(ident.begin(), ident.end(), 0);
  auto target = edge_multiset(b, ident);
  std::vector<std::size_t> map(a.nodes().size());
  std::vector<bool> taken(b.nodes().size(), false);
  return search(a, b, map, taken, 0, target);
}

bool isomorphic_invariance(const Diagram& a, const Diagram& b, const CalculusInstance& calc) {
  return evaluate(a, calc) == evaluate(b, calc);
}

Diagram swap_colors(const Diagram& d) {
  Diagram r(d.inputs(), d.outputs());
  for (const Node& n : d.nodes()) {
    r.add_node(n.id, n.color == NodeColor::White ? NodeColor::Black : NodeColor::White, n.phase);
  }
  for (const Edge& e : d.edges()) r.connect(e.a, e.b);
  return r;
}

}  // namespace zstar
