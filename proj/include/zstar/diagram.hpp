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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zstar/catalog.hpp"

namespace zstar {

enum class NodeColor { White, Black };

struct Endpoint {
  enum class Kind { Node, Input, Output };
  Kind kind = Kind::Node;
  std::size_t index = 0;  // node index, or boundary port number
  std::size_t port = 0;   // leg of the node (unused for boundary ports)

  static Endpoint node(std::size_t n, std::size_t port) { return {Kind::Node, n, port}; }
  static Endpoint input(std::size_t k) { return {Kind::Input, k, 0}; }
  static Endpoint output(std::size_t k) { return {Kind::Output, k, 0}; }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Node {
  std::string id;
  NodeColor color = NodeColor::White;
  std::optional<std::pair<ExactScalar, ExactScalar>> phase;
};

struct Edge {
  Endpoint a;
  Endpoint b;
};

class Diagram {
 public:
  Diagram(std::size_t inputs = 0, std::size_t outputs = 0) : inputs_(inputs), outputs_(outputs) {}

  std::size_t add_node(std::string id, NodeColor color,
                       std::optional<std::pair<ExactScalar, ExactScalar>> phase = std::nullopt);
  void connect(Endpoint a, Endpoint b);
  // Connects using the next unused leg of each node endpoint.
  void wire(std::optional<std::size_t> node_a, std::optional<std::size_t> node_b);

  std::size_t inputs() const { return inputs_; }
  std::size_t outputs() const { return outputs_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  std::vector<Node>& nodes() { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t degree(std::size_t node) const;
  std::size_t next_port(std::size_t node) const { return degree(node); }

  // Throws DomainError when a boundary port is unused or used twice, or a
  // node's legs are not numbered 0..deg-1 with each used once.
  void validate() const;

  static Diagram parse(std::string_view text);
  std::string to_text() const;

 private:
  std::size_t inputs_;
  std::size_t outputs_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
};

// Evaluates the diagram in the calculus. Edges are contracted in the given
// order (a permutation of edge indices) or in file order.
Morphism evaluate(const Diagram& d, const CalculusInstance& calc,
                  const std::optional<std::vector<std::size_t>>& edge_order = std::nullopt);

struct BendMove {
  enum class Kind { InputToOutput, OutputToInput };
  Kind kind;
  std::size_t index;                    // port being moved
  std::optional<std::size_t> position;  // position on the other side; default: last
};

Diagram bend(const Diagram& d, const BendMove& move);
// The same move applied to a matrix with the white cup and cap of the calculus.
Morphism bend_morphism(const Morphism& m, const BendMove& move, const CompactStructure& white);

// Permutation on k wires taking wire `from` to position `to` (0-based).
Morphism move_wire(std::size_t dim, std::size_t k, std::size_t from, std::size_t to);

bool diagrams_isomorphic(const Diagram& a, const Diagram& b);
// True when the two evaluations agree.
bool isomorphic_invariance(const Diagram& a, const Diagram& b, const CalculusInstance& calc);

Diagram swap_colors(const Diagram& d);

}  // namespace zstar
