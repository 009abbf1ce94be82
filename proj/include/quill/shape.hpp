// Copyright 2026 The Quill Authors
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
#include <string>
#include <variant>
#include <vector>

#include "quill/ir.hpp"

namespace quill {

struct Qubit {
  WireId wire = 0;
  bool operator==(const Qubit&) const = default;
};

struct Bit {
  WireId wire = 0;
  bool operator==(const Bit&) const = default;
};

/// Payload-erased tree structure: the common shape of the boolean, classical
/// and quantum versions of a data type.
struct Shape {
  enum class Node { Leaf, Tuple, List };
  Node node = Node::Leaf;
  std::vector<Shape> children;  // empty for Leaf

  bool operator==(const Shape&) const = default;

  static Shape leaf() { return {}; }
  static Shape tuple(std::vector<Shape> kids) {
    return {Node::Tuple, std::move(kids)};
  }
  static Shape list(const Shape& elem, std::size_t n) {
    return {Node::List, std::vector<Shape>(n, elem)};
  }

  std::size_t leaf_count() const;
};

/// Parses the CLI shape syntax: `q` leaf, `(s1,s2,...)` tuple, `[s;n]` list.
Shape parse_shape(const std::string& text);
std::string shape_to_string(const Shape& s);

/// One tree with three possible leaf payloads; all leaves of a given tree
/// hold the same alternative.
struct ShapeData {
  using Payload = std::variant<bool, Bit, Qubit>;
  Shape::Node node = Shape::Node::Leaf;
  Payload leaf;                     // valid when node == Leaf
  std::vector<ShapeData> children;  // valid otherwise

  bool operator==(const ShapeData&) const = default;

  static ShapeData make_leaf(Payload p) {
    ShapeData d;
    d.leaf = std::move(p);
    return d;
  }
  static ShapeData make_tuple(std::vector<ShapeData> kids) {
    ShapeData d;
    d.node = Shape::Node::Tuple;
    d.children = std::move(kids);
    return d;
  }
  static ShapeData make_list(std::vector<ShapeData> kids) {
    ShapeData d;
    d.node = Shape::Node::List;
    d.children = std::move(kids);
    return d;
  }

  bool is_leaf() const { return node == Shape::Node::Leaf; }
};

struct ShapeMismatch : Error {
  using Error::Error;
};

Shape shape_of(const ShapeData& d);

/// Depth-first left-to-right leaf collection; the traversal order shared by
/// every generic operation.
template <class T>
std::vector<T> leaves_of(const ShapeData& d) {
  std::vector<T> out;
  std::function<void(const ShapeData&)> go = [&](const ShapeData& n) {
    if (n.is_leaf())
      out.push_back(std::get<T>(n.leaf));
    else
      for (const auto& k : n.children) go(k);
  };
  go(d);
  return out;
}

/// Rebuilds a tree of the given shape from leaves in depth-first order.
ShapeData unflatten(const Shape& s, const std::vector<ShapeData::Payload>& leaves);

ShapeData from_qubits(const Shape& s, const std::vector<Qubit>& qs);
ShapeData from_bits(const Shape& s, const std::vector<Bit>& bs);
ShapeData from_bools(const Shape& s, const std::vector<bool>& bs);

/// All-False boolean tree of the same shape as x.
ShapeData qc_false(const ShapeData& x);

class Builder;

// Generic leafwise operations (shapes preserved, leaves visited depth-first
// left-to-right).
ShapeData qinit_shape(Builder& b, const ShapeData& bools);
ShapeData map_unary(Builder& b, const std::function<Qubit(Builder&, Qubit)>& f,
                    const ShapeData& xs);
std::pair<ShapeData, ShapeData> map_binary(
    Builder& b,
    const std::function<std::pair<Qubit, Qubit>(Builder&, Qubit, Qubit)>& f,
    const ShapeData& xs, const ShapeData& ys);
std::pair<ShapeData, ShapeData> map_binary_c(
    Builder& b,
    const std::function<std::pair<Qubit, Bit>(Builder&, Qubit, Bit)>& f,
    const ShapeData& xs, const ShapeData& ys);
ShapeData measure_shape(Builder& b, const ShapeData& xs);
void cdiscard_shape(Builder& b, const ShapeData& xs);

}  // namespace quill
