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

#include "quill/shape.hpp"

#include <cctype>
#include <sstream>

#include "quill/builder.hpp"

namespace quill {

std::size_t Shape::leaf_count() const {
  if (node == Node::Leaf) return 1;
  std::size_t n = 0;
  for (const auto& k : children) n += k.leaf_count();
  return n;
}

namespace {

Shape parse_shape_at(const std::string& s, std::size_t& i) {
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (i >= s.size()) throw Error("shape syntax: unexpected end of input");
  if (s[i] == 'q') {
    ++i;
    return Shape::leaf();
  }
  if (s[i] == '(') {
    ++i;
    std::vector<Shape> kids;
    skip();
    if (i < s.size() && s[i] == ')') {
      ++i;
      return Shape::tuple({});
    }
    for (;;) {
      kids.push_back(parse_shape_at(s, i));
      skip();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (i >= s.size() || s[i] != ')') throw Error("shape syntax: expected ')'");
    ++i;
    return Shape::tuple(std::move(kids));
  }
  if (s[i] == '[') {
    ++i;
    Shape elem = parse_shape_at(s, i);
    skip();
    if (i >= s.size() || s[i] != ';') throw Error("shape syntax: expected ';'");
    ++i;
    skip();
    std::size_t n = 0;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw Error("shape syntax: expected list length");
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      n = n * 10 + static_cast<std::size_t>(s[i++] - '0');
    skip();
    if (i >= s.size() || s[i] != ']') throw Error("shape syntax: expected ']'");
    ++i;
    return Shape::list(elem, n);
  }
  throw Error(std::string("shape syntax: unexpected character '") + s[i] + "'");
}

}  // namespace

Shape parse_shape(const std::string& text) {
  std::size_t i = 0;
  Shape s = parse_shape_at(text, i);
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  if (i != text.size()) throw Error("shape syntax: trailing characters");
  return s;
}

std::string shape_to_string(const Shape& s) {
  switch (s.node) {
    case Shape::Node::Leaf:
      return "q";
    case Shape::Node::Tuple: {
      std::string out = "(";
      for (std::size_t i = 0; i < s.children.size(); ++i) {
        if (i) out += ",";
        out += shape_to_string(s.children[i]);
      }
      return out + ")";
    }
    case Shape::Node::List: {
      // Lists of mixed element shapes cannot arise from the parser; print
      // using the first element (or a leaf for the empty list).
      Shape elem = s.children.empty() ? Shape::leaf() : s.children[0];
      return "[" + shape_to_string(elem) + ";" +
             std::to_string(s.children.size()) + "]";
    }
  }
  return "?";
}

Shape shape_of(const ShapeData& d) {
  Shape s;
  s.node = d.node;
  for (const auto& k : d.children) s.children.push_back(shape_of(k));
  return s;
}

ShapeData unflatten(const Shape& s,
                    const std::vector<ShapeData::Payload>& leaves) {
  std::size_t idx = 0;
  std::function<ShapeData(const Shape&)> go = [&](const Shape& n) {
    ShapeData d;
    d.node = n.node;
    if (n.node == Shape::Node::Leaf) {
      if (idx >= leaves.size()) throw ShapeMismatch("too few leaves for shape");
      d.leaf = leaves[idx++];
    } else {
      for (const auto& k : n.children) d.children.push_back(go(k));
    }
    return d;
  };
  ShapeData d = go(s);
  if (idx != leaves.size()) throw ShapeMismatch("too many leaves for shape");
  return d;
}

ShapeData from_qubits(const Shape& s, const std::vector<Qubit>& qs) {
  std::vector<ShapeData::Payload> ps(qs.begin(), qs.end());
  return unflatten(s, ps);
}

ShapeData from_bits(const Shape& s, const std::vector<Bit>& bs) {
  std::vector<ShapeData::Payload> ps(bs.begin(), bs.end());
  return unflatten(s, ps);
}

ShapeData from_bools(const Shape& s, const std::vector<bool>& bs) {
  std::vector<ShapeData::Payload> ps(bs.begin(), bs.end());
  return unflatten(s, ps);
}

ShapeData qc_false(const ShapeData& x) {
  ShapeData d;
  d.node = x.node;
  if (x.is_leaf()) {
    d.leaf = false;
  } else {
    for (const auto& k : x.children) d.children.push_back(qc_false(k));
  }
  return d;
}

namespace {

void require_same_shape(const ShapeData& a, const ShapeData& b) {
  if (shape_of(a) != shape_of(b))
    throw ShapeMismatch("operands have different shapes");
}

}  // namespace

ShapeData qinit_shape(Builder& b, const ShapeData& bools) {
  ShapeData d;
  d.node = bools.node;
  if (bools.is_leaf()) {
    d.leaf = b.qinit(std::get<bool>(bools.leaf));
  } else {
    for (const auto& k : bools.children) d.children.push_back(qinit_shape(b, k));
  }
  return d;
}

ShapeData map_unary(Builder& b, const std::function<Qubit(Builder&, Qubit)>& f,
                    const ShapeData& xs) {
  ShapeData d;
  d.node = xs.node;
  if (xs.is_leaf()) {
    d.leaf = f(b, std::get<Qubit>(xs.leaf));
  } else {
    for (const auto& k : xs.children) d.children.push_back(map_unary(b, f, k));
  }
  return d;
}

std::pair<ShapeData, ShapeData> map_binary(
    Builder& b,
    const std::function<std::pair<Qubit, Qubit>(Builder&, Qubit, Qubit)>& f,
    const ShapeData& xs, const ShapeData& ys) {
  require_same_shape(xs, ys);
  std::function<std::pair<ShapeData, ShapeData>(const ShapeData&,
                                                const ShapeData&)>
      go = [&](const ShapeData& x, const ShapeData& y) {
        ShapeData dx, dy;
        dx.node = dy.node = x.node;
        if (x.is_leaf()) {
          auto [qx, qy] = f(b, std::get<Qubit>(x.leaf), std::get<Qubit>(y.leaf));
          dx.leaf = qx;
          dy.leaf = qy;
        } else {
          for (std::size_t i = 0; i < x.children.size(); ++i) {
            auto [cx, cy] = go(x.children[i], y.children[i]);
            dx.children.push_back(std::move(cx));
            dy.children.push_back(std::move(cy));
          }
        }
        return std::make_pair(std::move(dx), std::move(dy));
      };
  return go(xs, ys);
}

std::pair<ShapeData, ShapeData> map_binary_c(
    Builder& b,
    const std::function<std::pair<Qubit, Bit>(Builder&, Qubit, Bit)>& f,
    const ShapeData& xs, const ShapeData& ys) {
  require_same_shape(xs, ys);
  std::function<std::pair<ShapeData, ShapeData>(const ShapeData&,
                                                const ShapeData&)>
      go = [&](const ShapeData& x, const ShapeData& y) {
        ShapeData dx, dy;
        dx.node = dy.node = x.node;
        if (x.is_leaf()) {
          auto [q, c] = f(b, std::get<Qubit>(x.leaf), std::get<Bit>(y.leaf));
          dx.leaf = q;
          dy.leaf = c;
        } else {
          for (std::size_t i = 0; i < x.children.size(); ++i) {
            auto [cx, cy] = go(x.children[i], y.children[i]);
            dx.children.push_back(std::move(cx));
            dy.children.push_back(std::move(cy));
          }
        }
        return std::make_pair(std::move(dx), std::move(dy));
      };
  return go(xs, ys);
}

ShapeData measure_shape(Builder& b, const ShapeData& xs) {
  ShapeData d;
  d.node = xs.node;
  if (xs.is_leaf()) {
    d.leaf = b.measure(std::get<Qubit>(xs.leaf));
  } else {
    for (const auto& k : xs.children) d.children.push_back(measure_shape(b, k));
  }
  return d;
}

void cdiscard_shape(Builder& b, const ShapeData& xs) {
  if (xs.is_leaf()) {
    b.cdiscard(std::get<Bit>(xs.leaf));
  } else {
    for (const auto& k : xs.children) cdiscard_shape(b, k);
  }
}

}  // namespace quill
