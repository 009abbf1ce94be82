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

#include "quill/examples.hpp"

#include <algorithm>

#include "quill/transform.hpp"

namespace quill::examples {

namespace {

Qubit hadamard(Builder& b, Qubit q) { return b.apply_named(NamedGate::H, q); }

Qubit qnot(Builder& b, Qubit q, const std::vector<Control>& ctrls = {}) {
  return b.apply_named(NamedGate::X, q, ctrls);
}

std::pair<Qubit, Qubit> controlled_not(Builder& b, Qubit target, Qubit ctl) {
  return {qnot(b, target, {b.ctrl(ctl)}), ctl};
}

}  // namespace

// ---------------------------------------------------------------------------
// Teleportation building blocks

Qubit plus_minus(Builder& b, bool value) {
  Qubit q = b.qinit(value);
  return hadamard(b, q);
}

std::pair<Qubit, Qubit> share(Builder& b, Qubit a) {
  Qubit q = b.qinit(false);
  q = qnot(b, q, {b.ctrl(a)});
  return {a, q};
}

std::pair<Qubit, Qubit> bell00(Builder& b) {
  Qubit a = plus_minus(b, false);
  return share(b, a);
}

std::pair<Bit, Bit> alice(Builder& b, Qubit q, Qubit a) {
  a = qnot(b, a, {b.ctrl(q)});
  q = hadamard(b, q);
  Bit x = b.measure(q);
  Bit y = b.measure(a);
  return {x, y};
}

Qubit bob(Builder& b, Qubit target, std::pair<Bit, Bit> xy) {
  target = b.apply_named(NamedGate::X, target, {b.ctrl(xy.second)});
  target = b.apply_named(NamedGate::Z, target, {b.ctrl(xy.first)});
  b.cdiscard(xy.first);
  b.cdiscard(xy.second);
  return target;
}

Qubit teleport_one(Builder& b, Qubit q) {
  auto [a, t] = bell00(b);
  auto xy = alice(b, q, a);
  return bob(b, t, xy);
}

// ---------------------------------------------------------------------------
// Shape-generic teleportation

namespace {

ShapeData plus_minus_generic(Builder& b, const ShapeData& bools) {
  ShapeData qs = qinit_shape(b, bools);
  return map_unary(b, hadamard, qs);
}

std::pair<ShapeData, ShapeData> share_generic(Builder& b, const ShapeData& qa) {
  ShapeData qb = qinit_shape(b, qc_false(qa));
  auto [qb2, qa2] = map_binary(b, controlled_not, qb, qa);
  return {qa2, qb2};
}

std::pair<ShapeData, ShapeData> bell00_generic(Builder& b,
                                               const ShapeData& shape) {
  ShapeData qa = plus_minus_generic(b, shape);
  return share_generic(b, qa);
}

std::pair<ShapeData, ShapeData> alice_generic(Builder& b, ShapeData q,
                                              ShapeData a) {
  auto [a2, q2] = map_binary(b, controlled_not, a, q);
  q2 = map_unary(b, hadamard, q2);
  ShapeData x = measure_shape(b, q2);
  ShapeData y = measure_shape(b, a2);
  return {x, y};
}

ShapeData bob_generic(Builder& b, ShapeData target,
                      std::pair<ShapeData, ShapeData> xy) {
  auto controlled_gate = [](NamedGate gate) {
    return [gate](Builder& bd, Qubit q, Bit c) -> std::pair<Qubit, Bit> {
      return {bd.apply_named(gate, q, {bd.ctrl(c)}), c};
    };
  };
  auto [b2, y2] = map_binary_c(b, controlled_gate(NamedGate::X), target,
                               xy.second);
  auto [b3, x2] = map_binary_c(b, controlled_gate(NamedGate::Z), b2, xy.first);
  cdiscard_shape(b, x2);
  cdiscard_shape(b, y2);
  return b3;
}

}  // namespace

ShapeData teleport_shaped(Builder& b, const ShapeData& q) {
  auto [a, t] = bell00_generic(b, qc_false(q));
  auto xy = alice_generic(b, q, a);
  return bob_generic(b, t, xy);
}

// ---------------------------------------------------------------------------
// Fourier transform and the Draper adder

namespace {

std::vector<Qubit> tail(const std::vector<Qubit>& v) {
  return {v.begin() + 1, v.end()};
}

// Applies the cascade R(2), R(3), ... controlled on c over the already
// transformed qubits; the recursion visits the far end of the list first.
std::vector<Qubit> rotations(Builder& b, Qubit c, const std::vector<Qubit>& qs,
                             std::size_t n) {
  if (qs.empty()) return {};
  Qubit q = qs.front();
  std::vector<Qubit> rest = tail(qs);
  std::vector<Qubit> done = rotations(b, c, rest, n);
  auto m = static_cast<std::uint32_t>(n + 1 - rest.size());
  q = b.apply_rot(m, q, {b.ctrl(c)});
  done.insert(done.begin(), q);
  return done;
}

// Little-endian-input transform: empty list -> empty circuit, singleton ->
// Hadamard, otherwise recurse on the tail, rotate, Hadamard the head.
std::vector<Qubit> qft_rec(Builder& b, const std::vector<Qubit>& xs) {
  if (xs.empty()) return {};
  if (xs.size() == 1) {
    hadamard(b, xs[0]);
    return xs;
  }
  Qubit x = xs.front();
  std::vector<Qubit> rest = qft_rec(b, tail(xs));
  std::vector<Qubit> out = rotations(b, x, rest, rest.size());
  x = hadamard(b, x);
  out.insert(out.begin(), x);
  return out;
}

void qft_adder_one(Builder& bd, const std::vector<Qubit>& as, Qubit b,
                   std::size_t n) {
  if (as.empty()) return;
  bd.apply_rot(static_cast<std::uint32_t>(n), b, {bd.ctrl(as.front())});
  qft_adder_one(bd, tail(as), b, n + 1);
}

ShapeData list_of(const std::vector<Qubit>& qs) {
  std::vector<ShapeData> kids;
  kids.reserve(qs.size());
  for (Qubit q : qs) kids.push_back(ShapeData::make_leaf(q));
  return ShapeData::make_list(std::move(kids));
}

Program qft_program() {
  return [](Builder& b, ShapeData args) {
    return list_of(qft_big_endian(b, leaves_of<Qubit>(args)));
  };
}

}  // namespace

std::vector<Qubit> qft_big_endian(Builder& b, std::vector<Qubit> qs) {
  std::reverse(qs.begin(), qs.end());
  return qft_rec(b, qs);
}

void qft_adder(Builder& b, const std::vector<Qubit>& as,
               const std::vector<Qubit>& bs) {
  if (bs.empty()) return;
  qft_adder_one(b, as, bs.front(), 1);
  qft_adder(b, tail(as), tail(bs));
}

// ---------------------------------------------------------------------------
// Whole circuits

Circuit plus_minus_circuit(bool value) {
  return extract(Shape::tuple({}), [value](Builder& b, ShapeData) {
    return ShapeData::make_leaf(plus_minus(b, value));
  });
}

Circuit share_circuit() {
  return extract(Shape::leaf(), [](Builder& b, ShapeData arg) {
    auto [a, q] = share(b, std::get<Qubit>(arg.leaf));
    return ShapeData::make_tuple(
        {ShapeData::make_leaf(a), ShapeData::make_leaf(q)});
  });
}

Circuit bell00_circuit() {
  return extract(Shape::tuple({}), [](Builder& b, ShapeData) {
    auto [a, q] = bell00(b);
    return ShapeData::make_tuple(
        {ShapeData::make_leaf(a), ShapeData::make_leaf(q)});
  });
}

Circuit alice_circuit() {
  return extract(Shape::tuple({Shape::leaf(), Shape::leaf()}),
                 [](Builder& b, ShapeData args) {
                   auto [x, y] =
                       alice(b, std::get<Qubit>(args.children[0].leaf),
                             std::get<Qubit>(args.children[1].leaf));
                   return ShapeData::make_tuple(
                       {ShapeData::make_leaf(x), ShapeData::make_leaf(y)});
                 });
}

Circuit bob_circuit() {
  // Hand-assembled because two of the three inputs are classical bits.
  Circuit c;
  Builder b([&c](const Gate& g) { c.gates.push_back(g); });
  Qubit target{b.allocate(WireKind::Quantum)};
  Bit x{b.allocate(WireKind::Classical)};
  Bit y{b.allocate(WireKind::Classical)};
  Qubit out = bob(b, target, {x, y});
  c.inputs = {{target.wire, WireKind::Quantum},
              {x.wire, WireKind::Classical},
              {y.wire, WireKind::Classical}};
  c.outputs = {{out.wire, WireKind::Quantum}};
  validate(c);
  return c;
}

Circuit teleport_circuit() {
  return extract(Shape::leaf(), [](Builder& b, ShapeData arg) {
    return ShapeData::make_leaf(teleport_one(b, std::get<Qubit>(arg.leaf)));
  });
}

Circuit teleport_generic_circuit(const Shape& shape) {
  return extract(shape, [](Builder& b, ShapeData args) {
    return teleport_shaped(b, args);
  });
}

Circuit qft_circuit(std::size_t n) {
  return extract(Shape::list(Shape::leaf(), n),
                 [](Builder& b, ShapeData args) {
                   return list_of(qft_big_endian(b, leaves_of<Qubit>(args)));
                 });
}

Circuit qft_inverse_circuit(std::size_t n) {
  Shape shape = Shape::list(Shape::leaf(), n);
  return extract(shape, reverse_endo(qft_program(), shape));
}

namespace {

Circuit qft_add_impl(std::size_t n, bool boxed) {
  Shape reg = Shape::list(Shape::leaf(), n);
  return extract(
      Shape::tuple({reg, reg}), [boxed](Builder& b, ShapeData args) {
        ShapeData a = args.children[0];
        ShapeData bs = args.children[1];
        auto aq = leaves_of<Qubit>(a);
        std::vector<std::pair<WireId, std::string>> labels;
        for (std::size_t i = 0; i < aq.size(); ++i)
          labels.emplace_back(aq[i].wire, "a[" + std::to_string(i) + "]");
        auto bq = leaves_of<Qubit>(bs);
        for (std::size_t i = 0; i < bq.size(); ++i)
          labels.emplace_back(bq[i].wire, "b[" + std::to_string(i) + "]");
        if (!labels.empty()) b.label(labels);
        // The registers are little-endian; the transform/adder recursions
        // below work most-significant-first, so reorder the references
        // (no gates involved) before entering the kernel.
        std::vector<Qubit> a_be(aq.rbegin(), aq.rend());
        std::vector<Qubit> b_be(bq.rbegin(), bq.rend());
        ShapeData b_be_list = list_of(b_be);
        with_computed(
            b,
            [&](Builder& bd) -> ShapeData {
              if (boxed) return box(bd, "QFT", qft_program(), b_be_list);
              return list_of(qft_big_endian(bd, b_be));
            },
            [&](Builder& bd, ShapeData transformed) -> ShapeData {
              auto bp = leaves_of<Qubit>(transformed);
              std::reverse(bp.begin(), bp.end());
              qft_adder(bd, a_be, bp);
              return ShapeData::make_tuple({});
            });
        if (!labels.empty()) b.label(labels);
        return ShapeData::make_tuple({a, bs});
      });
}

}  // namespace

Circuit qft_add_circuit(std::size_t n) { return qft_add_impl(n, false); }
Circuit qft_add_boxed_circuit(std::size_t n) { return qft_add_impl(n, true); }

// ---------------------------------------------------------------------------
// The one-bit full adder

ClassicalFunction adder_function() {
  using E = BoolExpr;
  E a = E::variable(0), b = E::variable(1), cin = E::variable(2);
  E s = E::exclusive(E::exclusive(a, b), cin);
  E cout = E::disj(E::conj(a, b), E::disj(E::conj(a, cin), E::conj(b, cin)));
  return ClassicalFunction{3, {s, cout}};
}

Circuit adder_circ() {
  Shape in = Shape::tuple({Shape::leaf(), Shape::leaf(), Shape::leaf()});
  return extract(in, compile_classical(adder_function()));
}

Circuit adder_reversible_circuit() {
  Shape in3 = Shape::tuple({Shape::leaf(), Shape::leaf(), Shape::leaf()});
  Shape out2 = Shape::tuple({Shape::leaf(), Shape::leaf()});
  return extract(Shape::tuple({in3, out2}),
                 classical_to_reversible(compile_classical(adder_function())));
}

Circuit adder_binary_circuit() { return decompose_binary(adder_circ()); }

}  // namespace quill::examples
