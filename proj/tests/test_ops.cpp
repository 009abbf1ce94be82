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

#include <vector>

#include "doctest.h"
#include "quill/examples.hpp"
#include "quill/ops.hpp"
#include "quill/sim.hpp"

using namespace quill;

namespace {

Program single(NamedGate g) {
  return [g](Builder& b, ShapeData d) {
    return ShapeData::make_leaf(b.apply_named(g, std::get<Qubit>(d.leaf)));
  };
}

}  // namespace

TEST_CASE("reverse_endo inverts the gate sequence") {
  Program f = [](Builder& b, ShapeData d) {
    Qubit q = std::get<Qubit>(d.leaf);
    q = b.apply_named(NamedGate::H, q);
    q = b.apply_named(NamedGate::T, q);
    return ShapeData::make_leaf(q);
  };
  Circuit r = extract(Shape::leaf(), reverse_endo(f, Shape::leaf()));
  REQUIRE(r.gates.size() == 2);
  CHECK(r.gates[0].as<Named>()->name == NamedGate::T);
  CHECK(r.gates[0].inverted);
  CHECK(r.gates[1].as<Named>()->name == NamedGate::H);

  Circuit twice = extract(
      Shape::leaf(), reverse_endo(reverse_endo(f, Shape::leaf()), Shape::leaf()));
  CHECK(twice == extract(Shape::leaf(), f));
}

TEST_CASE("reverse_endo refuses measurement") {
  Program f = [](Builder& b, ShapeData d) {
    Bit m = b.measure(std::get<Qubit>(d.leaf));
    b.cdiscard(m);
    return ShapeData::make_leaf(b.qinit(false));
  };
  CHECK_THROWS_AS((void)extract(Shape::leaf(), reverse_endo(f, Shape::leaf())),
                  NotInvertible);
}

TEST_CASE("reverse_endo refuses a shape-changing program") {
  Program f = [](Builder& b, ShapeData d) {
    return ShapeData::make_tuple({d, ShapeData::make_leaf(b.qinit(false))});
  };
  CHECK_THROWS_AS((void)extract(Shape::leaf(), reverse_endo(f, Shape::leaf())),
                  NotEndomorphic);
}

TEST_CASE("with_computed replays the compute segment inverted") {
  Circuit c = extract(Shape::leaf(), [](Builder& b, ShapeData d) {
    Qubit q = std::get<Qubit>(d.leaf);
    return with_computed(
        b,
        [&](Builder& bb) {
          Qubit a = bb.qinit(false);
          a = bb.apply_named(NamedGate::X, a, {bb.ctrl(q)});
          return ShapeData::make_leaf(a);
        },
        [&](Builder& bb, ShapeData anc) {
          Qubit a = std::get<Qubit>(anc.leaf);
          q = bb.apply_named(NamedGate::Z, q, {bb.ctrl(a)});
          return ShapeData::make_leaf(q);
        });
  });
  // QInit; CX; CZ; CX; QTerm -- the ancilla is traced out by the uncompute.
  REQUIRE(c.gates.size() == 5);
  CHECK(c.gates[0].is<QInit>());
  CHECK(c.gates[3] == gate_inverse(c.gates[1]));
  CHECK(c.gates[4].is<QTerm>());
  CHECK(c.outputs.size() == 1);
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("with_computed nests") {
  Circuit c = extract(Shape::leaf(), [](Builder& b, ShapeData d) {
    Qubit q = std::get<Qubit>(d.leaf);
    return with_computed(
        b,
        [&](Builder& bb) {
          Qubit a = bb.qinit(false);
          return ShapeData::make_leaf(bb.apply_named(NamedGate::X, a, {bb.ctrl(q)}));
        },
        [&](Builder& bb, ShapeData anc) {
          Qubit a = std::get<Qubit>(anc.leaf);
          return with_computed(
              bb,
              [&](Builder& b3) {
                Qubit a2 = b3.qinit(false);
                return ShapeData::make_leaf(
                    b3.apply_named(NamedGate::X, a2, {b3.ctrl(a)}));
              },
              [&](Builder& b3, ShapeData anc2) {
                q = b3.apply_named(NamedGate::Z, q,
                                   {b3.ctrl(std::get<Qubit>(anc2.leaf))});
                return ShapeData::make_leaf(q);
              });
        });
  });
  CHECK_NOTHROW(validate(c));
  CHECK(c.outputs.size() == 1);
  // Both ancillas are gone again.
  std::size_t inits = 0, terms = 0;
  for (const Gate& g : c.gates) {
    inits += g.is<QInit>();
    terms += g.is<QTerm>();
  }
  CHECK(inits == 2);
  CHECK(terms == 2);
}

TEST_CASE("box emits one call per use and a single shared body") {
  Circuit c = extract(Shape::leaf(), [](Builder& b, ShapeData d) {
    ShapeData x = box(b, "h", single(NamedGate::H), d);
    x = box(b, "h", single(NamedGate::H), x);
    return x;
  });
  std::size_t calls = 0;
  for (const Gate& g : c.gates)
    if (g.is<SubCall>()) ++calls;
  CHECK(calls == 2);
  CHECK(c.subroutines.size() == 1);
  CHECK(c.subroutines.count("h") == 1);
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("re-boxing a name with a different body collides") {
  auto build = [] {
    return extract(Shape::leaf(), [](Builder& b, ShapeData d) {
      ShapeData x = box(b, "g", single(NamedGate::H), d);
      return box(b, "g", single(NamedGate::X), x);
    });
  };
  CHECK_THROWS_AS((void)build(), NameCollision);
}

TEST_CASE("an inverted box call undoes the forward call") {
  Circuit c = extract(Shape::leaf(), [](Builder& b, ShapeData d) {
    ShapeData x = box(b, "t", single(NamedGate::T), d);
    return box(b, "t", single(NamedGate::T), x, 1, /*inverted=*/true);
  });
  Unitary u = circuit_unitary(c);
  Unitary eye{2, 2, {1, 0, 0, 1}};
  CHECK(unitary_distance(u, eye) < 1e-12);
}

TEST_CASE("boolean expression parser") {
  BoolExpr e = parse_boolexpr("x0 ^ x1 & !x2 | (x0 & x1)");
  // Precedence: ! binds tightest, then &, ^, |.
  CHECK(e.op == BoolExpr::Op::Or);
  CHECK(e.kids[0].op == BoolExpr::Op::Xor);
  CHECK(parse_boolexpr(boolexpr_to_string(e)) == e);
  CHECK(e.arity() == 3);

  CHECK(parse_boolexpr("1").eval({}) == true);
  CHECK(parse_boolexpr("!0").eval({}) == true);
  CHECK_THROWS((void)parse_boolexpr("x0 &"));
  CHECK_THROWS((void)parse_boolexpr("y1"));

  for (int bits = 0; bits < 8; ++bits) {
    std::vector<bool> in = {(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0};
    bool expected = ((in[0] != (in[1] && !in[2])) || (in[0] && in[1]));
    CHECK(e.eval(in) == expected);
  }
}

TEST_CASE("compile_classical agrees with direct evaluation") {
  ClassicalFunction f;
  f.arity_in = 3;
  f.outputs = {parse_boolexpr("x0 ^ x1 ^ x2"),
               parse_boolexpr("x0 & x1 | x2 & !x0")};
  Circuit c = extract(Shape::list(Shape::leaf(), 3), compile_classical(f));
  for (int bits = 0; bits < 8; ++bits) {
    std::vector<bool> in = {(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0};
    std::vector<bool> expected = f.eval(in);
    std::vector<bool> got = sim_classical(c, in);
    REQUIRE(got.size() >= in.size() + expected.size());
    // The declared outputs come first; the untouched inputs and the live
    // intermediates trail them.
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(got[i] == expected[i]);
    for (std::size_t i = 0; i < in.size(); ++i)
      CHECK(got[expected.size() + i] == in[i]);
  }
}

TEST_CASE("compile_classical handles the trivial expressions") {
  ClassicalFunction f;
  f.arity_in = 1;
  f.outputs = {BoolExpr::constant(true), BoolExpr::variable(0)};
  Circuit c = extract(Shape::list(Shape::leaf(), 1), compile_classical(f));
  // First output is the constant, second is the passed-through variable.
  CHECK(sim_classical(c, {false})[0] == true);
  CHECK(sim_classical(c, {true})[1] == true);
  CHECK(sim_classical(c, {false})[1] == false);
}

TEST_CASE("classical_to_reversible computes x, y xor g(x) and cleans up") {
  Program g = compile_classical(examples::adder_function());
  Shape in3 = Shape::tuple({Shape::leaf(), Shape::leaf(), Shape::leaf()});
  Shape out2 = Shape::tuple({Shape::leaf(), Shape::leaf()});
  Program rev = classical_to_reversible(g);
  Circuit c = extract(Shape::tuple({in3, out2}), rev);
  CHECK(c.inputs.size() == 5);
  CHECK(c.outputs.size() == 5);  // no stray live wires: ancillas uncomputed
  ClassicalFunction f = examples::adder_function();
  for (int bits = 0; bits < 32; ++bits) {
    std::vector<bool> in;
    for (int j = 0; j < 5; ++j) in.push_back((bits >> j) & 1);
    std::vector<bool> gx = f.eval({in[0], in[1], in[2]});
    std::vector<bool> got = sim_classical(c, in);
    REQUIRE(got.size() == 5);
    CHECK(got[0] == in[0]);
    CHECK(got[1] == in[1]);
    CHECK(got[2] == in[2]);
    CHECK(got[3] == (in[3] != gx[0]));
    CHECK(got[4] == (in[4] != gx[1]));
  }
}

TEST_CASE("classical_to_reversible is its own inverse on the target register") {
  Program g = compile_classical(examples::adder_function());
  Shape shape = Shape::tuple(
      {Shape::tuple({Shape::leaf(), Shape::leaf(), Shape::leaf()}),
       Shape::tuple({Shape::leaf(), Shape::leaf()})});
  Program rev = classical_to_reversible(g);
  Program twice = [&](Builder& b, ShapeData d) { return rev(b, rev(b, d)); };
  Circuit c = extract(shape, twice);
  for (int bits = 0; bits < 32; ++bits) {
    std::vector<bool> in;
    for (int j = 0; j < 5; ++j) in.push_back((bits >> j) & 1);
    CHECK(sim_classical(c, in) == in);
  }
}
