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

#include "doctest.h"
#include "quill/ir.hpp"

using namespace quill;

namespace {

Circuit one_qubit(std::vector<Gate> gates) {
  Circuit c;
  c.inputs = {{0, WireKind::Quantum}};
  c.gates = std::move(gates);
  c.outputs = {{0, WireKind::Quantum}};
  return c;
}

}  // namespace

TEST_CASE("empty circuit is valid") {
  Circuit c;
  CHECK_NOTHROW(validate(c));
  CHECK(!check(c));
}

TEST_CASE("gate after termination is a dead-wire error") {
  Circuit c;
  c.inputs = {{0, WireKind::Quantum}};
  c.gates = {make_gate(QTerm{false}, {0}),
             make_gate(Named{NamedGate::H}, {0})};
  auto err = check(c);
  REQUIRE(err);
  CHECK(err->rule == Rule::DeadWire);
  CHECK(err->gate_index == 1);
}

TEST_CASE("quantum control on a classical operation is rejected") {
  Circuit c;
  c.inputs = {{0, WireKind::Quantum}};
  c.gates = {make_gate(CInit{false}, {1}, {{0, true}})};
  c.outputs = {{0, WireKind::Quantum}, {1, WireKind::Classical}};
  auto err = check(c);
  REQUIRE(err);
  CHECK(err->rule == Rule::QuantumControlOnClassicalOp);
}

TEST_CASE("quantum control on a pure classical gate is rejected") {
  Circuit c;
  c.inputs = {{0, WireKind::Quantum}, {1, WireKind::Classical}};
  // X targeting a classical wire is a classical operation; a quantum control
  // on it would violate the one-directional control rule.
  c.gates = {make_gate(CDiscard{}, {1}, {{0, true}})};
  c.outputs = {{0, WireKind::Quantum}};
  auto err = check(c);
  REQUIRE(err);
  CHECK(err->rule == Rule::QuantumControlOnClassicalOp);
}

TEST_CASE("outputs must be exactly the live wires") {
  Circuit c = one_qubit({});
  c.outputs.clear();
  CHECK(check(c));
  Circuit d = one_qubit({});
  d.outputs.push_back({1, WireKind::Quantum});
  CHECK(check(d));
}

TEST_CASE("reinitializing a live wire is a duplicate") {
  Circuit c = one_qubit({make_gate(QInit{false}, {0})});
  auto err = check(c);
  REQUIRE(err);
  CHECK(err->rule == Rule::DuplicateWire);
}

TEST_CASE("measure flips the wire kind in the output list") {
  Circuit c;
  c.inputs = {{0, WireKind::Quantum}};
  c.gates = {make_gate(Meas{}, {0})};
  c.outputs = {{0, WireKind::Classical}};
  CHECK_NOTHROW(validate(c));
  c.outputs = {{0, WireKind::Quantum}};
  auto err = check(c);
  REQUIRE(err);
  CHECK(err->rule == Rule::KindMismatch);
}

TEST_CASE("unknown subroutine and arity mismatches") {
  Circuit c;
  c.inputs = {{0, WireKind::Quantum}};
  c.gates = {make_gate(SubCall{"missing", {0}, {0}, 1})};
  c.outputs = {{0, WireKind::Quantum}};
  auto err = check(c);
  REQUIRE(err);
  CHECK(err->rule == Rule::UnknownSubroutine);

  Circuit body = one_qubit({make_gate(Named{NamedGate::H}, {0})});
  c.subroutines.emplace("missing", body);
  CHECK_NOTHROW(validate(c));

  c.gates = {make_gate(SubCall{"missing", {0}, {0, 1}, 1})};
  err = check(c);
  REQUIRE(err);
  CHECK(err->rule == Rule::ArityMismatch);
}

TEST_CASE("subroutine call cycles are rejected") {
  Circuit a = one_qubit({make_gate(SubCall{"b", {0}, {0}, 1})});
  Circuit b = one_qubit({make_gate(SubCall{"a", {0}, {0}, 1})});
  Circuit c = one_qubit({make_gate(SubCall{"a", {0}, {0}, 1})});
  c.subroutines.emplace("a", a);
  c.subroutines.emplace("b", b);
  auto err = check(c);
  REQUIRE(err);
  CHECK(err->rule == Rule::SubroutineCycle);
}

TEST_CASE("gate_inverse on the reversible kinds") {
  Gate h = make_gate(Named{NamedGate::H}, {0});
  CHECK(gate_inverse(h) == h);

  Gate r = make_gate(Rot{3}, {1});
  Gate ri = gate_inverse(r);
  CHECK(ri.inverted);
  CHECK(ri.as<Rot>()->power == 3);

  Gate qi = make_gate(QInit{true}, {2});
  Gate qt = gate_inverse(qi);
  CHECK(qt.is<QTerm>());
  CHECK(qt.as<QTerm>()->assertion == true);
  CHECK(qt.operands == std::vector<WireId>{2});
  CHECK(gate_inverse(qt) == qi);

  Gate s = make_gate(Named{NamedGate::S}, {0});
  CHECK(gate_inverse(s).inverted);
  CHECK(gate_inverse(gate_inverse(s)) == s);
}

TEST_CASE("gate_inverse is an involution on reversible gates") {
  std::vector<Gate> gs = {
      make_gate(Named{NamedGate::T}, {0}, {{1, false}}),
      make_gate(Rot{5}, {0}, {{1, true}, {2, false}}, true),
      make_gate(QInit{false}, {0}),
      make_gate(QTerm{true}, {0}),
      make_gate(SubCall{"f", {0, 1}, {2, 3}, 4}),
      make_gate(CommentGate{"hello", {{0, "w"}}}),
  };
  for (const Gate& g : gs) CHECK(gate_inverse(gate_inverse(g)) == g);
}

TEST_CASE("irreversible gates refuse inversion") {
  CHECK_THROWS_AS((void)gate_inverse(make_gate(Meas{}, {0})), NotInvertible);
  CHECK_THROWS_AS((void)gate_inverse(make_gate(CDiscard{}, {0})),
                  NotInvertible);
  CHECK_THROWS_AS((void)gate_inverse(make_gate(CInit{true}, {0})),
                  NotInvertible);
}

TEST_CASE("reverse_circuit reverses order and inverts gates") {
  Circuit c;
  c.inputs = {{0, WireKind::Quantum}, {1, WireKind::Quantum}};
  c.gates = {make_gate(Named{NamedGate::H}, {0}),
             make_gate(Rot{2}, {1}, {{0, true}})};
  c.outputs = c.inputs;
  Circuit r = reverse_circuit(c);
  REQUIRE(r.gates.size() == 2);
  CHECK(r.gates[0].as<Rot>()->power == 2);
  CHECK(r.gates[0].inverted);
  CHECK(r.gates[0].controls == std::vector<Control>{{0, true}});
  CHECK(r.gates[1].is<Named>());
  CHECK_NOTHROW(validate(r));
  CHECK(reverse_circuit(r) == c);
}

TEST_CASE("reverse_circuit swaps init and term") {
  Circuit c;
  c.gates = {make_gate(QInit{false}, {0}),
             make_gate(Named{NamedGate::X}, {0}),
             make_gate(QTerm{true}, {0})};
  CHECK_NOTHROW(validate(c));
  Circuit r = reverse_circuit(c);
  CHECK(r.gates[0].is<QInit>());
  CHECK(r.gates[0].as<QInit>()->value == true);
  CHECK(r.gates[2].is<QTerm>());
  CHECK(r.gates[2].as<QTerm>()->assertion == false);
  CHECK_NOTHROW(validate(r));
}

TEST_CASE("wires_touched counts operands, controls and call wires") {
  CHECK(wires_touched(make_gate(Named{NamedGate::X}, {0},
                                {{1, true}, {2, false}})) == 3);
  CHECK(wires_touched(make_gate(SubCall{"f", {0, 1}, {0, 1}, 1})) == 2);
  CHECK(wires_touched(make_gate(CommentGate{})) == 0);
}
