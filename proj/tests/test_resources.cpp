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
#include "quill/examples.hpp"
#include "quill/resources.hpp"

using namespace quill;

TEST_CASE("gate classes") {
  CHECK(gate_class(make_gate(Named{NamedGate::X}, {2}, {{0, true}, {1, true}})) ==
        "X, 2 controls");
  CHECK(gate_class(make_gate(Rot{3}, {1}, {{0, true}})) == "R(3), 1 control");
  CHECK(gate_class(make_gate(QInit{true}, {0})) == "init");
  CHECK(gate_class(make_gate(QTerm{false}, {0})) == "term");
  CHECK(gate_class(make_gate(Meas{}, {0})) == "measure");
  CHECK(gate_class(make_gate(CDiscard{}, {0})) == "discard");
  CHECK(gate_class(make_gate(CommentGate{"note", {}})).empty());
}

TEST_CASE("counting the plus-minus preparation") {
  ResourceReport r = count(examples::plus_minus_circuit(false));
  CHECK(r.gate_counts.at("init") == 1);
  CHECK(r.gate_counts.at("H") == 1);
  CHECK(r.total == 2);
  CHECK(r.max_width == 1);
  CHECK(r.ancillas == 1);
  CHECK(r.measurements == 0);
}

TEST_CASE("Fourier transform gate counts follow the closed form") {
  for (std::size_t n = 1; n <= 8; ++n) {
    ResourceReport r = count(examples::qft_circuit(n));
    BigInt hadamards = r.gate_counts.count("H") ? r.gate_counts.at("H") : 0;
    CHECK(hadamards == BigInt(n));
    BigInt rotations = 0;
    for (const auto& [cls, k] : r.gate_counts)
      if (cls.rfind("R(", 0) == 0) rotations += k;
    CHECK(rotations == BigInt(n * (n - 1) / 2));
  }
}

TEST_CASE("comments are free") {
  Circuit c = examples::qft_add_circuit(2);
  std::size_t comments = 0;
  for (const Gate& g : c.gates) comments += g.is<CommentGate>();
  REQUIRE(comments > 0);
  ResourceReport r = count(c);
  CHECK(r.total == BigInt(c.gates.size() - comments));
}

TEST_CASE("teleport counts measurements and width") {
  ResourceReport r = count(examples::teleport_circuit());
  CHECK(r.measurements == 2);
  CHECK(r.max_width == 3);
}

TEST_CASE("boxed counting matches flattened counting") {
  for (std::size_t n = 1; n <= 6; ++n) {
    Circuit boxed = examples::qft_add_boxed_circuit(n);
    ResourceReport hier = count(boxed);
    ResourceReport flat = count(flatten(boxed));
    CHECK(hier.total == flat.total);
    CHECK(hier.gate_counts == flat.gate_counts);
    CHECK(hier.ancillas == flat.ancillas);
  }
}

TEST_CASE("repetition factors multiply without flattening") {
  Circuit body;
  body.inputs = {{0, WireKind::Quantum}};
  body.gates = {make_gate(Named{NamedGate::H}, {0}),
                make_gate(Named{NamedGate::X}, {0})};
  body.outputs = body.inputs;

  Circuit c;
  c.inputs = {{0, WireKind::Quantum}};
  c.gates = {make_gate(SubCall{"b", {0}, {1}, 1'000'000'000ULL})};
  c.outputs = {{1, WireKind::Quantum}};
  c.subroutines.emplace("b", body);
  ResourceReport r = count(c);
  CHECK(r.total == BigInt(2'000'000'000ULL));
  CHECK(r.gate_counts.at("H") == BigInt(1'000'000'000ULL));
}

TEST_CASE("flatten inlines calls and respects the depth limit") {
  Circuit c = examples::qft_add_boxed_circuit(2);
  Circuit flat = flatten(c);
  CHECK(flat.subroutines.empty());
  for (const Gate& g : flat.gates) CHECK(!g.is<SubCall>());
  CHECK_NOTHROW(validate(flat));

  Circuit depth0 = flatten(c, 0);
  std::size_t calls = 0;
  for (const Gate& g : depth0.gates) calls += g.is<SubCall>();
  CHECK(calls == 2);
}

TEST_CASE("flatten refuses to materialize past the size bound") {
  Circuit body;
  body.inputs = {{0, WireKind::Quantum}};
  body.gates = {make_gate(Named{NamedGate::X}, {0})};
  body.outputs = body.inputs;
  Circuit c;
  c.inputs = {{0, WireKind::Quantum}};
  c.gates = {make_gate(SubCall{"b", {0}, {1}, 1ULL << 40})};
  c.outputs = {{1, WireKind::Quantum}};
  c.subroutines.emplace("b", body);
  CHECK_THROWS_AS((void)flatten(c), SizeBound);
}

TEST_CASE("the stream counter matches whole-circuit counting") {
  Circuit c = examples::teleport_circuit();
  StreamCounter sc(c.inputs.size());
  for (const Gate& g : c.gates) sc.feed(g);
  ResourceReport whole = count(c);
  CHECK(sc.report().total == whole.total);
  CHECK(sc.report().gate_counts == whole.gate_counts);
  CHECK(sc.report().max_width == whole.max_width);
  CHECK(sc.report().measurements == whole.measurements);
}
