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

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace quill {

/// Identifier of a circuit wire. Wire ids are allocated monotonically within
/// one circuit and are never reused after the wire is terminated.
using WireId = std::uint32_t;

enum class WireKind : std::uint8_t { Quantum, Classical };

/// A control decorating a gate. Positive controls fire on 1/|1>, negative on
/// 0/|0>. Classical wires may control quantum gates, but not vice versa.
struct Control {
  WireId wire = 0;
  bool positive = true;

  bool operator==(const Control&) const = default;
};

enum class NamedGate : std::uint8_t { H, X, Y, Z, S, T };

const char* named_gate_name(NamedGate g);
std::optional<NamedGate> named_gate_from(const std::string& name);

// Gate kind payloads.
struct QInit {
  bool value = false;
  bool operator==(const QInit&) const = default;
};
struct QTerm {
  // Assertive termination: the simulators check the wire is in this state.
  bool assertion = false;
  bool operator==(const QTerm&) const = default;
};
struct CInit {
  bool value = false;
  bool operator==(const CInit&) const = default;
};
struct CDiscard {
  bool operator==(const CDiscard&) const = default;
};
struct Named {
  NamedGate name = NamedGate::H;
  bool operator==(const Named&) const = default;
};
/// Phase gate diag(1, exp(2*pi*i / 2^power)); `inverted` on the owning Gate
/// conjugates the phase.
struct Rot {
  std::uint32_t power = 1;
  bool operator==(const Rot&) const = default;
};
struct Meas {
  bool operator==(const Meas&) const = default;
};
/// A comment with optional wire labels. Semantically the identity.
struct CommentGate {
  std::string text;
  std::vector<std::pair<WireId, std::string>> labels;
  bool operator==(const CommentGate&) const = default;
};
/// Call to a named boxed subcircuit. `ins` are consumed, `outs` become live.
/// repetitions > 1 requires the callee to be strictly endomorphic.
struct SubCall {
  std::string name;
  std::vector<WireId> ins;
  std::vector<WireId> outs;
  std::uint64_t repetitions = 1;
  bool operator==(const SubCall&) const = default;
};

using GateKind = std::variant<QInit, QTerm, CInit, CDiscard, Named, Rot, Meas,
                              CommentGate, SubCall>;

struct Gate {
  GateKind kind;
  std::vector<WireId> operands;  // one wire; empty for Comment and SubCall
  std::vector<Control> controls;
  bool inverted = false;

  bool operator==(const Gate&) const = default;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&kind);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(kind);
  }
};

Gate make_gate(GateKind kind, std::vector<WireId> operands = {},
               std::vector<Control> controls = {}, bool inverted = false);

struct Circuit {
  std::vector<std::pair<WireId, WireKind>> inputs;
  std::vector<Gate> gates;
  std::vector<std::pair<WireId, WireKind>> outputs;
  // Flat namespace of boxed subcircuits; bodies may call each other but not
  // recursively. Only meaningful on the top-level circuit.
  std::map<std::string, Circuit> subroutines;

  bool operator==(const Circuit&) const = default;
};

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Rule {
  DeadWire,
  DuplicateWire,
  KindMismatch,
  QuantumControlOnClassicalOp,
  UnknownSubroutine,
  ArityMismatch,
  SubroutineCycle,
};

const char* rule_name(Rule r);

struct ValidityError : Error {
  Rule rule;
  // Index of the first offending gate; gates.size() marks the output check.
  std::size_t gate_index;
  ValidityError(Rule r, std::size_t index, const std::string& msg);
};

struct NotInvertible : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Operations

/// Checks all Circuit invariants: wire liveness and kinds, control rules,
/// subroutine resolution and acyclicity, and the output list matching the
/// live set. Throws ValidityError on the first violation.
void validate(const Circuit& c);

/// Non-throwing variant of validate.
std::optional<ValidityError> check(const Circuit& c);

/// Inverse of a reversible gate: QInit(b) <-> QTerm(b), H/X/Y/Z self-inverse,
/// S/T/Rot/SubCall toggle `inverted` (SubCall also swaps ins/outs), Comment
/// unchanged. Throws NotInvertible for Measure, CDiscard, CInit.
Gate gate_inverse(const Gate& g);

/// Whole-circuit reversal: inputs and outputs swap, gates run backwards and
/// inverted. Subroutine bodies are kept (inverted calls reference them with
/// the inversion flag). Throws NotInvertible if any gate is irreversible.
Circuit reverse_circuit(const Circuit& c);

/// Number of distinct wires a gate touches (operands + controls + call i/o).
std::size_t wires_touched(const Gate& g);

}  // namespace quill
