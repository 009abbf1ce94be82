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
#include <memory>
#include <string>
#include <vector>

#include "quill/builder.hpp"
#include "quill/ir.hpp"
#include "quill/shape.hpp"

namespace quill {

struct NotEndomorphic : Error {
  using Error::Error;
};
struct NameCollision : Error {
  using Error::Error;
};

/// Reverses a circuit-producing endomorphic function: the returned program
/// emits the gate-reversed, gate-inverted circuit of `f` on the given shape.
/// Throws NotEndomorphic if f's output shape differs from its input shape and
/// NotInvertible if f's circuit contains Measure/CDiscard/CInit.
Program reverse_endo(const Program& f, const Shape& shape);

/// Emits `compute`'s gates, runs `body` on its result, then replays the
/// recorded compute segment inverted. Nesting is allowed.
ShapeData with_computed(Builder& b,
                        const std::function<ShapeData(Builder&)>& compute,
                        const std::function<ShapeData(Builder&, ShapeData)>& body);

/// Boxes `f` as a named subroutine: the body is generated once into the
/// shared namespace and each call emits a single SubCall gate. Re-boxing the
/// same name requires a structurally identical body (else NameCollision).
ShapeData box(Builder& b, const std::string& name, const Program& f,
              const ShapeData& args, std::uint64_t repetitions = 1,
              bool inverted = false);

// ---------------------------------------------------------------------------
// Boolean expressions and classical-function lowering

struct BoolExpr {
  enum class Op { Var, Const, Not, And, Or, Xor };
  Op op = Op::Const;
  std::uint32_t var = 0;    // for Var
  bool value = false;       // for Const
  std::vector<BoolExpr> kids;

  bool operator==(const BoolExpr&) const = default;

  static BoolExpr variable(std::uint32_t i) { return {Op::Var, i, false, {}}; }
  static BoolExpr constant(bool v) { return {Op::Const, 0, v, {}}; }
  static BoolExpr negate(BoolExpr e) { return {Op::Not, 0, false, {std::move(e)}}; }
  static BoolExpr conj(BoolExpr a, BoolExpr b) {
    return {Op::And, 0, false, {std::move(a), std::move(b)}};
  }
  static BoolExpr disj(BoolExpr a, BoolExpr b) {
    return {Op::Or, 0, false, {std::move(a), std::move(b)}};
  }
  static BoolExpr exclusive(BoolExpr a, BoolExpr b) {
    return {Op::Xor, 0, false, {std::move(a), std::move(b)}};
  }

  bool eval(const std::vector<bool>& inputs) const;
  /// Number of inputs the expression needs: one past the highest variable.
  std::uint32_t arity() const;
};

/// Parses `x0 ^ x1 & !x2 | (x0 & x1)`; precedence ! > & > ^ > |.
BoolExpr parse_boolexpr(const std::string& text);
std::string boolexpr_to_string(const BoolExpr& e);

struct ClassicalFunction {
  std::uint32_t arity_in = 0;
  std::vector<BoolExpr> outputs;

  std::vector<bool> eval(const std::vector<bool>& inputs) const;
};

/// Structural lowering of a classical function to a circuit program over
/// qubits: Xor -> CNOTs, And -> Toffoli, Or via De Morgan, Not -> CNOT onto
/// a |1> ancilla, Const -> QInit. One fresh ancilla per non-trivial
/// subexpression; intermediates stay live (the result is not self-contained
/// reversible). Input shape is an arity_in-tuple; output an outputs-tuple.
Program compile_classical(const ClassicalFunction& f);

/// Bennett construction: given g : a -> b built from reversible primitives,
/// produces f' : (a,b) -> (a,b) with semantics (x,y) |-> (x, y xor g(x)),
/// un-computing and terminating all of g's ancillas.
Program classical_to_reversible(const Program& g);

}  // namespace quill
