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

#include "quill/ops.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>

namespace quill {

namespace {

std::vector<WireId> qubit_wires(const ShapeData& d) {
  std::vector<WireId> ws;
  for (Qubit q : leaves_of<Qubit>(d)) ws.push_back(q.wire);
  return ws;
}

/// Chooses the out-wire list for a SubCall whose `ins` are final: wires that
/// pass through the callee keep the caller id of the matching input; wires
/// born inside the callee surface as fresh caller wires.
std::vector<WireId> compute_call_outs(Builder& b, const SubCall& call,
                                      bool inverted) {
  const BoxedSub& sub = b.boxes().at(call.name);
  const auto& body_ins = inverted ? sub.body.outputs : sub.body.inputs;
  const auto& body_outs = inverted ? sub.body.inputs : sub.body.outputs;
  std::vector<WireId> outs;
  for (std::size_t j = 0; j < body_outs.size(); ++j) {
    WireId body_out = body_outs[j].first;
    auto pos = std::find_if(body_ins.begin(), body_ins.end(),
                            [&](const auto& p) { return p.first == body_out; });
    if (pos != body_ins.end())
      outs.push_back(call.ins[pos - body_ins.begin()]);
    else
      outs.push_back(b.allocate(body_outs[j].second));
  }
  return outs;
}

ShapeData shape_data_from_call(const Shape& shape,
                               const std::vector<WireId>& outs,
                               const std::vector<std::pair<WireId, WireKind>>&
                                   body_outs) {
  std::vector<ShapeData::Payload> leaves;
  for (std::size_t j = 0; j < outs.size(); ++j) {
    if (body_outs[j].second == WireKind::Quantum)
      leaves.emplace_back(Qubit{outs[j]});
    else
      leaves.emplace_back(Bit{outs[j]});
  }
  return unflatten(shape, leaves);
}

}  // namespace

Program reverse_endo(const Program& f, const Shape& shape) {
  return [f, shape](Builder& b, ShapeData args) -> ShapeData {
    if (shape_of(args) != shape)
      throw ShapeMismatch("reverse_endo applied to the wrong shape");
    Shape out_shape;
    Circuit c = extract_shared(b, shape, f, &out_shape);
    if (out_shape != shape)
      throw NotEndomorphic("function's output shape differs from its input");
    Circuit r = reverse_circuit(c);
    std::vector<WireId> outs = append_circuit(b, r, qubit_wires(args));
    std::vector<Qubit> qs;
    for (WireId w : outs) qs.push_back(Qubit{w});
    return from_qubits(shape, qs);
  };
}

ShapeData with_computed(
    Builder& b, const std::function<ShapeData(Builder&)>& compute,
    const std::function<ShapeData(Builder&, ShapeData)>& body) {
  b.push_recorder();
  ShapeData mid = compute(b);
  std::vector<Gate> rec = b.pop_recorder();
  ShapeData out = body(b, mid);

  // Replay the recorded segment inverted. A wire the segment terminated is
  // revived under a fresh id (wire ids are never reused).
  std::unordered_map<WireId, WireId> rename;
  auto mapped = [&](WireId w) {
    auto it = rename.find(w);
    return it == rename.end() ? w : it->second;
  };
  for (auto it = rec.rbegin(); it != rec.rend(); ++it) {
    Gate inv = gate_inverse(*it);
    if (inv.is<QInit>()) {  // forward QTerm
      WireId fresh = b.allocate(WireKind::Quantum);
      rename[inv.operands[0]] = fresh;
      inv.operands[0] = fresh;
      b.emit(inv);
      continue;
    }
    for (WireId& w : inv.operands) w = mapped(w);
    for (Control& c : inv.controls) c.wire = mapped(c.wire);
    if (auto* call = std::get_if<SubCall>(&inv.kind)) {
      for (WireId& w : call->ins) w = mapped(w);
      std::vector<WireId> fwd_outs = call->outs;  // forward call's inputs
      call->outs = compute_call_outs(b, *call, inv.inverted);
      for (std::size_t j = 0; j < call->outs.size(); ++j)
        if (call->outs[j] != fwd_outs[j]) rename[fwd_outs[j]] = call->outs[j];
    }
    if (auto* com = std::get_if<CommentGate>(&inv.kind))
      for (auto& [w, l] : com->labels) w = mapped(w);
    b.emit(inv);
  }
  return out;
}

ShapeData box(Builder& b, const std::string& name, const Program& f,
              const ShapeData& args, std::uint64_t repetitions, bool inverted) {
  Shape arg_shape = shape_of(args);
  Shape gen_shape = arg_shape;  // shape the body is generated for
  auto it = b.boxes().find(name);
  if (it != b.boxes().end() && inverted) gen_shape = it->second.in_shape;

  Shape out_shape;
  Circuit body = extract_shared(b, gen_shape, f, &out_shape);
  if (it == b.boxes().end()) {
    it = b.boxes().emplace(name, BoxedSub{body, gen_shape, out_shape}).first;
  } else if (it->second.body != body) {
    throw NameCollision("subroutine " + name +
                        " already bound to a different body");
  }
  const BoxedSub& sub = it->second;
  const Shape& expected = inverted ? sub.out_shape : sub.in_shape;
  if (arg_shape != expected)
    throw ShapeMismatch("box " + name + " applied to the wrong shape");

  SubCall call;
  call.name = name;
  call.ins = qubit_wires(args);
  call.repetitions = repetitions;
  call.outs = compute_call_outs(b, call, inverted);
  const auto& body_outs = inverted ? sub.body.inputs : sub.body.outputs;
  std::vector<WireId> outs = call.outs;
  b.emit(make_gate(std::move(call), {}, {}, inverted));
  return shape_data_from_call(inverted ? sub.in_shape : sub.out_shape, outs,
                              body_outs);
}

// ---------------------------------------------------------------------------
// BoolExpr

bool BoolExpr::eval(const std::vector<bool>& inputs) const {
  switch (op) {
    case Op::Var:
      if (var >= inputs.size()) throw Error("variable index out of range");
      return inputs[var];
    case Op::Const: return value;
    case Op::Not: return !kids[0].eval(inputs);
    case Op::And: return kids[0].eval(inputs) && kids[1].eval(inputs);
    case Op::Or: return kids[0].eval(inputs) || kids[1].eval(inputs);
    case Op::Xor: return kids[0].eval(inputs) != kids[1].eval(inputs);
  }
  return false;
}

std::uint32_t BoolExpr::arity() const {
  std::uint32_t m = 0;
  if (op == Op::Var) return var + 1;
  for (const auto& k : kids) m = std::max(m, k.arity());
  return m;
}

namespace {

struct ExprCursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw Error("boolean expression: expected " + what + " at offset " +
                std::to_string(pos));
  }

  BoolExpr or_expr() {
    BoolExpr e = xor_expr();
    while (eat('|')) e = BoolExpr::disj(std::move(e), xor_expr());
    return e;
  }
  BoolExpr xor_expr() {
    BoolExpr e = and_expr();
    while (eat('^')) e = BoolExpr::exclusive(std::move(e), and_expr());
    return e;
  }
  BoolExpr and_expr() {
    BoolExpr e = atom();
    while (eat('&')) e = BoolExpr::conj(std::move(e), atom());
    return e;
  }
  BoolExpr atom() {
    skip();
    if (eat('!')) return BoolExpr::negate(atom());
    if (eat('(')) {
      BoolExpr e = or_expr();
      if (!eat(')')) fail("')'");
      return e;
    }
    if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
      ++pos;
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        fail("variable index");
      std::uint32_t v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        v = v * 10 + static_cast<std::uint32_t>(s[pos++] - '0');
      return BoolExpr::variable(v);
    }
    if (eat('0')) return BoolExpr::constant(false);
    if (eat('1')) return BoolExpr::constant(true);
    fail("a variable, constant, '!' or '('");
  }
};

}  // namespace

BoolExpr parse_boolexpr(const std::string& text) {
  ExprCursor cur{text};
  BoolExpr e = cur.or_expr();
  cur.skip();
  if (cur.pos != text.size()) cur.fail("end of input");
  return e;
}

std::string boolexpr_to_string(const BoolExpr& e) {
  switch (e.op) {
    case BoolExpr::Op::Var: return "x" + std::to_string(e.var);
    case BoolExpr::Op::Const: return e.value ? "1" : "0";
    case BoolExpr::Op::Not: return "!(" + boolexpr_to_string(e.kids[0]) + ")";
    case BoolExpr::Op::And:
      return "(" + boolexpr_to_string(e.kids[0]) + " & " +
             boolexpr_to_string(e.kids[1]) + ")";
    case BoolExpr::Op::Or:
      return "(" + boolexpr_to_string(e.kids[0]) + " | " +
             boolexpr_to_string(e.kids[1]) + ")";
    case BoolExpr::Op::Xor:
      return "(" + boolexpr_to_string(e.kids[0]) + " ^ " +
             boolexpr_to_string(e.kids[1]) + ")";
  }
  return "?";
}

std::vector<bool> ClassicalFunction::eval(const std::vector<bool>& inputs) const {
  if (inputs.size() != arity_in) throw Error("wrong input arity");
  std::vector<bool> out;
  for (const auto& e : outputs) out.push_back(e.eval(inputs));
  return out;
}

Program compile_classical(const ClassicalFunction& f) {
  return [f](Builder& b, ShapeData args) -> ShapeData {
    std::vector<Qubit> ins = leaves_of<Qubit>(args);
    if (ins.size() != f.arity_in)
      throw ShapeMismatch("classical function arity differs from input shape");

    auto copy_onto_fresh = [&b](Qubit w) {
      Qubit a = b.qinit(false);
      b.apply_named(NamedGate::X, a, {b.ctrl(w)});
      return a;
    };
    std::function<Qubit(const BoolExpr&)> lower = [&](const BoolExpr& e) {
      switch (e.op) {
        case BoolExpr::Op::Var:
          return ins.at(e.var);
        case BoolExpr::Op::Const:
          return b.qinit(e.value);
        case BoolExpr::Op::Not: {
          Qubit w = lower(e.kids[0]);
          Qubit a = b.qinit(true);
          b.apply_named(NamedGate::X, a, {b.ctrl(w)});
          return a;
        }
        case BoolExpr::Op::Xor: {
          Qubit w1 = lower(e.kids[0]);
          Qubit w2 = lower(e.kids[1]);
          Qubit a = b.qinit(false);
          b.apply_named(NamedGate::X, a, {b.ctrl(w1)});
          b.apply_named(NamedGate::X, a, {b.ctrl(w2)});
          return a;
        }
        case BoolExpr::Op::And: {
          Qubit w1 = lower(e.kids[0]);
          Qubit w2 = lower(e.kids[1]);
          if (w1 == w2) return copy_onto_fresh(w1);  // x & x = x
          Qubit a = b.qinit(false);
          b.apply_named(NamedGate::X, a, {b.ctrl(w1), b.ctrl(w2)});
          return a;
        }
        case BoolExpr::Op::Or: {
          Qubit w1 = lower(e.kids[0]);
          Qubit w2 = lower(e.kids[1]);
          if (w1 == w2) return copy_onto_fresh(w1);  // x | x = x
          // De Morgan; the operand flips are undone because the operand
          // wires may be shared with other subexpressions.
          Qubit a = b.qinit(false);
          b.apply_named(NamedGate::X, w1);
          b.apply_named(NamedGate::X, w2);
          b.apply_named(NamedGate::X, a, {b.ctrl(w1), b.ctrl(w2)});
          b.apply_named(NamedGate::X, w1);
          b.apply_named(NamedGate::X, w2);
          b.apply_named(NamedGate::X, a);
          return a;
        }
      }
      throw Error("unreachable");
    };

    std::vector<ShapeData> outs;
    std::set<WireId> seen;
    for (const BoolExpr& root : f.outputs) {
      Qubit w = lower(root);
      if (!seen.insert(w.wire).second) w = copy_onto_fresh(w);
      seen.insert(w.wire);
      outs.push_back(ShapeData::make_leaf(w));
    }
    return ShapeData::make_tuple(std::move(outs));
  };
}

Program classical_to_reversible(const Program& g) {
  return [g](Builder& b, ShapeData args) -> ShapeData {
    if (args.node != Shape::Node::Tuple || args.children.size() != 2)
      throw ShapeMismatch("expected an (input, target) pair");
    ShapeData a = args.children[0];
    ShapeData target = args.children[1];
    ShapeData new_target = with_computed(
        b, [&](Builder& bb) { return g(bb, a); },
        [&](Builder& bb, ShapeData mid) {
          auto cnot = [](Builder& bl, Qubit src, Qubit dst) {
            bl.apply_named(NamedGate::X, dst, {bl.ctrl(src)});
            return std::make_pair(src, dst);
          };
          auto [m2, t2] = map_binary(bb, cnot, mid, target);
          (void)m2;
          return t2;
        });
    return ShapeData::make_tuple({a, new_target});
  };
}

}  // namespace quill
