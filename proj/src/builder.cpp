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

#include "quill/builder.hpp"

#include <algorithm>
#include <set>

namespace quill {

Builder::Builder(Sink sink)
    : sink_(std::move(sink)),
      boxes_(std::make_shared<std::map<std::string, BoxedSub>>()) {}

Builder Builder::child_of(Builder& parent, Sink sink) {
  Builder b(std::move(sink));
  b.boxes_ = parent.boxes_;
  return b;
}

WireKind Builder::kind_of(WireId w) const {
  auto it = live_.find(w);
  if (it == live_.end())
    throw EmissionError("wire " + std::to_string(w) + " is not live");
  return it->second;
}

WireKind Builder::require_live(WireId w, const char* what) const {
  auto it = live_.find(w);
  if (it == live_.end())
    throw EmissionError(std::string("DeadHandle: ") + what + " uses dead wire " +
                        std::to_string(w));
  return it->second;
}

std::vector<std::pair<WireId, WireKind>> Builder::live_wires() const {
  std::vector<std::pair<WireId, WireKind>> ws(live_.begin(), live_.end());
  std::sort(ws.begin(), ws.end());
  return ws;
}

WireId Builder::allocate(WireKind k) {
  WireId w = next_++;
  live_.emplace(w, k);
  return w;
}

void Builder::check_gate(const Gate& g) {
  std::set<WireId> seen;
  auto distinct = [&](WireId w) {
    if (!seen.insert(w).second)
      throw EmissionError("wire " + std::to_string(w) +
                          " appears twice in one gate (SelfControl)");
  };
  for (WireId w : g.operands) {
    require_live(w, "operand");
    distinct(w);
  }
  for (const auto& c : g.controls) {
    require_live(c.wire, "control");
    distinct(c.wire);
  }
  if (const auto* call = g.as<SubCall>())
    for (WireId w : call->ins) {
      require_live(w, "call input");
      distinct(w);
    }
  if (!g.controls.empty() && !(g.is<Named>() || g.is<Rot>()))
    throw EmissionError("only named and rotation gates may carry controls");
}

void Builder::emit(const Gate& g) {
  check_gate(g);
  // Liveness transition mirrors validate's rules.
  if (const auto* x = g.as<QTerm>()) {
    (void)x;
    if (kind_of(g.operands[0]) != WireKind::Quantum)
      throw EmissionError("QTerm on classical wire");
    live_.erase(g.operands[0]);
  } else if (g.is<CDiscard>()) {
    if (kind_of(g.operands[0]) != WireKind::Classical)
      throw EmissionError("CDiscard on quantum wire");
    live_.erase(g.operands[0]);
  } else if (g.is<Meas>()) {
    if (kind_of(g.operands[0]) != WireKind::Quantum)
      throw EmissionError("measurement of a classical wire");
    live_[g.operands[0]] = WireKind::Classical;
  } else if (g.is<Named>() || g.is<Rot>()) {
    if (kind_of(g.operands[0]) != WireKind::Quantum)
      throw EmissionError("quantum gate on classical wire");
  } else if (const auto* call = g.as<SubCall>()) {
    auto it = boxes_->find(call->name);
    if (it == boxes_->end())
      throw EmissionError("unknown subroutine " + call->name);
    const auto& body_outs =
        g.inverted ? it->second.body.inputs : it->second.body.outputs;
    if (call->outs.size() != body_outs.size())
      throw EmissionError("call arity differs from subroutine " + call->name);
    for (WireId w : call->ins) live_.erase(w);
    for (std::size_t j = 0; j < call->outs.size(); ++j) {
      live_[call->outs[j]] = body_outs[j].second;
      next_ = std::max(next_, call->outs[j] + 1);
    }
  }
  for (auto& rec : recorders_) rec.push_back(g);
  sink_(g);
}

Qubit Builder::qinit(bool value) {
  WireId w = next_++;
  Gate g = make_gate(QInit{value}, {w});
  live_.emplace(w, WireKind::Quantum);
  for (auto& rec : recorders_) rec.push_back(g);
  sink_(g);
  return Qubit{w};
}

Bit Builder::cinit(bool value) {
  WireId w = next_++;
  Gate g = make_gate(CInit{value}, {w});
  live_.emplace(w, WireKind::Classical);
  for (auto& rec : recorders_) rec.push_back(g);
  sink_(g);
  return Bit{w};
}

void Builder::qterm(Qubit q, bool assertion) {
  require_live(q.wire, "qterm");
  emit(make_gate(QTerm{assertion}, {q.wire}));
}

void Builder::cdiscard(Bit b) {
  require_live(b.wire, "cdiscard");
  emit(make_gate(CDiscard{}, {b.wire}));
}

Bit Builder::measure(Qubit q) {
  require_live(q.wire, "measure");
  emit(make_gate(Meas{}, {q.wire}));
  return Bit{q.wire};
}

Qubit Builder::apply_named(NamedGate name, Qubit q,
                           const std::vector<Control>& ctrls, bool inverted) {
  emit(make_gate(Named{name}, {q.wire}, ctrls, inverted));
  return q;
}

Qubit Builder::apply_rot(std::uint32_t power, Qubit q,
                         const std::vector<Control>& ctrls, bool inverted) {
  if (power < 1) throw EmissionError("rotation power must be >= 1");
  emit(make_gate(Rot{power}, {q.wire}, ctrls, inverted));
  return q;
}

void Builder::comment_with_label(
    const std::string& text,
    const std::vector<std::pair<WireId, std::string>>& labels) {
  for (const auto& [w, l] : labels) require_live(w, "label");
  emit(make_gate(CommentGate{text, labels}));
}

void Builder::push_recorder() { recorders_.emplace_back(); }

std::vector<Gate> Builder::pop_recorder() {
  auto rec = std::move(recorders_.back());
  recorders_.pop_back();
  return rec;
}

namespace {

ExtractSignature run_program(Builder& b, const Shape& input_shape,
                             const Program& program) {
  std::vector<Qubit> in_wires;
  for (std::size_t i = 0; i < input_shape.leaf_count(); ++i)
    in_wires.push_back(Qubit{b.allocate(WireKind::Quantum)});
  ShapeData args = from_qubits(input_shape, in_wires);
  ShapeData result = program(b, args);

  ExtractSignature sig;
  for (Qubit q : in_wires) sig.inputs.emplace_back(q.wire, WireKind::Quantum);
  std::function<void(const ShapeData&)> collect = [&](const ShapeData& d) {
    if (d.is_leaf()) {
      WireId w;
      WireKind k;
      if (const auto* q = std::get_if<Qubit>(&d.leaf)) {
        w = q->wire;
        k = WireKind::Quantum;
      } else if (const auto* bit = std::get_if<Bit>(&d.leaf)) {
        w = bit->wire;
        k = WireKind::Classical;
      } else {
        throw EmissionError("program returned a boolean, not a wire handle");
      }
      if (!b.is_live(w) || b.kind_of(w) != k)
        throw EmissionError("program returned a dead or mistyped handle");
      sig.outputs.emplace_back(w, k);
    } else {
      for (const auto& c : d.children) collect(c);
    }
  };
  collect(result);
  sig.out_shape = shape_of(result);
  std::set<WireId> outs;
  for (auto& [w, k] : sig.outputs)
    if (!outs.insert(w).second)
      throw EmissionError("program returned the same wire twice");
  // Wires the program left live without returning (e.g. the entangled
  // intermediates of a compiled classical function) trail the declared
  // outputs in ascending id order.
  for (auto& [w, k] : b.live_wires())
    if (!outs.count(w)) sig.outputs.emplace_back(w, k);
  return sig;
}

}  // namespace

Circuit extract(const Shape& input_shape, const Program& program) {
  Circuit c;
  Builder b([&c](const Gate& g) { c.gates.push_back(g); });
  ExtractSignature sig = run_program(b, input_shape, program);
  c.inputs = std::move(sig.inputs);
  c.outputs = std::move(sig.outputs);
  for (auto& [name, sub] : b.boxes()) c.subroutines.emplace(name, sub.body);
  validate(c);
  return c;
}

ExtractSignature extract_streaming(const Shape& input_shape,
                                   const Program& program, Builder::Sink sink) {
  Builder b(std::move(sink));
  return run_program(b, input_shape, program);
}

Circuit extract_shared(Builder& parent, const Shape& input_shape,
                       const Program& program, Shape* out_shape) {
  Circuit c;
  Builder b =
      Builder::child_of(parent, [&c](const Gate& g) { c.gates.push_back(g); });
  ExtractSignature sig = run_program(b, input_shape, program);
  c.inputs = std::move(sig.inputs);
  c.outputs = std::move(sig.outputs);
  if (out_shape) *out_shape = sig.out_shape;
  return c;
}

std::vector<WireId> append_circuit(Builder& b, const Circuit& c,
                                   const std::vector<WireId>& args) {
  if (args.size() != c.inputs.size())
    throw EmissionError("append_circuit: argument count mismatch");
  std::unordered_map<WireId, WireId> rename;
  for (std::size_t i = 0; i < args.size(); ++i)
    rename[c.inputs[i].first] = args[i];
  auto mapped = [&](WireId w) {
    auto it = rename.find(w);
    if (it == rename.end())
      throw EmissionError("append_circuit: unmapped wire in gate");
    return it->second;
  };
  for (const Gate& g : c.gates) {
    Gate out = g;
    if (out.is<QInit>() || out.is<CInit>()) {
      // Internal wire: allocate its caller-side id first so that emit sees
      // it live (emit does not perform births itself).
      WireKind k = out.is<QInit>() ? WireKind::Quantum : WireKind::Classical;
      WireId fresh = b.allocate(k);
      rename[out.operands[0]] = fresh;
      out.operands[0] = fresh;
      b.emit(out);
      continue;
    }
    for (WireId& w : out.operands) w = mapped(w);
    for (Control& ctl : out.controls) ctl.wire = mapped(ctl.wire);
    if (auto* call = std::get_if<SubCall>(&out.kind)) {
      for (WireId& w : call->ins) w = mapped(w);
      std::vector<WireId> new_outs;
      // Pass-through wires keep their mapping; internal outputs get fresh
      // caller wires (pre-allocated so emit's liveness update is balanced).
      const Circuit* body = nullptr;
      auto bit = b.boxes().find(call->name);
      if (bit == b.boxes().end())
        throw EmissionError("append_circuit: unknown subroutine " + call->name);
      body = &bit->second.body;
      const auto& body_ins = out.inverted ? body->outputs : body->inputs;
      const auto& body_outs = out.inverted ? body->inputs : body->outputs;
      for (std::size_t j = 0; j < call->outs.size(); ++j) {
        WireId body_out = body_outs[j].first;
        auto pos = std::find_if(body_ins.begin(), body_ins.end(), [&](auto& p) {
          return p.first == body_out;
        });
        WireId nw;
        if (pos != body_ins.end()) {
          nw = call->ins[pos - body_ins.begin()];
        } else {
          nw = b.allocate(body_outs[j].second);
        }
        rename[call->outs[j]] = nw;
        new_outs.push_back(nw);
      }
      call->outs = std::move(new_outs);
    }
    if (auto* com = std::get_if<CommentGate>(&out.kind))
      for (auto& [w, l] : com->labels) w = mapped(w);
    b.emit(out);
  }
  std::vector<WireId> outs;
  for (const auto& [w, k] : c.outputs) outs.push_back(mapped(w));
  return outs;
}

}  // namespace quill
