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

#include "quill/ir.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace quill {

const char* named_gate_name(NamedGate g) {
  switch (g) {
    case NamedGate::H: return "H";
    case NamedGate::X: return "X";
    case NamedGate::Y: return "Y";
    case NamedGate::Z: return "Z";
    case NamedGate::S: return "S";
    case NamedGate::T: return "T";
  }
  return "?";
}

std::optional<NamedGate> named_gate_from(const std::string& name) {
  if (name == "H") return NamedGate::H;
  if (name == "X") return NamedGate::X;
  if (name == "Y") return NamedGate::Y;
  if (name == "Z") return NamedGate::Z;
  if (name == "S") return NamedGate::S;
  if (name == "T") return NamedGate::T;
  return std::nullopt;
}

Gate make_gate(GateKind kind, std::vector<WireId> operands,
               std::vector<Control> controls, bool inverted) {
  Gate g;
  g.kind = std::move(kind);
  g.operands = std::move(operands);
  g.controls = std::move(controls);
  g.inverted = inverted;
  return g;
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::DeadWire: return "DeadWire";
    case Rule::DuplicateWire: return "DuplicateWire";
    case Rule::KindMismatch: return "KindMismatch";
    case Rule::QuantumControlOnClassicalOp: return "QuantumControlOnClassicalOp";
    case Rule::UnknownSubroutine: return "UnknownSubroutine";
    case Rule::ArityMismatch: return "ArityMismatch";
    case Rule::SubroutineCycle: return "SubroutineCycle";
  }
  return "?";
}

ValidityError::ValidityError(Rule r, std::size_t index, const std::string& msg)
    : Error(std::string(rule_name(r)) + " at gate " + std::to_string(index) +
            ": " + msg),
      rule(r),
      gate_index(index) {}

std::size_t wires_touched(const Gate& g) {
  std::set<WireId> ws(g.operands.begin(), g.operands.end());
  for (const auto& c : g.controls) ws.insert(c.wire);
  if (const auto* call = g.as<SubCall>()) {
    ws.insert(call->ins.begin(), call->ins.end());
    ws.insert(call->outs.begin(), call->outs.end());
  }
  return ws.size();
}

namespace {

struct LiveChecker {
  const std::map<std::string, Circuit>& subs;
  std::unordered_map<WireId, WireKind> live;
  std::unordered_set<WireId> used;  // every wire id ever seen; no reuse

  [[noreturn]] static void fail(Rule r, std::size_t i, const std::string& m) {
    throw ValidityError(r, i, m);
  }

  WireKind require_live(WireId w, std::size_t i) {
    auto it = live.find(w);
    if (it == live.end())
      fail(Rule::DeadWire, i, "wire " + std::to_string(w) + " is not live");
    return it->second;
  }

  void birth(WireId w, WireKind k, std::size_t i) {
    if (used.count(w))
      fail(Rule::DuplicateWire, i,
           "wire " + std::to_string(w) + " reused after termination");
    used.insert(w);
    live.emplace(w, k);
  }

  void kill(WireId w) { live.erase(w); }

  void check_no_dup(const Gate& g, std::size_t i) {
    std::set<WireId> ws;
    auto add = [&](WireId w) {
      if (!ws.insert(w).second)
        fail(Rule::DuplicateWire, i,
             "wire " + std::to_string(w) + " appears twice in one gate");
    };
    for (WireId w : g.operands) add(w);
    for (const auto& c : g.controls) add(c.wire);
    if (const auto* call = g.as<SubCall>())
      for (WireId w : call->ins) add(w);
  }

  void check_controls_live(const Gate& g, std::size_t i) {
    for (const auto& c : g.controls) require_live(c.wire, i);
  }

  void require_no_controls(const Gate& g, std::size_t i, const char* what) {
    if (g.controls.empty()) return;
    // The specific quantum-control-on-classical-op violation gets its own
    // rule; any other control on a lifecycle/measure/comment gate is a
    // kind error.
    bool classical_op = g.is<CInit>() || g.is<CDiscard>();
    if (classical_op) {
      for (const auto& c : g.controls) {
        if (live.count(c.wire) && live.at(c.wire) == WireKind::Quantum)
          fail(Rule::QuantumControlOnClassicalOp, i,
               std::string("quantum control on ") + what);
      }
    }
    fail(Rule::KindMismatch, i, std::string(what) + " cannot carry controls");
  }

  WireId sole_operand(const Gate& g, std::size_t i) {
    if (g.operands.size() != 1)
      fail(Rule::ArityMismatch, i, "gate takes exactly one operand");
    return g.operands[0];
  }

  void step(const Gate& g, std::size_t i) {
    check_no_dup(g, i);
    if (const auto* init = g.as<QInit>()) {
      require_no_controls(g, i, "QInit");
      birth(sole_operand(g, i), WireKind::Quantum, i);
      (void)init;
    } else if (g.is<QTerm>()) {
      require_no_controls(g, i, "QTerm");
      WireId w = sole_operand(g, i);
      if (require_live(w, i) != WireKind::Quantum)
        fail(Rule::KindMismatch, i, "QTerm on classical wire");
      kill(w);
    } else if (g.is<CInit>()) {
      require_no_controls(g, i, "CInit");
      birth(sole_operand(g, i), WireKind::Classical, i);
    } else if (g.is<CDiscard>()) {
      require_no_controls(g, i, "CDiscard");
      WireId w = sole_operand(g, i);
      if (require_live(w, i) != WireKind::Classical)
        fail(Rule::KindMismatch, i, "CDiscard on quantum wire");
      kill(w);
    } else if (g.is<Named>() || g.is<Rot>()) {
      WireId w = sole_operand(g, i);
      if (require_live(w, i) != WireKind::Quantum)
        fail(Rule::KindMismatch, i, "quantum gate on classical wire");
      if (const auto* rot = g.as<Rot>(); rot && rot->power < 1)
        fail(Rule::KindMismatch, i, "rotation power must be >= 1");
      check_controls_live(g, i);
    } else if (g.is<Meas>()) {
      require_no_controls(g, i, "QMeas");
      WireId w = sole_operand(g, i);
      if (require_live(w, i) != WireKind::Quantum)
        fail(Rule::KindMismatch, i, "measurement of a classical wire");
      live[w] = WireKind::Classical;
    } else if (const auto* com = g.as<CommentGate>()) {
      require_no_controls(g, i, "Comment");
      if (!g.operands.empty())
        fail(Rule::ArityMismatch, i, "comment takes no operands");
      for (const auto& [w, label] : com->labels) require_live(w, i);
    } else if (const auto* call = g.as<SubCall>()) {
      step_call(g, *call, i);
    }
  }

  void step_call(const Gate& g, const SubCall& call, std::size_t i) {
    auto it = subs.find(call.name);
    if (it == subs.end())
      fail(Rule::UnknownSubroutine, i, "no subroutine named " + call.name);
    const Circuit& body = it->second;
    const auto& body_ins = g.inverted ? body.outputs : body.inputs;
    const auto& body_outs = g.inverted ? body.inputs : body.outputs;
    if (call.ins.size() != body_ins.size() ||
        call.outs.size() != body_outs.size())
      fail(Rule::ArityMismatch, i, "call arity differs from subroutine");
    if (call.repetitions < 1)
      fail(Rule::ArityMismatch, i, "repetitions must be >= 1");
    if (call.repetitions > 1 && body.inputs != body.outputs)
      fail(Rule::ArityMismatch, i,
           "repeated call requires a strictly endomorphic subroutine");
    for (std::size_t k = 0; k < call.ins.size(); ++k) {
      if (require_live(call.ins[k], i) != body_ins[k].second)
        fail(Rule::KindMismatch, i, "call operand kind differs from callee");
    }
    check_controls_live(g, i);
    for (const auto& c : g.controls)
      if (std::find(call.ins.begin(), call.ins.end(), c.wire) !=
          call.ins.end())
        fail(Rule::DuplicateWire, i, "control wire also passed to call");
    // Wires passing through the callee keep their caller identity; wires
    // created inside the callee surface as fresh caller ids.
    for (std::size_t j = 0; j < call.outs.size(); ++j) {
      WireId body_out = body_outs[j].first;
      auto in_pos = std::find_if(
          body_ins.begin(), body_ins.end(),
          [&](const auto& p) { return p.first == body_out; });
      if (in_pos != body_ins.end()) {
        WireId expected = call.ins[in_pos - body_ins.begin()];
        if (call.outs[j] != expected)
          fail(Rule::ArityMismatch, i,
               "call output wiring disagrees with callee pass-through");
      }
    }
    std::set<WireId> in_set(call.ins.begin(), call.ins.end());
    for (WireId w : call.ins) kill(w);
    for (std::size_t j = 0; j < call.outs.size(); ++j) {
      WireId o = call.outs[j];
      if (live.count(o))
        fail(Rule::DuplicateWire, i, "call output collides with live wire");
      if (!in_set.count(o) && used.count(o))
        fail(Rule::DuplicateWire, i, "call output reuses a dead wire");
      used.insert(o);
      live.emplace(o, body_outs[j].second);
    }
  }
};

void validate_body(const Circuit& c,
                   const std::map<std::string, Circuit>& subs) {
  LiveChecker lc{subs, {}, {}};
  for (const auto& [w, k] : c.inputs) lc.birth(w, k, 0);
  for (std::size_t i = 0; i < c.gates.size(); ++i) lc.step(c.gates[i], i);
  std::size_t end = c.gates.size();
  std::set<WireId> seen;
  for (const auto& [w, k] : c.outputs) {
    auto it = lc.live.find(w);
    if (it == lc.live.end())
      throw ValidityError(Rule::DeadWire, end, "output wire not live");
    if (it->second != k)
      throw ValidityError(Rule::KindMismatch, end, "output wire kind wrong");
    if (!seen.insert(w).second)
      throw ValidityError(Rule::DuplicateWire, end, "duplicate output wire");
  }
  if (seen.size() != lc.live.size())
    throw ValidityError(Rule::ArityMismatch, end,
                        "live wires left out of the output list");
}

void check_cycles(const std::map<std::string, Circuit>& subs) {
  // 0 = unvisited, 1 = on stack, 2 = done
  std::map<std::string, int> state;
  std::vector<std::string> stack;
  auto visit = [&](auto&& self, const std::string& name) -> void {
    auto it = subs.find(name);
    if (it == subs.end()) return;  // reported later by the body walk
    int& st = state[name];
    if (st == 1)
      throw ValidityError(Rule::SubroutineCycle, 0,
                          "recursive call of subroutine " + name);
    if (st == 2) return;
    st = 1;
    for (const Gate& g : it->second.gates)
      if (const auto* call = g.as<SubCall>()) self(self, call->name);
    st = 2;
  };
  for (const auto& [name, body] : subs) visit(visit, name);
}

}  // namespace

void validate(const Circuit& c) {
  check_cycles(c.subroutines);
  for (const auto& [name, body] : c.subroutines)
    validate_body(body, c.subroutines);
  validate_body(c, c.subroutines);
}

std::optional<ValidityError> check(const Circuit& c) {
  try {
    validate(c);
  } catch (const ValidityError& e) {
    return e;
  }
  return std::nullopt;
}

Gate gate_inverse(const Gate& g) {
  Gate out = g;
  if (const auto* init = g.as<QInit>()) {
    out.kind = QTerm{init->value};
  } else if (const auto* term = g.as<QTerm>()) {
    out.kind = QInit{term->assertion};
  } else if (g.is<CInit>() || g.is<CDiscard>() || g.is<Meas>()) {
    throw NotInvertible("gate has no inverse");
  } else if (const auto* named = g.as<Named>()) {
    switch (named->name) {
      case NamedGate::H:
      case NamedGate::X:
      case NamedGate::Y:
      case NamedGate::Z:
        break;  // self-inverse; the inversion flag stays put
      case NamedGate::S:
      case NamedGate::T:
        out.inverted = !g.inverted;
        break;
    }
  } else if (g.is<Rot>()) {
    out.inverted = !g.inverted;
  } else if (g.is<CommentGate>()) {
    // identity; kept as-is
  } else if (const auto* call = g.as<SubCall>()) {
    SubCall c = *call;
    std::swap(c.ins, c.outs);
    out.kind = std::move(c);
    out.inverted = !g.inverted;
  }
  return out;
}

Circuit reverse_circuit(const Circuit& c) {
  Circuit r;
  r.inputs = c.outputs;
  r.outputs = c.inputs;
  r.subroutines = c.subroutines;
  r.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it)
    r.gates.push_back(gate_inverse(*it));
  return r;
}

}  // namespace quill
