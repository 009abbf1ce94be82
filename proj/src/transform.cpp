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

#include "quill/transform.hpp"

#include <algorithm>
#include <unordered_map>

namespace quill {

namespace {

WireId max_wire_of(const Circuit& c) {
  WireId m = 0;
  auto see = [&m](WireId w) { m = std::max(m, w + 1); };
  for (const auto& [w, k] : c.inputs) see(w);
  for (const auto& [w, k] : c.outputs) see(w);
  for (const Gate& g : c.gates) {
    for (WireId w : g.operands) see(w);
    for (const Control& ct : g.controls) see(ct.wire);
    if (const auto* call = g.as<SubCall>()) {
      for (WireId w : call->ins) see(w);
      for (WireId w : call->outs) see(w);
    }
    if (const auto* com = g.as<CommentGate>())
      for (const auto& [w, l] : com->labels) see(w);
  }
  return m;
}

}  // namespace

void transform_stream(const Gate& g, const Rewrite& rule, WireAlloc& alloc,
                      const std::function<void(const Gate&)>& out) {
  for (const Gate& ng : rule(g, alloc)) out(ng);
}

Circuit transform(const Circuit& c, const Rewrite& rule) {
  Circuit result;
  result.inputs = c.inputs;
  result.outputs = c.outputs;
  {
    WireAlloc alloc(max_wire_of(c));
    for (const Gate& g : c.gates)
      transform_stream(g, rule, alloc,
                       [&](const Gate& ng) { result.gates.push_back(ng); });
  }
  for (const auto& [name, body] : c.subroutines) {
    Circuit nb;
    nb.inputs = body.inputs;
    nb.outputs = body.outputs;
    WireAlloc alloc(max_wire_of(body));
    for (const Gate& g : body.gates)
      transform_stream(g, rule, alloc,
                       [&](const Gate& ng) { nb.gates.push_back(ng); });
    result.subroutines.emplace(name, std::move(nb));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Gate decomposition

namespace {

bool is_toffoli(const Gate& g) {
  const auto* n = g.as<Named>();
  return n && n->name == NamedGate::X && g.controls.size() == 2 &&
         g.controls[0].positive && g.controls[1].positive;
}

// Quantum-control count is what the rules reduce; `g` here carries quantum
// controls only (classical ones are stripped before expansion).
bool terminal(const Gate& g, GateSet set) {
  if (!g.is<Named>() && !g.is<Rot>()) return true;
  std::size_t k = g.controls.size();
  if (k == 0) return true;
  if (k == 1) {
    if (set == GateSet::Toffoli) return true;
    const auto* n = g.as<Named>();
    // Under Binary, singly controlled X and H stay (2 wires); the other
    // single-qubit gates have exact CNOT + phase-gate expansions.
    return n && (n->name == NamedGate::X || n->name == NamedGate::H);
  }
  return set == GateSet::Toffoli && is_toffoli(g);
}

Gate g1(GateKind k, WireId t, bool inv = false) {
  return make_gate(std::move(k), {t}, {}, inv);
}

Gate cnot(WireId c, WireId t) {
  return make_gate(Named{NamedGate::X}, {t}, {{c, true}});
}

// Standard 15-gate H/T/CNOT realization of the Toffoli gate.
std::vector<Gate> toffoli_network(WireId c1, WireId c2, WireId t) {
  const bool dag = true;
  return {
      g1(Named{NamedGate::H}, t),
      cnot(c2, t),
      g1(Named{NamedGate::T}, t, dag),
      cnot(c1, t),
      g1(Named{NamedGate::T}, t),
      cnot(c2, t),
      g1(Named{NamedGate::T}, t, dag),
      cnot(c1, t),
      g1(Named{NamedGate::T}, c2),
      g1(Named{NamedGate::T}, t),
      g1(Named{NamedGate::H}, t),
      cnot(c1, c2),
      g1(Named{NamedGate::T}, c1),
      g1(Named{NamedGate::T}, c2, dag),
      cnot(c1, c2),
  };
}

// Controlled phase gate: C-Rot(m) = Rot(m+1) on both wires, conjugating the
// target copy with CNOTs.
std::vector<Gate> controlled_rot(WireId c, WireId t, std::uint32_t m, bool inv) {
  std::uint32_t h = m + 1;
  return {
      g1(Rot{h}, c, inv),
      g1(Rot{h}, t, inv),
      cnot(c, t),
      g1(Rot{h}, t, !inv),
      cnot(c, t),
  };
}

// C-Y = (I x S) . C-X . (I x S^dag), exactly.
std::vector<Gate> controlled_y(WireId c, WireId t) {
  return {g1(Named{NamedGate::S}, t, true), cnot(c, t),
          g1(Named{NamedGate::S}, t, false)};
}

// One reduction or expansion step; results may need further expansion.
std::vector<Gate> step(const Gate& g, WireAlloc& alloc,
                       [[maybe_unused]] GateSet set) {
  std::size_t k = g.controls.size();
  const auto* n = g.as<Named>();

  // Any negative control that a rule below would consume is conjugated to a
  // positive one with X gates.
  auto conjugate_negatives = [&](std::size_t limit) -> std::vector<Gate> {
    std::vector<Gate> out;
    Gate pos = g;
    std::vector<WireId> flipped;
    for (std::size_t i = 0; i < limit; ++i) {
      if (!pos.controls[i].positive) {
        pos.controls[i].positive = true;
        flipped.push_back(pos.controls[i].wire);
      }
    }
    for (WireId w : flipped) out.push_back(g1(Named{NamedGate::X}, w));
    out.push_back(pos);
    for (WireId w : flipped) out.push_back(g1(Named{NamedGate::X}, w));
    return out;
  };

  if (n && n->name == NamedGate::X && k == 2) {
    if (!g.controls[0].positive || !g.controls[1].positive)
      return conjugate_negatives(2);
    // set == Binary here; a positive Toffoli is terminal under Toffoli.
    return toffoli_network(g.controls[0].wire, g.controls[1].wire,
                           g.operands[0]);
  }

  if (k == 1) {
    // set == Binary; expand the exactly-decomposable controlled gates.
    if (!g.controls[0].positive) return conjugate_negatives(1);
    WireId c = g.controls[0].wire;
    WireId t = g.operands[0];
    if (const auto* rot = g.as<Rot>())
      return controlled_rot(c, t, rot->power, g.inverted);
    switch (n->name) {
      case NamedGate::Z: return controlled_rot(c, t, 1, g.inverted);
      case NamedGate::S: return controlled_rot(c, t, 2, g.inverted);
      case NamedGate::T: return controlled_rot(c, t, 3, g.inverted);
      case NamedGate::Y: return controlled_y(c, t);
      default: break;  // X, H handled by terminal()
    }
    return {g};
  }

  // k >= 2 (and not a plain Toffoli): fold the first two controls into a
  // scoped ancilla via a Toffoli pair.
  if (!g.controls[0].positive || !g.controls[1].positive)
    return conjugate_negatives(2);
  WireId a = alloc.fresh();
  Gate tof = make_gate(Named{NamedGate::X}, {a},
                       {g.controls[0], g.controls[1]});
  Gate inner = g;
  inner.controls.erase(inner.controls.begin(), inner.controls.begin() + 2);
  inner.controls.insert(inner.controls.begin(), Control{a, true});
  return {g1(QInit{false}, a), tof, inner, tof, g1(QTerm{false}, a)};
}

void expand_quantum(const Gate& g, WireAlloc& alloc, GateSet set,
                    const std::vector<Control>& classical,
                    std::vector<Gate>& out) {
  if (terminal(g, set)) {
    Gate final = g;
    // Classical controls ride along on the quantum expansion; lifecycle
    // gates of scoped ancillas stay unconditional (the ancilla is |0> and
    // untouched when the classical condition fails).
    if (!final.is<QInit>() && !final.is<QTerm>())
      final.controls.insert(final.controls.end(), classical.begin(),
                            classical.end());
    out.push_back(final);
    return;
  }
  for (const Gate& ng : step(g, alloc, set))
    expand_quantum(ng, alloc, set, classical, out);
}

}  // namespace

bool in_gate_set(const Gate& g, GateSet set) {
  if (!g.is<Named>() && !g.is<Rot>()) return true;
  std::size_t w = wires_touched(g);
  if (w <= 2) return true;
  return set == GateSet::Toffoli && w == 3 && is_toffoli(g);
}

Circuit decompose(const Circuit& c, GateSet set) {
  validate(c);
  auto rewrite_body = [&](const Circuit& body) {
    Circuit nb;
    nb.inputs = body.inputs;
    nb.outputs = body.outputs;
    WireAlloc alloc(max_wire_of(body));
    std::unordered_map<WireId, WireKind> kinds;
    for (const auto& [w, kd] : body.inputs) kinds[w] = kd;
    for (const Gate& g : body.gates) {
      if (g.is<Named>() || g.is<Rot>()) {
        Gate quantum = g;
        std::vector<Control> classical;
        quantum.controls.clear();
        for (const Control& ct : g.controls) {
          if (kinds.at(ct.wire) == WireKind::Classical)
            classical.push_back(ct);
          else
            quantum.controls.push_back(ct);
        }
        expand_quantum(quantum, alloc, set, classical, nb.gates);
      } else {
        nb.gates.push_back(g);
      }
      // kind bookkeeping
      if (g.is<QInit>()) kinds[g.operands[0]] = WireKind::Quantum;
      else if (g.is<CInit>()) kinds[g.operands[0]] = WireKind::Classical;
      else if (g.is<Meas>()) kinds[g.operands[0]] = WireKind::Classical;
      else if (const auto* call = g.as<SubCall>()) {
        const Circuit& sub = c.subroutines.at(call->name);
        const auto& bouts = g.inverted ? sub.inputs : sub.outputs;
        for (std::size_t j = 0; j < call->outs.size(); ++j)
          kinds[call->outs[j]] = bouts[j].second;
      }
    }
    return nb;
  };

  Circuit result = rewrite_body(c);
  for (const auto& [name, body] : c.subroutines)
    result.subroutines.emplace(name, rewrite_body(body));
  validate(result);
  return result;
}

Circuit decompose_binary(const Circuit& c) {
  return decompose(c, GateSet::Binary);
}

Circuit decompose_toffoli(const Circuit& c) {
  return decompose(c, GateSet::Toffoli);
}

}  // namespace quill
