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

#include <unordered_map>

#include "quill/resources.hpp"
#include "quill/sim.hpp"

namespace quill {

namespace {

bool controls_fire(const Gate& g,
                   const std::unordered_map<WireId, bool>& state) {
  for (const Control& c : g.controls)
    if (state.at(c.wire) != c.positive) return false;
  return true;
}

}  // namespace

std::vector<bool> sim_classical(const Circuit& circuit,
                                const std::vector<bool>& inputs) {
  const Circuit c =
      circuit.subroutines.empty() ? circuit : flatten(circuit);
  if (inputs.size() != c.inputs.size())
    throw Error("input bit count differs from circuit inputs");
  std::unordered_map<WireId, bool> state;
  for (std::size_t i = 0; i < inputs.size(); ++i)
    state[c.inputs[i].first] = inputs[i];

  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (const auto* x = g.as<QInit>()) {
      state[g.operands[0]] = x->value;
    } else if (const auto* x = g.as<CInit>()) {
      state[g.operands[0]] = x->value;
    } else if (const auto* x = g.as<QTerm>()) {
      if (state.at(g.operands[0]) != x->assertion)
        throw AssertionFailed("QTerm assertion violated at gate " +
                              std::to_string(i));
      state.erase(g.operands[0]);
    } else if (g.is<CDiscard>()) {
      state.erase(g.operands[0]);
    } else if (g.is<Meas>() || g.is<CommentGate>()) {
      // identity on the boolean value
    } else if (const auto* n = g.as<Named>()) {
      if (n->name != NamedGate::X)
        throw NotClassical("gate " + std::to_string(i) + " (" +
                           named_gate_name(n->name) +
                           ") is not classically simulable");
      if (controls_fire(g, state))
        state[g.operands[0]] = !state.at(g.operands[0]);
    } else {
      throw NotClassical("gate " + std::to_string(i) +
                         " is not classically simulable");
    }
  }

  std::vector<bool> out;
  for (const auto& [w, k] : c.outputs) out.push_back(state.at(w));
  return out;
}

}  // namespace quill
