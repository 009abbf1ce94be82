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

#include "quill/resources.hpp"

#include <algorithm>
#include <unordered_map>

namespace quill {

std::string gate_class(const Gate& g) {
  auto with_controls = [&](std::string base) {
    if (!g.controls.empty())
      base += ", " + std::to_string(g.controls.size()) +
              (g.controls.size() == 1 ? " control" : " controls");
    return base;
  };
  if (g.is<QInit>() || g.is<CInit>()) return "init";
  if (g.is<QTerm>()) return "term";
  if (g.is<CDiscard>()) return "discard";
  if (g.is<Meas>()) return "measure";
  if (const auto* n = g.as<Named>()) return with_controls(named_gate_name(n->name));
  if (const auto* r = g.as<Rot>())
    return with_controls("R(" + std::to_string(r->power) + ")");
  return "";  // comments and calls have no class of their own
}

namespace {

struct Counter {
  const std::map<std::string, Circuit>& subs;
  std::unordered_map<std::string, ResourceReport> memo;

  ResourceReport body_report(const Circuit& body) {
    ResourceReport rep;
    std::uint64_t live = body.inputs.size();
    rep.max_width = live;
    for (const Gate& g : body.gates) {
      if (g.is<CommentGate>()) continue;
      if (const auto* call = g.as<SubCall>()) {
        const ResourceReport& sub = report_of(call->name);
        BigInt reps = call->repetitions;
        for (const auto& [cls, n] : sub.gate_counts)
          rep.gate_counts[cls] += n * reps;
        rep.total += sub.total * reps;
        rep.ancillas += sub.ancillas * reps;
        rep.measurements += sub.measurements * reps;
        // The callee's ancillas are scoped within the call, so its peak
        // rides on top of what the caller holds live (minus the wires it
        // handed over, which the callee counts as its own inputs).
        const Circuit& body_sub = subs.at(call->name);
        std::uint64_t internal_peak =
            sub.max_width - std::min<std::uint64_t>(sub.max_width,
                                                    body_sub.inputs.size());
        rep.max_width = std::max(rep.max_width, live + internal_peak);
        live = live - call->ins.size() + call->outs.size();
        rep.max_width = std::max(rep.max_width, live);
        continue;
      }
      rep.gate_counts[gate_class(g)] += 1;
      rep.total += 1;
      if (g.is<QInit>()) rep.ancillas += 1;
      if (g.is<Meas>()) rep.measurements += 1;
      if (g.is<QInit>() || g.is<CInit>()) {
        ++live;
        rep.max_width = std::max(rep.max_width, live);
      } else if (g.is<QTerm>() || g.is<CDiscard>()) {
        --live;
      }
    }
    return rep;
  }

  const ResourceReport& report_of(const std::string& name) {
    auto it = memo.find(name);
    if (it != memo.end()) return it->second;
    ResourceReport rep = body_report(subs.at(name));
    return memo.emplace(name, std::move(rep)).first->second;
  }
};

}  // namespace

ResourceReport count(const Circuit& c) {
  Counter counter{c.subroutines, {}};
  return counter.body_report(c);
}

void StreamCounter::feed(const Gate& g) {
  if (g.is<CommentGate>()) return;
  if (g.is<SubCall>())
    throw Error("StreamCounter: subroutine calls require count()");
  report_.gate_counts[gate_class(g)] += 1;
  report_.total += 1;
  if (g.is<QInit>()) report_.ancillas += 1;
  if (g.is<Meas>()) report_.measurements += 1;
  if (g.is<QInit>() || g.is<CInit>()) {
    ++live_;
    report_.max_width = std::max(report_.max_width, live_);
  } else if (g.is<QTerm>() || g.is<CDiscard>()) {
    --live_;
  }
}

namespace {

struct Flattener {
  const std::map<std::string, Circuit>& subs;
  std::uint64_t max_gates;
  std::uint32_t depth;
  Circuit out;
  WireId next_fresh = 0;

  void push(Gate g) {
    if (out.gates.size() >= max_gates)
      throw SizeBound("flattened circuit exceeds the configured gate bound");
    out.gates.push_back(std::move(g));
  }

  // Emits `body` with wires renamed through `rename`; callee-internal wires
  // get fresh caller ids. `level` counts remaining expansion depth.
  void inline_body(const Circuit& body, bool inverted,
                   std::unordered_map<WireId, WireId> rename,
                   std::uint32_t level) {
    Circuit reversed;
    const Circuit& src = inverted ? (reversed = reverse_circuit(body)) : body;
    for (const Gate& g : src.gates) emit(g, rename, level);
    // The caller pinned the renaming of the outputs up front, so nothing
    // more to do here.
  }

  void emit(const Gate& g, std::unordered_map<WireId, WireId>& rename,
            std::uint32_t level) {
    Gate ng = g;
    auto mapped = [&](WireId w) -> WireId {
      auto it = rename.find(w);
      if (it != rename.end()) return it->second;
      WireId fresh = next_fresh++;
      rename.emplace(w, fresh);
      return fresh;
    };
    if (const auto* call = g.as<SubCall>(); call && level > 0) {
      const Circuit& body = subs.at(call->name);
      const auto& body_ins = g.inverted ? body.outputs : body.inputs;
      const auto& body_outs = g.inverted ? body.inputs : body.outputs;
      for (std::uint64_t r = 0; r < call->repetitions; ++r) {
        std::unordered_map<WireId, WireId> inner;
        for (std::size_t k = 0; k < call->ins.size(); ++k)
          inner[body_ins[k].first] = mapped(call->ins[k]);
        // Pin internal outputs to the ids the call gate promised (only on
        // the last repetition; repeated calls are strictly endomorphic, so
        // there are no internal outputs then).
        for (std::size_t j = 0; j < call->outs.size(); ++j)
          inner.emplace(body_outs[j].first, mapped(call->outs[j]));
        inline_body(body, g.inverted, std::move(inner), level - 1);
      }
      return;
    }
    for (WireId& w : ng.operands) w = mapped(w);
    for (Control& ct : ng.controls) ct.wire = mapped(ct.wire);
    if (auto* call = std::get_if<SubCall>(&ng.kind)) {
      for (WireId& w : call->ins) w = mapped(w);
      for (WireId& w : call->outs) w = mapped(w);
    }
    if (auto* com = std::get_if<CommentGate>(&ng.kind))
      for (auto& [w, l] : com->labels) w = mapped(w);
    push(std::move(ng));
  }
};

}  // namespace

Circuit flatten(const Circuit& c, std::uint32_t depth, std::uint64_t max_gates) {
  Flattener fl{c.subroutines, max_gates, depth, {}, 0};
  std::unordered_map<WireId, WireId> rename;
  for (const auto& [w, k] : c.inputs) {
    rename.emplace(w, fl.next_fresh);
    fl.out.inputs.emplace_back(fl.next_fresh++, k);
  }
  for (const Gate& g : c.gates) fl.emit(g, rename, depth);
  for (const auto& [w, k] : c.outputs)
    fl.out.outputs.emplace_back(rename.at(w), k);
  if (depth < UINT32_MAX) {
    // Partial flattening can leave calls behind; keep the namespace then.
    bool has_calls = false;
    for (const Gate& g : fl.out.gates)
      if (g.is<SubCall>()) has_calls = true;
    if (has_calls) fl.out.subroutines = c.subroutines;
  }
  return fl.out;
}

}  // namespace quill
