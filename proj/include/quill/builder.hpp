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
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "quill/ir.hpp"
#include "quill/shape.hpp"

namespace quill {

struct EmissionError : Error {
  using Error::Error;
};

/// A program that builds a circuit from qubit-shaped input data.
using Program = std::function<ShapeData(Builder&, ShapeData)>;

/// Metadata kept alongside a boxed subroutine body so that callers can map
/// their argument tree onto the body's wires.
struct BoxedSub {
  Circuit body;
  Shape in_shape;
  Shape out_shape;
};

/// The emission context: programs call primitive operations against a
/// Builder, which checks liveness at emission time and hands each gate to a
/// sink in program order. With a streaming sink no gate list is retained, so
/// memory stays proportional to the number of live wires.
class Builder {
 public:
  using Sink = std::function<void(const Gate&)>;

  explicit Builder(Sink sink);

  // -- primitives -----------------------------------------------------------

  Qubit qinit(bool value);
  Bit cinit(bool value);
  void qterm(Qubit q, bool assertion);
  void cdiscard(Bit b);
  Bit measure(Qubit q);

  /// Applies one of H,X,Y,Z,S,T to q, optionally controlled. Control wires
  /// may be quantum or classical.
  Qubit apply_named(NamedGate name, Qubit q, const std::vector<Control>& ctrls = {},
                    bool inverted = false);
  Qubit apply_rot(std::uint32_t power, Qubit q,
                  const std::vector<Control>& ctrls = {}, bool inverted = false);

  void comment_with_label(const std::string& text,
                          const std::vector<std::pair<WireId, std::string>>& labels);
  void label(const std::vector<std::pair<WireId, std::string>>& labels) {
    comment_with_label("", labels);
  }

  Control ctrl(Qubit q, bool positive = true) const { return {q.wire, positive}; }
  Control ctrl(Bit b, bool positive = true) const { return {b.wire, positive}; }

  // -- wire bookkeeping -----------------------------------------------------

  bool is_live(WireId w) const { return live_.count(w) != 0; }
  WireKind kind_of(WireId w) const;
  std::size_t live_count() const { return live_.size(); }
  /// All live wires in ascending id order.
  std::vector<std::pair<WireId, WireKind>> live_wires() const;
  WireId next_wire() const { return next_; }

  /// Emits a pre-formed gate after running the same checks validate would.
  /// Init gates and fresh subroutine-call outputs must reference wires
  /// obtained from allocate(); use qinit/cinit for the common path.
  void emit(const Gate& g);

  /// Allocates a fresh wire of the given kind without emitting a gate (used
  /// when inlining circuits and emitting subroutine calls).
  WireId allocate(WireKind k);

  // -- recording (with_computed) --------------------------------------------

  /// Every gate emitted while at least one recorder is active is appended to
  /// all active recorders, innermost last.
  void push_recorder();
  std::vector<Gate> pop_recorder();
  std::size_t recorder_depth() const { return recorders_.size(); }

  // -- subroutine namespace -------------------------------------------------

  std::map<std::string, BoxedSub>& boxes() { return *boxes_; }
  const std::map<std::string, BoxedSub>& boxes() const { return *boxes_; }

  /// A child builder sharing this builder's subroutine namespace, for
  /// generating subroutine bodies in a fresh wire id space.
  static Builder child_of(Builder& parent, Sink sink);

 private:
  WireId next_ = 0;
  std::unordered_map<WireId, WireKind> live_;
  Sink sink_;
  std::vector<std::vector<Gate>> recorders_;
  std::shared_ptr<std::map<std::string, BoxedSub>> boxes_;

  WireKind require_live(WireId w, const char* what) const;
  void check_gate(const Gate& g);
};

/// Runs `program` on freshly allocated qubit wires of the given shape and
/// collects the result into a validated Circuit.
Circuit extract(const Shape& input_shape, const Program& program);

/// Streaming variant: gates reach `sink` as they are emitted; nothing is
/// accumulated. Returns the i/o wire lists (what extract would record).
struct ExtractSignature {
  std::vector<std::pair<WireId, WireKind>> inputs;
  std::vector<std::pair<WireId, WireKind>> outputs;
  Shape out_shape;
};
ExtractSignature extract_streaming(const Shape& input_shape,
                                   const Program& program, Builder::Sink sink);

/// Extraction into a standalone circuit that shares `parent`'s subroutine
/// namespace; used for boxed subroutine bodies and circuit-level operators.
/// The result's subroutines map is left empty.
Circuit extract_shared(Builder& parent, const Shape& input_shape,
                       const Program& program, Shape* out_shape = nullptr);

/// Appends a standalone circuit into an ongoing build, renaming its wires:
/// circuit inputs map onto `args`, internal wires onto fresh ids. Returns
/// the wires corresponding to the circuit's outputs.
std::vector<WireId> append_circuit(Builder& b, const Circuit& c,
                                   const std::vector<WireId>& args);

}  // namespace quill
