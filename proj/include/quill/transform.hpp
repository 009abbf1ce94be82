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
#include <vector>

#include "quill/ir.hpp"

namespace quill {

struct UnsupportedGate : Error {
  using Error::Error;
};

/// Hands out fresh wire ids for scoped ancillas introduced by rewrite rules.
class WireAlloc {
 public:
  explicit WireAlloc(WireId first_free) : next_(first_free) {}
  WireId fresh() { return next_++; }
  WireId watermark() const { return next_; }

 private:
  WireId next_;
};

/// A per-gate rewrite rule. The returned sequence must be a valid expansion
/// over live wires plus properly scoped fresh ancillas.
using Rewrite = std::function<std::vector<Gate>(const Gate&, WireAlloc&)>;

/// Applies `rule` to every gate of the main body and of each subroutine,
/// gate by gate (the whole input is never materialized beyond one gate's
/// expansion). Subroutine call structure is preserved.
Circuit transform(const Circuit& c, const Rewrite& rule);

/// Streaming core: rewrites one gate at a time into `out`.
void transform_stream(const Gate& g, const Rewrite& rule,
                      WireAlloc& alloc,
                      const std::function<void(const Gate&)>& out);

enum class GateSet { Binary, Toffoli };

/// Rewrites a circuit so every gate touches at most two wires (Binary), or
/// at most two wires plus X with exactly two positive controls (Toffoli).
/// Multiply-controlled gates are reduced with scoped ancillas; the Toffoli
/// itself expands to the standard 15-gate H/T/CNOT network under Binary.
/// Classical controls are left attached to the expansion's quantum gates.
Circuit decompose_binary(const Circuit& c);
Circuit decompose_toffoli(const Circuit& c);
Circuit decompose(const Circuit& c, GateSet set);

/// True if g satisfies the arity bound of the gate set.
bool in_gate_set(const Gate& g, GateSet set);

}  // namespace quill
