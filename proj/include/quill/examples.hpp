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

#include <cstddef>
#include <string>

#include "quill/builder.hpp"
#include "quill/ir.hpp"
#include "quill/ops.hpp"
#include "quill/shape.hpp"

namespace quill::examples {

// Builder-level pieces, reusable inside larger programs -----------------------

/// |+> or |-> preparation: fresh qubit in state b, then Hadamard.
Qubit plus_minus(Builder& b, bool value);

/// Entangles q with a fresh |0> qubit: a|0> + b|1>  ->  a|00> + b|11>.
std::pair<Qubit, Qubit> share(Builder& b, Qubit q);

/// A Bell pair (|00> + |11>)/sqrt(2).
std::pair<Qubit, Qubit> bell00(Builder& b);

/// Sender half of teleportation: entangle, rotate, measure both.
std::pair<Bit, Bit> alice(Builder& b, Qubit q, Qubit a);

/// Receiver half: classically controlled X and Z corrections, then discard
/// the measurement outcomes.
Qubit bob(Builder& b, Qubit target, std::pair<Bit, Bit> xy);

Qubit teleport_one(Builder& b, Qubit q);

/// Shape-generic teleportation: one protocol instance per leaf.
ShapeData teleport_shaped(Builder& b, const ShapeData& q);

/// Fourier transform over a register given most-significant-qubit first.
/// Internally reverses the register and runs the little-endian recursion.
std::vector<Qubit> qft_big_endian(Builder& b, std::vector<Qubit> qs);

/// The addition kernel between the two Fourier transforms: phase-rotates b
/// (already in the Fourier basis) by the value of a.
void qft_adder(Builder& b, const std::vector<Qubit>& as,
               const std::vector<Qubit>& bs);

// Whole circuits, as bundled with the command-line tool -----------------------

Circuit plus_minus_circuit(bool value = false);
Circuit share_circuit();
Circuit bell00_circuit();
Circuit alice_circuit();
Circuit bob_circuit();
Circuit teleport_circuit();
Circuit teleport_generic_circuit(const Shape& shape);

/// n-qubit Fourier transform over wires in most-significant-first order.
Circuit qft_circuit(std::size_t n);
Circuit qft_inverse_circuit(std::size_t n);

/// In-place Draper adder on two n-qubit little-endian registers (a, b):
/// (a, b) -> (a, (a + b) mod 2^n). _boxed names the Fourier transform as a
/// subroutine called twice (once inverted).
Circuit qft_add_circuit(std::size_t n);
Circuit qft_add_boxed_circuit(std::size_t n);

/// One-bit full adder (a, b, carry_in) -> (sum, carry_out) as a boolean
/// function, its quantum compilation, the Bennett-reversible version, and
/// the compilation decomposed to binary gates.
ClassicalFunction adder_function();
Circuit adder_circ();
Circuit adder_reversible_circuit();
Circuit adder_binary_circuit();

}  // namespace quill::examples
