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

#include <complex>
#include <cstdint>
#include <vector>

#include "quill/ir.hpp"

namespace quill {

struct NotClassical : Error {
  using Error::Error;
};
struct NotClifford : Error {
  using Error::Error;
};
struct AssertionFailed : Error {
  using Error::Error;
};
struct TooManyQubits : Error {
  using Error::Error;
};

/// Deterministic pseudo-random stream for measurement outcomes: splitmix64
/// (a 64-bit add-shift-multiply generator). The algorithm is fixed so that
/// seeded runs reproduce across platforms and languages.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Classical simulation

/// Deterministic boolean evaluation of a classical circuit (lifecycle gates,
/// X with any controls, Measure, Comment and calls thereof). Throws
/// NotClassical on any other gate, AssertionFailed on a violated QTerm.
/// Inputs and outputs follow the circuit's declared wire order.
std::vector<bool> sim_classical(const Circuit& c, const std::vector<bool>& inputs);

// ---------------------------------------------------------------------------
// Stabilizer simulation

/// Clifford-tableau simulation: gates restricted to H, S, X, Y, Z, the
/// singly-controlled X and Z, Rot(1)/Rot(2), Measure and lifecycle gates,
/// with classical controls allowed anywhere. Random measurement outcomes are
/// drawn from rng; remaining quantum outputs are measured at the end.
std::vector<bool> sim_stabilizer(const Circuit& c, const std::vector<bool>& inputs,
                                 Rng& rng);

// ---------------------------------------------------------------------------
// State-vector simulation

using Amplitude = std::complex<double>;

/// Dense state over the currently live quantum wires. The tensor-factor
/// order is allocation order with index compaction on termination: bit j of
/// an amplitude index belongs to wires[j].
struct StateVector {
  std::vector<WireId> wires;
  std::vector<Amplitude> amps;

  std::size_t size() const { return amps.size(); }
  std::size_t bit_of(WireId w) const;
};

/// Full simulation with measurement sampling; final quantum outputs are
/// measured. Throws TooManyQubits above max_qubits live quantum wires.
std::vector<bool> sim_vector(const Circuit& c, const std::vector<bool>& inputs,
                             Rng& rng, int max_qubits = 20);

/// Measurement-free run from a basis input, returning the final state.
StateVector sim_vector_state(const Circuit& c, const std::vector<bool>& inputs,
                             int max_qubits = 20);

/// Run from an arbitrary prepared state over the circuit's input wires
/// (order matching c.inputs). Measurements sample from rng.
StateVector sim_vector_from(const Circuit& c, const StateVector& initial,
                            Rng& rng, int max_qubits = 20);

/// Row-major complex matrix; square for unitaries, rows > cols for the
/// isometry of a circuit whose initialized ancillas persist to the outputs.
struct Unitary {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Amplitude> entries;

  std::size_t dim() const { return cols; }
  Amplitude& at(std::size_t row, std::size_t col) {
    return entries[row * cols + col];
  }
  const Amplitude& at(std::size_t row, std::size_t col) const {
    return entries[row * cols + col];
  }
};

/// The 2^m x 2^n matrix implemented by a measurement-free circuit with n
/// quantum inputs and m >= n quantum outputs (m = n when every initialized
/// ancilla is terminated again). Basis convention is big-endian over the
/// declared wire order: input wire 0 carries the most significant bit of the
/// column index, and output wire 0 the most significant bit of the row
/// index. A QTerm whose discarded amplitude mass exceeds 1e-9 raises
/// AssertionFailed.
Unitary circuit_unitary(const Circuit& c, int max_qubits = 10);

/// max |a_ij - b_ij| after aligning a global phase.
double unitary_distance(const Unitary& a, const Unitary& b);

}  // namespace quill
